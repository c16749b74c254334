#include "fingertrace/blob.hpp"

#include <algorithm>
#include <numeric>

namespace fingertrace {

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;

    std::int32_t make() {
        parent.push_back(static_cast<std::int32_t>(parent.size()));
        return parent.back();
    }
    std::int32_t find(std::int32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // Keep the smaller root so final labels follow first-encounter order.
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

}  // namespace

std::pair<LabelMap, std::vector<Blob>> label_components(const BinaryMask& mask,
                                                        Connectivity connectivity) {
    const int w = mask.width;
    const int h = mask.height;
    LabelMap map(w, h);
    UnionFind uf;
    uf.make();  // slot 0 = background

    // First pass: provisional labels, merging with the already-visited
    // west/north (and diagonal, for 8-connectivity) neighbors.
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.at(x, y)) continue;
            std::int32_t neighbors[4];
            int n = 0;
            if (x > 0 && map.at(x - 1, y)) neighbors[n++] = map.at(x - 1, y);
            if (y > 0) {
                if (map.at(x, y - 1)) neighbors[n++] = map.at(x, y - 1);
                if (connectivity == Connectivity::Eight) {
                    if (x > 0 && map.at(x - 1, y - 1)) neighbors[n++] = map.at(x - 1, y - 1);
                    if (x + 1 < w && map.at(x + 1, y - 1)) neighbors[n++] = map.at(x + 1, y - 1);
                }
            }
            std::int32_t label;
            if (n == 0) {
                label = uf.make();
            } else {
                label = *std::min_element(neighbors, neighbors + n);
                for (int i = 0; i < n; ++i) uf.unite(label, neighbors[i]);
            }
            map.labels[static_cast<std::size_t>(y) * w + x] = label;
        }
    }

    // Compress provisional labels to dense 1..k in first-encounter order.
    std::vector<std::int32_t> dense(uf.parent.size(), 0);
    std::int32_t next = 0;
    std::vector<Blob> blobs;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::int32_t& cell = map.labels[static_cast<std::size_t>(y) * w + x];
            if (!cell) continue;
            const std::int32_t root = uf.find(cell);
            if (dense[root] == 0) {
                dense[root] = ++next;
                blobs.push_back(Blob{dense[root], 0, CropRect{x, x, y, y}});
            }
            cell = dense[root];
            Blob& b = blobs[static_cast<std::size_t>(cell) - 1];
            b.area += 1;
            b.bbox.xmin = std::min(b.bbox.xmin, x);
            b.bbox.xmax = std::max(b.bbox.xmax, x);
            b.bbox.ymin = std::min(b.bbox.ymin, y);
            b.bbox.ymax = std::max(b.bbox.ymax, y);
        }
    }

    std::sort(blobs.begin(), blobs.end(), [](const Blob& a, const Blob& b) {
        return a.area != b.area ? a.area > b.area : a.label < b.label;
    });
    return {std::move(map), std::move(blobs)};
}

std::pair<BinaryMask, Blob> largest_blob_mask(const BinaryMask& mask, Connectivity connectivity) {
    auto [map, blobs] = label_components(mask, connectivity);
    if (blobs.empty()) throw NoForeground();
    const Blob& biggest = blobs.front();
    BinaryMask out(mask.width, mask.height);
    for (std::size_t i = 0; i < out.bits.size(); ++i)
        out.bits[i] = map.labels[i] == biggest.label ? 1 : 0;
    return {std::move(out), biggest};
}

}  // namespace fingertrace
