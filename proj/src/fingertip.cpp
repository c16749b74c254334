#include "fingertrace/fingertip.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "fingertrace/blob.hpp"
#include "fingertrace/parallel.hpp"

namespace fingertrace {

std::vector<int> scanline_profile(const BinaryMask& mask, WristSide wrist_side) {
    const Axis axis =
        (wrist_side == WristSide::Top || wrist_side == WristSide::Bottom) ? Axis::Rows : Axis::Columns;
    ProjectionHistogram hist = project(mask, axis);
    if (wrist_side == WristSide::Bottom || wrist_side == WristSide::Right)
        std::reverse(hist.counts.begin(), hist.counts.end());
    return std::move(hist.counts);
}

namespace {

// 1-based distance of line index i from the wrist end, for a crop of
// extent `len` along the scan axis.
inline int line_rank(WristSide wrist_side, int i, int len) {
    switch (wrist_side) {
        case WristSide::Top:
        case WristSide::Left: return i + 1;
        case WristSide::Bottom:
        case WristSide::Right: return len - i;
    }
    return i + 1;
}

inline std::uint8_t ramp_value(int rank, int extent) {
    const long v = std::lround(rank * 255.0 / extent);
    return static_cast<std::uint8_t>(std::max(1L, v));
}

}  // namespace

GrayImage intensity_ramp(const BinaryMask& mask, WristSide wrist_side, std::uint64_t* visited) {
    const int w = mask.width;
    const int h = mask.height;
    const bool vertical = wrist_side == WristSide::Top || wrist_side == WristSide::Bottom;
    const int extent = vertical ? h : w;

    GrayImage ramp(w, h);
    std::uint64_t reads = 0;
    bool any = false;
#pragma omp parallel for schedule(static) reduction(+ : reads) reduction(|| : any)
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* src = mask.bits.data() + static_cast<std::size_t>(y) * w;
        std::uint8_t* dst = ramp.values.data() + static_cast<std::size_t>(y) * w;
        const std::uint8_t row_value = vertical ? ramp_value(line_rank(wrist_side, y, h), extent) : 0;
        for (int x = 0; x < w; ++x) {
            ++reads;
            if (!src[x]) continue;
            any = true;
            dst[x] = vertical ? row_value : ramp_value(line_rank(wrist_side, x, w), extent);
        }
    }
    if (!any) throw NoForeground();
    if (visited) *visited += reads;
    return ramp;
}

BinaryMask finger_edge_mask(const GrayImage& ramp, int tip_threshold) {
    if (tip_threshold < 1 || tip_threshold > 255)
        throw Error("finger_edge_mask: tip_threshold must be in 1..255");
    BinaryMask out(ramp.width, ramp.height);
    for (std::size_t i = 0; i < ramp.values.size(); ++i)
        out.bits[i] = ramp.values[i] >= tip_threshold ? 1 : 0;
    return out;
}

namespace {

struct TipCandidate {
    Fingertip tip;    // coordinates in candidate-mask space
    int cross = 0;    // coordinate along the cross axis
    int along = 0;    // coordinate along the scan axis (for deterministic ordering)
};

}  // namespace

std::vector<Fingertip> locate_fingertips(const BinaryMask& candidates, const GrayImage& ramp,
                                         WristSide wrist_side, const TipParams& params) {
    const auto [map, blobs] = label_components(candidates, Connectivity::Eight);
    const bool vertical = wrist_side == WristSide::Top || wrist_side == WristSide::Bottom;

    std::vector<TipCandidate> tips;
    tips.reserve(blobs.size());
    for (const Blob& blob : blobs) {
        if (blob.area < params.min_cluster) continue;

        int best = -1;
        long sum_x = 0, sum_y = 0, ties = 0;
        for (int y = blob.bbox.ymin; y <= blob.bbox.ymax; ++y)
            for (int x = blob.bbox.xmin; x <= blob.bbox.xmax; ++x) {
                if (map.at(x, y) != blob.label) continue;
                const int v = ramp.at(x, y);
                if (v > best) {
                    best = v;
                    sum_x = x;
                    sum_y = y;
                    ties = 1;
                } else if (v == best) {
                    sum_x += x;
                    sum_y += y;
                    ++ties;
                }
            }

        TipCandidate cand;
        cand.tip.x = static_cast<int>(std::lround(static_cast<double>(sum_x) / ties));
        cand.tip.y = static_cast<int>(std::lround(static_cast<double>(sum_y) / ties));
        cand.tip.ramp_value = best;
        cand.tip.cluster_size = static_cast<int>(blob.area);
        cand.cross = vertical ? cand.tip.x : cand.tip.y;
        cand.along = vertical ? cand.tip.y : cand.tip.x;
        tips.push_back(cand);
    }

    // Strongest ramp first; deterministic order for equal-strength tips.
    std::sort(tips.begin(), tips.end(), [](const TipCandidate& a, const TipCandidate& b) {
        if (a.tip.ramp_value != b.tip.ramp_value) return a.tip.ramp_value > b.tip.ramp_value;
        if (a.tip.cluster_size != b.tip.cluster_size) return a.tip.cluster_size > b.tip.cluster_size;
        if (a.cross != b.cross) return a.cross < b.cross;
        return a.along < b.along;
    });

    // Merge tips crowding the same cross-axis position: the stronger one,
    // already kept, absorbs the weaker.
    std::vector<TipCandidate> kept;
    for (const TipCandidate& cand : tips) {
        const bool crowded = std::any_of(kept.begin(), kept.end(), [&](const TipCandidate& k) {
            return std::abs(k.cross - cand.cross) < params.min_separation;
        });
        if (!crowded) kept.push_back(cand);
        if (static_cast<int>(kept.size()) == params.max_tips) break;
    }

    std::sort(kept.begin(), kept.end(), [](const TipCandidate& a, const TipCandidate& b) {
        return a.cross != b.cross ? a.cross < b.cross : a.along < b.along;
    });
    std::vector<Fingertip> out;
    out.reserve(kept.size());
    for (const TipCandidate& cand : kept) out.push_back(cand.tip);
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

DetectionResult detect(const RgbImage& frame, const RunConfig& config, StageTimings* timings) {
    StageTimings local;
    const auto total_start = Clock::now();

    auto t = Clock::now();
    BinaryMask mask = skin_mask(frame, config.band);
    local.skin_ms = ms_since(t);

    t = Clock::now();
    mask = smooth_mask(mask, config.smooth_kernel, config.smooth_cutoff);
    local.smooth_ms = ms_since(t);

    t = Clock::now();
    auto [hand, blob] = largest_blob_mask(mask, config.connectivity);
    local.blob_ms = ms_since(t);

    t = Clock::now();
    const WristScan scan = detect_wrist_side(hand);
    local.wrist_ms = ms_since(t);

    DetectionResult result;
    result.direction = scan.wrist_side;
    result.ambiguous_direction = scan.ambiguous;

    t = Clock::now();
    const bool vertical = scan.wrist_side == WristSide::Top || scan.wrist_side == WristSide::Bottom;
    const ProjectionHistogram hist = project(hand, vertical ? Axis::Rows : Axis::Columns);
    const double threshold =
        config.slope_threshold_for(scan.wrist_side, hand.width, hand.height);
    std::optional<int> cut = find_wrist_cut(hist, scan.wrist_side, threshold);
    if (!cut) {
        result.no_wrist_cut = true;
        // Fall back to the tight bounding box: cut at the extreme
        // wrist-side line of the foreground.
        switch (scan.wrist_side) {
            case WristSide::Bottom: cut = blob.bbox.ymax; break;
            case WristSide::Top: cut = blob.bbox.ymin; break;
            case WristSide::Left: cut = blob.bbox.xmin; break;
            case WristSide::Right: cut = blob.bbox.xmax; break;
        }
    }
    auto [cropped, rect] = crop_hand(hand, scan.wrist_side, *cut);
    result.crop = rect;
    local.crop_ms = ms_since(t);

    t = Clock::now();
    const GrayImage ramp = intensity_ramp(cropped, scan.wrist_side, &local.ramp_pixels_visited);
    local.ramp_ms = ms_since(t);

    t = Clock::now();
    const BinaryMask candidates = finger_edge_mask(ramp, config.tip_threshold);
    TipParams params;
    params.min_cluster = config.min_cluster;
    params.min_separation = config.min_separation_for(frame.width, frame.height);
    params.max_tips = config.max_tips;
    result.tips = locate_fingertips(candidates, ramp, scan.wrist_side, params);
    for (Fingertip& tip : result.tips) {
        tip.x += rect.xmin;
        tip.y += rect.ymin;
    }
    local.tips_ms = ms_since(t);

    local.total_ms = ms_since(total_start);
    if (timings) *timings = local;
    return result;
}

}  // namespace fingertrace
