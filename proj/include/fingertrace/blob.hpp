#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fingertrace/image.hpp"

namespace fingertrace {

enum class Connectivity : int { Four = 4, Eight = 8 };

struct Blob {
    int label = 0;           // label used in the LabelMap, dense 1..k
    std::int64_t area = 0;   // pixel count
    CropRect bbox;           // inclusive bounds of the component
};

struct LabelMap {
    int width = 0;
    int height = 0;
    std::vector<std::int32_t> labels;  // 0 = background

    LabelMap() = default;
    LabelMap(int w, int h) : width(w), height(h), labels(static_cast<std::size_t>(w) * h, 0) {}
    std::int32_t at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
};

/// Two-pass labeling. Labels are dense 1..k in row-major first-encounter
/// order; the blob list is sorted by descending area, ties by smaller label.
std::pair<LabelMap, std::vector<Blob>> label_components(const BinaryMask& mask,
                                                        Connectivity connectivity);

/// Keeps only the maximum-area component (area ties: smaller label, i.e. the
/// component whose top-left-most pixel comes first in row-major order).
/// Throws NoForeground on an empty silhouette.
std::pair<BinaryMask, Blob> largest_blob_mask(const BinaryMask& mask, Connectivity connectivity);

}  // namespace fingertrace
