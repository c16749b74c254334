#pragma once

#include <cstdint>
#include <vector>

#include "fingertrace/config.hpp"
#include "fingertrace/geometry.hpp"
#include "fingertrace/image.hpp"

namespace fingertrace {

/// One detected fingertip in original-frame coordinates.
struct Fingertip {
    int x = 0;
    int y = 0;
    int ramp_value = 0;    // 1..255, distance-from-wrist rank at the tip
    int cluster_size = 0;  // pixels in the candidate cluster that produced it
    bool operator==(const Fingertip&) const = default;
};

struct DetectionResult {
    WristSide direction = WristSide::Bottom;
    bool ambiguous_direction = false;
    bool no_wrist_cut = false;  // histogram had no steep inclination; tight-box fallback
    CropRect crop;
    std::vector<Fingertip> tips;  // sorted along the axis perpendicular to the scan
};

/// Wall time per pipeline stage for one frame, plus the ramp stage's pixel
/// visit counter (it must only ever touch crop pixels).
struct StageTimings {
    double skin_ms = 0;
    double smooth_ms = 0;
    double blob_ms = 0;
    double wrist_ms = 0;
    double crop_ms = 0;
    double ramp_ms = 0;
    double tips_ms = 0;
    double total_ms = 0;
    std::uint64_t ramp_pixels_visited = 0;
};

/// Foreground count per line along the wrist-to-finger scan axis, ordered
/// from the wrist line outward.
std::vector<int> scanline_profile(const BinaryMask& mask, WristSide wrist_side);

/// Distance-from-wrist ranks over a cropped mask: the line at 1-based scan
/// position d of D total lines gets round(d * 255 / D) (floored at 1);
/// background stays 0. Throws NoForeground.
/// `visited`, when given, accumulates the number of pixel reads.
GrayImage intensity_ramp(const BinaryMask& mask, WristSide wrist_side,
                         std::uint64_t* visited = nullptr);

/// Candidate mask: bit = 1 iff ramp value >= tip_threshold (1..255).
BinaryMask finger_edge_mask(const GrayImage& ramp, int tip_threshold);

struct TipParams {
    int min_cluster = 2;
    double min_separation = 8.0;  // along the cross axis, in pixels
    int max_tips = 5;
};

/// Collapses 8-connected candidate clusters of size >= min_cluster to one
/// tip each (max-ramp pixel; ties resolved by the rounded centroid of the
/// tied pixels), drops tips closer than min_separation along the cross axis
/// (higher ramp wins), and keeps at most max_tips by ramp value. Returned
/// tips are in the candidate mask's coordinate space, sorted along the
/// cross axis.
std::vector<Fingertip> locate_fingertips(const BinaryMask& candidates, const GrayImage& ramp,
                                         WristSide wrist_side, const TipParams& params);

/// Full pipeline: skin filter, smoothing, biggest blob, wrist scan,
/// histogram-slope crop, intensity ramp, tip localization. Tip coordinates
/// are translated back to the original frame.
DetectionResult detect(const RgbImage& frame, const RunConfig& config,
                       StageTimings* timings = nullptr);

}  // namespace fingertrace
