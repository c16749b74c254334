#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "fingertrace/blob.hpp"
#include "fingertrace/color.hpp"
#include "fingertrace/geometry.hpp"

namespace fingertrace {

/// Every tunable the pipeline needs. Defaults are a documented starting
/// point; runs that need determinism pin their own values.
struct RunConfig {
    SkinBand band;                    // HSV acceptance band
    int smooth_kernel = 3;            // averaging filter size, odd
    double smooth_cutoff = 0.5;       // binarization cutoff in (0,1)
    Connectivity connectivity = Connectivity::Eight;
    double slope_factor = 0.15;       // wrist-cut threshold as a fraction of the
                                      // histogram's maximum possible count
    int tip_threshold = 235;          // ramp value a fingertip candidate must reach
    int min_cluster = 2;              // smallest accepted candidate cluster
    double min_separation = 8.0;      // tip spacing in px at 640x480, scaled by diagonal
    int max_tips = 5;
    std::array<std::uint8_t, 3> marker_color{255, 0, 0};

    /// Absolute slope threshold for a mask of the given size.
    double slope_threshold_for(WristSide wrist_side, int width, int height) const;
    /// min_separation scaled from the 640x480 reference diagonal (800 px).
    double min_separation_for(int width, int height) const;

    void validate() const;  // throws Error on out-of-range values
};

/// Parses flat `key = value` text (# comments, blank lines allowed) on top
/// of the defaults. Unknown keys are errors.
RunConfig parse_config(const std::string& text);

/// Loads `path` if nonempty, else $FINGERTRACE_CONFIG if set, else defaults.
RunConfig load_config(const std::string& path);

std::string config_to_string(const RunConfig& config);

}  // namespace fingertrace
