#pragma once

#include <cstdint>

#include "fingertrace/image.hpp"

namespace fingertrace {

/// Hue in degrees [0,360), saturation and value in [0,1]. Grays carry h = 0.
struct HsvPixel {
    double h = 0.0;
    double s = 0.0;
    double v = 0.0;
};

/// Inclusive HSV acceptance band. h_lo > h_hi means the hue interval wraps
/// through 0 degrees.
struct SkinBand {
    double h_lo = 0.0;
    double h_hi = 50.0;
    double s_lo = 0.23;
    double s_hi = 0.68;
    double v_lo = 0.35;
    double v_hi = 1.0;

    bool contains(const HsvPixel& p) const {
        const bool h_ok = h_lo <= h_hi ? (p.h >= h_lo && p.h <= h_hi) : (p.h >= h_lo || p.h <= h_hi);
        return h_ok && p.s >= s_lo && p.s <= s_hi && p.v >= v_lo && p.v <= v_hi;
    }
};

/// Standard hexcone conversion: v = max/255, s = (max-min)/max (0 if max = 0).
HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Per-pixel band test; output has the input's dimensions.
BinaryMask skin_mask(const RgbImage& img, const SkinBand& band);

/// Averaging filter binarized at `cutoff`: output bit = 1 iff the mean of the
/// kernel x kernel neighborhood (borders clamped to the edge) reaches cutoff.
/// kernel must be odd and >= 1; 0 < cutoff < 1.
BinaryMask smooth_mask(const BinaryMask& mask, int kernel, double cutoff);

}  // namespace fingertrace
