#pragma once

#include <cstdint>

#include "fingertrace/color.hpp"
#include "fingertrace/geometry.hpp"
#include "fingertrace/image.hpp"

namespace fingertrace::serial {

// Plain single-threaded, definition-level implementations of the pixel
// kernels. They are the comparison baseline for the parallel versions:
// tests assert exact agreement and bench/ measures the difference.
// smooth_mask here evaluates every kernel window naively instead of using
// the separable sliding sums of the main implementation.

BinaryMask skin_mask(const RgbImage& img, const SkinBand& band);
BinaryMask smooth_mask(const BinaryMask& mask, int kernel, double cutoff);
ProjectionHistogram project(const BinaryMask& mask, Axis axis);
GrayImage intensity_ramp(const BinaryMask& mask, WristSide wrist_side,
                         std::uint64_t* visited = nullptr);

}  // namespace fingertrace::serial
