#pragma once

#include <array>
#include <cstdint>

#include "fingertrace/fingertip.hpp"
#include "fingertrace/image.hpp"

namespace fingertrace {

// Draws the crop rectangle outline and a filled 5x5 square on every tip,
// clipped to the frame. Returns a copy; the input frame is untouched.
RgbImage annotate(const RgbImage& frame, const DetectionResult& result,
                  const std::array<std::uint8_t, 3>& color);

}  // namespace fingertrace
