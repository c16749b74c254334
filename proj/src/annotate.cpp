#include "fingertrace/annotate.hpp"

#include <algorithm>

namespace fingertrace {

namespace {

void put(RgbImage& img, int x, int y, const std::array<std::uint8_t, 3>& c) {
    if (x < 0 || x >= img.width || y < 0 || y >= img.height) return;
    img.set(x, y, c[0], c[1], c[2]);
}

}  // namespace

RgbImage annotate(const RgbImage& frame, const DetectionResult& result,
                  const std::array<std::uint8_t, 3>& color) {
    RgbImage out = frame;
    const CropRect& r = result.crop;
    for (int x = r.xmin; x <= r.xmax; ++x) {
        put(out, x, r.ymin, color);
        put(out, x, r.ymax, color);
    }
    for (int y = r.ymin; y <= r.ymax; ++y) {
        put(out, r.xmin, y, color);
        put(out, r.xmax, y, color);
    }
    for (const Fingertip& tip : result.tips)
        for (int dy = -2; dy <= 2; ++dy)
            for (int dx = -2; dx <= 2; ++dx) put(out, tip.x + dx, tip.y + dy, color);
    return out;
}

}  // namespace fingertrace
