#include "fingertrace/reference.hpp"

#include <algorithm>
#include <cmath>

namespace fingertrace::serial {

BinaryMask skin_mask(const RgbImage& img, const SkinBand& band) {
    BinaryMask mask(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const auto p = img.at(x, y);
            mask.set(x, y, band.contains(rgb_to_hsv(p[0], p[1], p[2])) ? 1 : 0);
        }
    return mask;
}

BinaryMask smooth_mask(const BinaryMask& mask, int kernel, double cutoff) {
    if (kernel < 1 || kernel % 2 == 0) throw BadKernel(kernel);
    if (!(cutoff > 0.0 && cutoff < 1.0)) throw Error("smooth_mask: cutoff must be in (0,1)");
    const int w = mask.width;
    const int h = mask.height;
    const int r = kernel / 2;
    const double threshold = cutoff * kernel * kernel;
    BinaryMask out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int sum = 0;
            for (int dy = -r; dy <= r; ++dy)
                for (int dx = -r; dx <= r; ++dx)
                    sum += mask.at(std::clamp(x + dx, 0, w - 1), std::clamp(y + dy, 0, h - 1));
            out.set(x, y, static_cast<double>(sum) >= threshold ? 1 : 0);
        }
    return out;
}

ProjectionHistogram project(const BinaryMask& mask, Axis axis) {
    ProjectionHistogram hist;
    hist.axis = axis;
    hist.counts.assign(axis == Axis::Rows ? mask.height : mask.width, 0);
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            if (mask.at(x, y)) ++hist.counts[axis == Axis::Rows ? y : x];
    return hist;
}

GrayImage intensity_ramp(const BinaryMask& mask, WristSide wrist_side, std::uint64_t* visited) {
    const int w = mask.width;
    const int h = mask.height;
    const bool vertical = wrist_side == WristSide::Top || wrist_side == WristSide::Bottom;
    const int extent = vertical ? h : w;
    GrayImage ramp(w, h);
    bool any = false;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (visited) ++*visited;
            if (!mask.at(x, y)) continue;
            any = true;
            int rank;
            switch (wrist_side) {
                case WristSide::Top: rank = y + 1; break;
                case WristSide::Bottom: rank = h - y; break;
                case WristSide::Left: rank = x + 1; break;
                case WristSide::Right: rank = w - x; break;
                default: rank = y + 1; break;
            }
            const long v = std::lround(rank * 255.0 / extent);
            ramp.set(x, y, static_cast<std::uint8_t>(std::max(1L, v)));
        }
    if (!any) throw NoForeground();
    return ramp;
}

}  // namespace fingertrace::serial
