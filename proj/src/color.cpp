#include "fingertrace/color.hpp"

#include <algorithm>
#include <vector>

#include "fingertrace/parallel.hpp"

namespace fingertrace {

HsvPixel rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const int mx = std::max({r, g, b});
    const int mn = std::min({r, g, b});
    const int delta = mx - mn;

    HsvPixel out;
    out.v = mx / 255.0;
    if (mx == 0 || delta == 0) return out;  // black or gray: h = 0, s well-defined
    out.s = static_cast<double>(delta) / mx;

    double h;
    if (mx == r)
        h = 60.0 * (g - b) / delta;
    else if (mx == g)
        h = 60.0 * (2.0 + static_cast<double>(b - r) / delta);
    else
        h = 60.0 * (4.0 + static_cast<double>(r - g) / delta);
    if (h < 0) h += 360.0;
    if (h >= 360.0) h -= 360.0;
    out.h = h;
    return out;
}

BinaryMask skin_mask(const RgbImage& img, const SkinBand& band) {
    BinaryMask mask(img.width, img.height);
    const int w = img.width;
#pragma omp parallel for schedule(static)
    for (int y = 0; y < img.height; ++y) {
        const std::uint8_t* row = img.pixels.data() + static_cast<std::size_t>(y) * w * 3;
        std::uint8_t* out = mask.bits.data() + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            const HsvPixel p = rgb_to_hsv(row[3 * x], row[3 * x + 1], row[3 * x + 2]);
            out[x] = band.contains(p) ? 1 : 0;
        }
    }
    return mask;
}

BinaryMask smooth_mask(const BinaryMask& mask, int kernel, double cutoff) {
    if (kernel < 1 || kernel % 2 == 0) throw BadKernel(kernel);
    if (!(cutoff > 0.0 && cutoff < 1.0)) throw Error("smooth_mask: cutoff must be in (0,1)");
    if (kernel == 1) return mask;

    const int w = mask.width;
    const int h = mask.height;
    const int r = kernel / 2;
    const auto clampx = [w](int x) { return std::clamp(x, 0, w - 1); };
    const auto clampy = [h](int y) { return std::clamp(y, 0, h - 1); };

    // Separable box sums with clamp-to-edge replication: out-of-range taps
    // re-read the nearest edge pixel, so edge samples are counted repeatedly.
    std::vector<std::int32_t> rowsum(static_cast<std::size_t>(w) * h);
#pragma omp parallel for schedule(static)
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* src = mask.bits.data() + static_cast<std::size_t>(y) * w;
        std::int32_t* dst = rowsum.data() + static_cast<std::size_t>(y) * w;
        std::int32_t s = 0;
        for (int dx = -r; dx <= r; ++dx) s += src[clampx(dx)];
        dst[0] = s;
        for (int x = 1; x < w; ++x) {
            s += src[clampx(x + r)] - src[clampx(x - 1 - r)];
            dst[x] = s;
        }
    }

    BinaryMask out(w, h);
    const double threshold = cutoff * kernel * kernel;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < w; ++x) {
        std::int32_t s = 0;
        for (int dy = -r; dy <= r; ++dy) s += rowsum[static_cast<std::size_t>(clampy(dy)) * w + x];
        out.bits[x] = static_cast<double>(s) >= threshold ? 1 : 0;
        for (int y = 1; y < h; ++y) {
            s += rowsum[static_cast<std::size_t>(clampy(y + r)) * w + x] -
                 rowsum[static_cast<std::size_t>(clampy(y - 1 - r)) * w + x];
            out.bits[static_cast<std::size_t>(y) * w + x] = static_cast<double>(s) >= threshold ? 1 : 0;
        }
    }
    return out;
}

}  // namespace fingertrace
