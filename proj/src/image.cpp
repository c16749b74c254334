#include "fingertrace/image.hpp"

namespace fingertrace {

RgbImage rotate_cw(const RgbImage& img) {
    RgbImage dst(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const auto p = img.at(x, y);
            dst.set(img.height - 1 - y, x, p[0], p[1], p[2]);
        }
    return dst;
}

RgbImage rotate_ccw(const RgbImage& img) {
    RgbImage dst(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const auto p = img.at(x, y);
            dst.set(y, img.width - 1 - x, p[0], p[1], p[2]);
        }
    return dst;
}

RgbImage rotate_180(const RgbImage& img) {
    RgbImage dst(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const auto p = img.at(x, y);
            dst.set(img.width - 1 - x, img.height - 1 - y, p[0], p[1], p[2]);
        }
    return dst;
}

BinaryMask rotate_cw(const BinaryMask& mask) {
    BinaryMask dst(mask.height, mask.width);
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x) dst.set(mask.height - 1 - y, x, mask.at(x, y));
    return dst;
}

BinaryMask rotate_ccw(const BinaryMask& mask) {
    BinaryMask dst(mask.height, mask.width);
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x) dst.set(y, mask.width - 1 - x, mask.at(x, y));
    return dst;
}

BinaryMask rotate_180(const BinaryMask& mask) {
    BinaryMask dst(mask.width, mask.height);
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            dst.set(mask.width - 1 - x, mask.height - 1 - y, mask.at(x, y));
    return dst;
}

Point rotate_point_cw(Point p, int /*w*/, int h) { return {h - 1 - p.y, p.x}; }
Point rotate_point_ccw(Point p, int w, int /*h*/) { return {p.y, w - 1 - p.x}; }
Point rotate_point_180(Point p, int w, int h) { return {w - 1 - p.x, h - 1 - p.y}; }

}  // namespace fingertrace
