#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fingertrace/errors.hpp"

namespace fingertrace {

/// 8-bit RGB frame, row-major, 3 bytes per pixel.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // size = 3 * width * height

    RgbImage() = default;
    RgbImage(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0) {}

    std::size_t index(int x, int y) const {
        return (static_cast<std::size_t>(y) * width + x) * 3;
    }
    std::array<std::uint8_t, 3> at(int x, int y) const {
        const std::size_t i = index(x, y);
        return {pixels[i], pixels[i + 1], pixels[i + 2]};
    }
    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        const std::size_t i = index(x, y);
        pixels[i] = r;
        pixels[i + 1] = g;
        pixels[i + 2] = b;
    }
    bool operator==(const RgbImage&) const = default;
};

/// 8-bit single-channel raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> values;  // size = width * height

    GrayImage() = default;
    GrayImage(int w, int h) : width(w), height(h), values(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
    void set(int x, int y, std::uint8_t v) { values[static_cast<std::size_t>(y) * width + x] = v; }
    bool operator==(const GrayImage&) const = default;
};

/// Binary silhouette: foreground 1, background 0, row-major.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  // size = width * height, each 0 or 1

    BinaryMask() = default;
    BinaryMask(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x]; }
    void set(int x, int y, std::uint8_t v) { bits[static_cast<std::size_t>(y) * width + x] = v; }
    std::size_t foreground_count() const {
        std::size_t n = 0;
        for (std::uint8_t b : bits) n += b;
        return n;
    }
    bool operator==(const BinaryMask&) const = default;
};

/// Inclusive pixel rectangle: 0 <= xmin <= xmax < width, 0 <= ymin <= ymax < height.
struct CropRect {
    int xmin = 0;
    int xmax = 0;
    int ymin = 0;
    int ymax = 0;

    int width() const { return xmax - xmin + 1; }
    int height() const { return ymax - ymin + 1; }
    std::int64_t area() const { return static_cast<std::int64_t>(width()) * height(); }
    bool contains(int x, int y) const { return x >= xmin && x <= xmax && y >= ymin && y <= ymax; }
    bool operator==(const CropRect&) const = default;
};

// Exact 90-degree-step rotations. rotate_cw maps the bottom edge to the left edge.
RgbImage rotate_cw(const RgbImage& img);
RgbImage rotate_ccw(const RgbImage& img);
RgbImage rotate_180(const RgbImage& img);
BinaryMask rotate_cw(const BinaryMask& mask);
BinaryMask rotate_ccw(const BinaryMask& mask);
BinaryMask rotate_180(const BinaryMask& mask);

/// Point transforms matching the image rotations above.
/// (x, y) in a w x h frame; the returned point lives in the rotated frame.
struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point&) const = default;
};
Point rotate_point_cw(Point p, int w, int h);
Point rotate_point_ccw(Point p, int w, int h);
Point rotate_point_180(Point p, int w, int h);

}  // namespace fingertrace
