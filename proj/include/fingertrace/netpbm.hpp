#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fingertrace/image.hpp"

namespace fingertrace {

// Binary netpbm codecs, 8-bit maxval 255 only. Writers emit a canonical
// header ("P6\n<w> <h>\n255\n") so identical images serialize to identical
// bytes; readers accept comments and arbitrary header whitespace.

RgbImage read_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_ppm(const RgbImage& img);

GrayImage read_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

/// Masks are stored as PGM with 1 -> 255 and 0 -> 0; reading maps
/// values >= 128 back to 1.
BinaryMask read_mask_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_mask_pgm(const BinaryMask& mask);

// File helpers (throw Error on I/O failure).
RgbImage load_ppm(const std::string& path);
void save_ppm(const std::string& path, const RgbImage& img);
GrayImage load_pgm(const std::string& path);
void save_pgm(const std::string& path, const GrayImage& img);
void save_mask_pgm(const std::string& path, const BinaryMask& mask);

}  // namespace fingertrace
