#pragma once

#include <stdexcept>
#include <string>

namespace fingertrace {

/// Base class for all pipeline errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// netpbm codec
class MalformedHeader : public Error {
public:
    explicit MalformedHeader(const std::string& what) : Error("malformed header: " + what) {}
};
class UnsupportedMaxval : public Error {
public:
    explicit UnsupportedMaxval(int maxval)
        : Error("unsupported maxval " + std::to_string(maxval) + " (only 255)") {}
};
class TruncatedPixelData : public Error {
public:
    TruncatedPixelData(std::size_t need, std::size_t got)
        : Error("truncated pixel data: need " + std::to_string(need) + " bytes, got " +
                std::to_string(got)) {}
};

// segmentation / geometry
class BadKernel : public Error {
public:
    explicit BadKernel(int k) : Error("kernel size must be odd and >= 1, got " + std::to_string(k)) {}
};
class NoForeground : public Error {
public:
    NoForeground() : Error("mask has no foreground pixels") {}
};
class VerticalSegment : public Error {
public:
    VerticalSegment() : Error("slope undefined for a vertical segment (x1 == x2)") {}
};
class EmptyCrop : public Error {
public:
    EmptyCrop() : Error("crop contains no foreground pixels") {}
};

// harness
class SpecUnsatisfiable : public Error {
public:
    explicit SpecUnsatisfiable(const std::string& what) : Error("unsatisfiable spec: " + what) {}
};
class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("list lengths differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

}  // namespace fingertrace
