#include "fingertrace/netpbm.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

namespace fingertrace {

namespace {

bool is_space(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

struct HeaderParser {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    // Skips whitespace and '#' comments (which run to end of line).
    void skip_separators() {
        while (pos < bytes.size()) {
            if (is_space(bytes[pos])) {
                ++pos;
            } else if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    int next_int(const char* what) {
        skip_separators();
        if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9')
            throw MalformedHeader(std::string("expected ") + what);
        long v = 0;
        while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            v = v * 10 + (bytes[pos] - '0');
            if (v > 1 << 30) throw MalformedHeader(std::string(what) + " out of range");
            ++pos;
        }
        return static_cast<int>(v);
    }
};

// Parses "P<digit> w h maxval" and returns the offset of the pixel data.
std::size_t parse_header(std::span<const std::uint8_t> bytes, char magic_digit, int& w, int& h) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != magic_digit)
        throw MalformedHeader(std::string("expected magic P") + magic_digit);
    HeaderParser p{bytes, 2};
    w = p.next_int("width");
    h = p.next_int("height");
    const int maxval = p.next_int("maxval");
    if (w < 1 || h < 1) throw MalformedHeader("dimensions must be >= 1");
    if (maxval != 255) throw UnsupportedMaxval(maxval);
    // Exactly one whitespace byte separates the maxval from the pixel data.
    if (p.pos >= bytes.size() || !is_space(bytes[p.pos]))
        throw MalformedHeader("missing separator before pixel data");
    return p.pos + 1;
}

void append_header(std::vector<std::uint8_t>& out, const char* magic, int w, int h) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%s\n%d %d\n255\n", magic, w, h);
    out.insert(out.end(), buf, buf + n);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for " + path);
}

}  // namespace

RgbImage read_ppm(std::span<const std::uint8_t> bytes) {
    int w = 0, h = 0;
    const std::size_t data = parse_header(bytes, '6', w, h);
    const std::size_t need = static_cast<std::size_t>(w) * h * 3;
    if (bytes.size() - data < need) throw TruncatedPixelData(need, bytes.size() - data);
    RgbImage img(w, h);
    std::memcpy(img.pixels.data(), bytes.data() + data, need);
    return img;
}

std::vector<std::uint8_t> write_ppm(const RgbImage& img) {
    std::vector<std::uint8_t> out;
    out.reserve(img.pixels.size() + 32);
    append_header(out, "P6", img.width, img.height);
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    int w = 0, h = 0;
    const std::size_t data = parse_header(bytes, '5', w, h);
    const std::size_t need = static_cast<std::size_t>(w) * h;
    if (bytes.size() - data < need) throw TruncatedPixelData(need, bytes.size() - data);
    GrayImage img(w, h);
    std::memcpy(img.values.data(), bytes.data() + data, need);
    return img;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
    std::vector<std::uint8_t> out;
    out.reserve(img.values.size() + 32);
    append_header(out, "P5", img.width, img.height);
    out.insert(out.end(), img.values.begin(), img.values.end());
    return out;
}

BinaryMask read_mask_pgm(std::span<const std::uint8_t> bytes) {
    const GrayImage g = read_pgm(bytes);
    BinaryMask mask(g.width, g.height);
    for (std::size_t i = 0; i < g.values.size(); ++i) mask.bits[i] = g.values[i] >= 128 ? 1 : 0;
    return mask;
}

std::vector<std::uint8_t> write_mask_pgm(const BinaryMask& mask) {
    GrayImage g(mask.width, mask.height);
    for (std::size_t i = 0; i < mask.bits.size(); ++i) g.values[i] = mask.bits[i] ? 255 : 0;
    return write_pgm(g);
}

RgbImage load_ppm(const std::string& path) { return read_ppm(read_file(path)); }
void save_ppm(const std::string& path, const RgbImage& img) { write_file(path, write_ppm(img)); }
GrayImage load_pgm(const std::string& path) { return read_pgm(read_file(path)); }
void save_pgm(const std::string& path, const GrayImage& img) { write_file(path, write_pgm(img)); }
void save_mask_pgm(const std::string& path, const BinaryMask& mask) {
    write_file(path, write_mask_pgm(mask));
}

}  // namespace fingertrace
