#include "fingertrace/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace fingertrace {

namespace {

// mt19937 with helpers that avoid std distributions, whose outputs are
// implementation-defined; generated frames must be bit-identical everywhere.
struct Rng {
    std::mt19937 gen;
    explicit Rng(std::uint32_t seed) : gen(seed) {}

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(gen() % static_cast<std::uint32_t>(hi - lo + 1));
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (gen() * (1.0 / 4294967296.0));
    }
};

struct Layout {
    int canon_w = 0, canon_h = 0;          // upright frame before rotation
    int palm_x0 = 0, palm_x1 = 0;          // palm column span
    int palm_top = 0, palm_bottom = 0;     // palm row span
    int forearm_x0 = 0, forearm_x1 = 0;
    std::vector<int> finger_x0, finger_w, finger_len;  // per finger
};

constexpr double kPalmHeightRatio = 0.4;   // palm height / palm width
constexpr double kForearmRatio = 0.5;      // forearm width / palm width
constexpr double kUsableRatio = 0.86;      // finger span / palm width
constexpr int kBaseInset = 6;              // rows fingers reach into the palm

int min_gap(int palm_width) { return std::max(3, palm_width / 40); }

Layout plan_layout(const SyntheticHandSpec& spec, Rng& rng) {
    Layout lay;
    const bool sideways =
        spec.wrist_side == WristSide::Left || spec.wrist_side == WristSide::Right;
    lay.canon_w = sideways ? spec.frame_h : spec.frame_w;
    lay.canon_h = sideways ? spec.frame_w : spec.frame_h;

    const int pw = spec.palm_width;
    const int ph = static_cast<int>(std::lround(kPalmHeightRatio * pw));
    const int fw = static_cast<int>(std::lround(kForearmRatio * pw));

    const int half = pw / 2;
    const int cx_lo = half + 2;
    const int cx_hi = lay.canon_w - 3 - half;
    const int cx = rng.uniform_int(cx_lo, cx_hi);
    lay.palm_x0 = cx - half;
    lay.palm_x1 = lay.palm_x0 + pw - 1;
    lay.palm_bottom = lay.canon_h - 1 - spec.forearm_length;
    lay.palm_top = lay.palm_bottom - ph + 1;
    lay.forearm_x0 = cx - fw / 2;
    lay.forearm_x1 = lay.forearm_x0 + fw - 1;

    const int n = spec.finger_count;
    lay.finger_w.resize(n);
    lay.finger_len.resize(n);
    for (int i = 0; i < n; ++i) {
        lay.finger_w[i] = rng.uniform_int(spec.finger_width_min, spec.finger_width_max);
        lay.finger_len[i] = rng.uniform_int(spec.finger_len_min, spec.finger_len_max);
    }
    // The 4-way scan expects the wrist line to out-count the first finger
    // line, so only one finger may own the apex row.
    for (;;) {
        const int longest = *std::max_element(lay.finger_len.begin(), lay.finger_len.end());
        int owners = 0;
        for (int len : lay.finger_len) owners += len == longest;
        if (owners == 1) break;
        for (int i = n - 1; i >= 0; --i)
            if (lay.finger_len[i] == longest) {
                --lay.finger_len[i];
                break;
            }
    }

    const int gap = min_gap(pw);
    int span = gap * (n - 1);
    for (int w : lay.finger_w) span += w;
    int x = cx - span / 2;
    lay.finger_x0.resize(n);
    for (int i = 0; i < n; ++i) {
        lay.finger_x0[i] = x;
        x += lay.finger_w[i] + gap;
    }
    return lay;
}

void fill_rect(BinaryMask& mask, int x0, int x1, int y0, int y1) {
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    x1 = std::min(x1, mask.width - 1);
    y1 = std::min(y1, mask.height - 1);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) mask.set(x, y, 1);
}

}  // namespace

void SyntheticHandSpec::validate(const SkinBand& band) const {
    if (frame_w < 32 || frame_h < 32) throw SpecUnsatisfiable("frame must be at least 32x32");
    if (finger_count < 1 || finger_count > 5)
        throw SpecUnsatisfiable("finger_count must be in 1..5");
    if (finger_len_min < 4 || finger_len_min > finger_len_max)
        throw SpecUnsatisfiable("bad finger length range");
    if (finger_width_min < 3 || finger_width_min > finger_width_max)
        throw SpecUnsatisfiable("bad finger width range");
    if (forearm_length < 0) throw SpecUnsatisfiable("forearm_length must be >= 0");
    if (!(noise >= 0.0 && noise <= 0.05)) throw SpecUnsatisfiable("noise must be in [0, 0.05]");

    const bool sideways = wrist_side == WristSide::Left || wrist_side == WristSide::Right;
    const int canon_w = sideways ? frame_h : frame_w;
    const int canon_h = sideways ? frame_w : frame_h;
    const int ph = static_cast<int>(std::lround(kPalmHeightRatio * palm_width));
    const int fw = static_cast<int>(std::lround(kForearmRatio * palm_width));

    if (palm_width + 6 > canon_w) throw SpecUnsatisfiable("palm too wide for the frame");
    if (forearm_length + ph + finger_len_max + 4 > canon_h)
        throw SpecUnsatisfiable("fingers do not fit above the palm");
    const int span =
        finger_count * finger_width_max + (finger_count - 1) * min_gap(palm_width);
    if (span > static_cast<int>(kUsableRatio * palm_width))
        throw SpecUnsatisfiable("fingers do not fit across the palm");
    if (fw < finger_width_max + 6)
        throw SpecUnsatisfiable("forearm must be wider than the widest finger");

    const auto hsv_of = [](const std::array<std::uint8_t, 3>& c) {
        return rgb_to_hsv(c[0], c[1], c[2]);
    };
    if (!band.contains(hsv_of(skin_color)))
        throw SpecUnsatisfiable("skin_color falls outside the skin band");
    if (band.contains(hsv_of(background_color)))
        throw SpecUnsatisfiable("background_color falls inside the skin band");
}

std::pair<RgbImage, GroundTruth> generate_hand(const SyntheticHandSpec& spec,
                                               const SkinBand& band) {
    spec.validate(band);
    Rng rng(spec.seed);
    const Layout lay = plan_layout(spec, rng);

    BinaryMask shape(lay.canon_w, lay.canon_h);
    fill_rect(shape, lay.forearm_x0, lay.forearm_x1, lay.palm_bottom + 1, lay.canon_h - 1);
    fill_rect(shape, lay.palm_x0, lay.palm_x1, lay.palm_top, lay.palm_bottom);

    std::vector<Point> apexes;
    for (int i = 0; i < spec.finger_count; ++i) {
        const int x0 = lay.finger_x0[i];
        const int w = lay.finger_w[i];
        const int apex_y = lay.palm_top - lay.finger_len[i];
        fill_rect(shape, x0, x0 + w - 1, apex_y, lay.palm_top + kBaseInset);
        apexes.push_back(
            {static_cast<int>(std::lround(x0 + (w - 1) / 2.0)), apex_y});
    }

    RgbImage canon(lay.canon_w, lay.canon_h);
    for (int y = 0; y < lay.canon_h; ++y)
        for (int x = 0; x < lay.canon_w; ++x) {
            const auto& c = shape.at(x, y) ? spec.skin_color : spec.background_color;
            canon.set(x, y, c[0], c[1], c[2]);
        }

    if (spec.noise > 0) {
        const auto flips = static_cast<std::int64_t>(
            std::llround(spec.noise * lay.canon_w * lay.canon_h));
        for (std::int64_t i = 0; i < flips; ++i) {
            const int x = rng.uniform_int(0, lay.canon_w - 1);
            const int y = rng.uniform_int(0, lay.canon_h - 1);
            const auto cur = canon.at(x, y);
            const bool is_skin = cur[0] == spec.skin_color[0] && cur[1] == spec.skin_color[1] &&
                                 cur[2] == spec.skin_color[2];
            const auto& c = is_skin ? spec.background_color : spec.skin_color;
            canon.set(x, y, c[0], c[1], c[2]);
        }
    }

    GroundTruth truth;
    truth.frame_w = spec.frame_w;
    truth.frame_h = spec.frame_h;
    truth.wrist_side = spec.wrist_side;

    RgbImage frame;
    switch (spec.wrist_side) {
        case WristSide::Bottom:
            frame = std::move(canon);
            truth.tips = apexes;
            break;
        case WristSide::Top:
            frame = rotate_180(canon);
            for (Point p : apexes)
                truth.tips.push_back(rotate_point_180(p, lay.canon_w, lay.canon_h));
            break;
        case WristSide::Left:
            frame = rotate_cw(canon);
            for (Point p : apexes)
                truth.tips.push_back(rotate_point_cw(p, lay.canon_w, lay.canon_h));
            break;
        case WristSide::Right:
            frame = rotate_ccw(canon);
            for (Point p : apexes)
                truth.tips.push_back(rotate_point_ccw(p, lay.canon_w, lay.canon_h));
            break;
    }
    return {std::move(frame), std::move(truth)};
}

SyntheticHandSpec CorpusSpec::frame_spec(int index) const {
    SyntheticHandSpec spec;
    const auto& size = sizes[static_cast<std::size_t>(index) % sizes.size()];
    spec.frame_w = size.first;
    spec.frame_h = size.second;
    spec.wrist_side = wrist_sides[static_cast<std::size_t>(index) % wrist_sides.size()];
    spec.finger_count =
        finger_counts[(static_cast<std::size_t>(index) / wrist_sides.size()) % finger_counts.size()];
    spec.noise = noise;
    spec.skin_color = skin_color;
    spec.background_color = background_color;
    spec.seed = seed + 0x9E3779B9u * static_cast<std::uint32_t>(index + 1);

    Rng rng(spec.seed ^ 0xA511E9B3u);
    const int m = std::min(spec.frame_w, spec.frame_h);
    const bool sideways =
        spec.wrist_side == WristSide::Left || spec.wrist_side == WristSide::Right;
    const int scan_extent = sideways ? spec.frame_w : spec.frame_h;

    spec.palm_width = static_cast<int>(std::lround(palm_frac * m));
    spec.forearm_length = static_cast<int>(
        std::lround(scan_extent * rng.uniform(forearm_frac_lo, forearm_frac_hi)));
    spec.finger_len_min = static_cast<int>(std::lround(finger_len_frac_lo * m));
    spec.finger_len_max = static_cast<int>(std::lround(finger_len_frac_hi * m));
    spec.finger_width_min = static_cast<int>(std::lround(finger_width_frac_lo * m));
    spec.finger_width_max = static_cast<int>(std::lround(finger_width_frac_hi * m));
    return spec;
}

CorpusSpec parse_corpus_spec(const std::string& text) {
    CorpusSpec corpus;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    const auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        const auto b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    };
    const auto fail = [&lineno](const std::string& why) {
        throw Error("corpus spec line " + std::to_string(lineno) + ": " + why);
    };
    const auto split = [&trim](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, sep)) parts.push_back(trim(part));
        return parts;
    };
    const auto to_num = [&fail](const std::string& v) {
        try {
            std::size_t used = 0;
            const double d = std::stod(v, &used);
            if (used != v.size()) fail("bad number '" + v + "'");
            return d;
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail("bad number '" + v + "'");
            return 0.0;
        }
    };
    const auto to_color = [&](const std::string& v) {
        const auto parts = split(v, ',');
        if (parts.size() != 3) fail("color needs r,g,b");
        std::array<std::uint8_t, 3> c{};
        for (int i = 0; i < 3; ++i) {
            const double d = to_num(parts[i]);
            if (d < 0 || d > 255) fail("color channel out of range");
            c[i] = static_cast<std::uint8_t>(d);
        }
        return c;
    };

    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "frames") corpus.frames = static_cast<int>(to_num(value));
        else if (key == "seed") corpus.seed = static_cast<std::uint32_t>(to_num(value));
        else if (key == "noise") corpus.noise = to_num(value);
        else if (key == "sizes") {
            corpus.sizes.clear();
            for (const auto& part : split(value, ',')) {
                const auto x = part.find('x');
                if (x == std::string::npos) fail("size must look like 640x480");
                corpus.sizes.emplace_back(static_cast<int>(to_num(part.substr(0, x))),
                                          static_cast<int>(to_num(part.substr(x + 1))));
            }
            if (corpus.sizes.empty()) fail("sizes is empty");
        } else if (key == "wrist_sides") {
            corpus.wrist_sides.clear();
            for (const auto& part : split(value, ',')) {
                const auto side = wrist_side_from_string(part);
                if (!side) fail("unknown wrist side '" + part + "'");
                corpus.wrist_sides.push_back(*side);
            }
            if (corpus.wrist_sides.empty()) fail("wrist_sides is empty");
        } else if (key == "finger_counts") {
            corpus.finger_counts.clear();
            for (const auto& part : split(value, ','))
                corpus.finger_counts.push_back(static_cast<int>(to_num(part)));
            if (corpus.finger_counts.empty()) fail("finger_counts is empty");
        } else if (key == "forearm_frac_lo") corpus.forearm_frac_lo = to_num(value);
        else if (key == "forearm_frac_hi") corpus.forearm_frac_hi = to_num(value);
        else if (key == "palm_frac") corpus.palm_frac = to_num(value);
        else if (key == "finger_len_frac_lo") corpus.finger_len_frac_lo = to_num(value);
        else if (key == "finger_len_frac_hi") corpus.finger_len_frac_hi = to_num(value);
        else if (key == "finger_width_frac_lo") corpus.finger_width_frac_lo = to_num(value);
        else if (key == "finger_width_frac_hi") corpus.finger_width_frac_hi = to_num(value);
        else if (key == "skin_color") corpus.skin_color = to_color(value);
        else if (key == "background_color") corpus.background_color = to_color(value);
        else fail("unknown key '" + key + "'");
    }
    if (corpus.frames < 0) throw Error("corpus spec: frames must be >= 0");
    return corpus;
}

}  // namespace fingertrace
