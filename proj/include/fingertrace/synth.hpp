#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fingertrace/color.hpp"
#include "fingertrace/geometry.hpp"
#include "fingertrace/image.hpp"

namespace fingertrace {

/// Recipe for one labeled synthetic hand frame. The hand is drawn upright
/// (forearm reaching the bottom edge) and rotated to the requested wrist
/// side, so the four orientations are exact rotations of each other.
/// Finger length is the protrusion above the palm top, in pixels.
struct SyntheticHandSpec {
    int frame_w = 640;
    int frame_h = 480;
    WristSide wrist_side = WristSide::Bottom;
    int finger_count = 3;
    int finger_len_min = 78;
    int finger_len_max = 105;
    int finger_width_min = 22;
    int finger_width_max = 28;
    int palm_width = 250;    // full width across the knuckles
    int forearm_length = 96; // palm bottom to the frame edge
    std::array<std::uint8_t, 3> skin_color{205, 140, 110};
    std::array<std::uint8_t, 3> background_color{40, 60, 90};
    double noise = 0.0;      // salt-and-pepper fraction, <= 0.05
    std::uint32_t seed = 0;

    /// Throws SpecUnsatisfiable if the hand cannot be drawn or the colors
    /// do not separate under `band`.
    void validate(const SkinBand& band) const;
};

/// Apex pixel of each rendered finger, in final-frame coordinates.
struct GroundTruth {
    int frame_w = 0;
    int frame_h = 0;
    WristSide wrist_side = WristSide::Bottom;
    std::vector<Point> tips;
};

/// Deterministic for a fixed spec (same seed, same bytes).
std::pair<RgbImage, GroundTruth> generate_hand(const SyntheticHandSpec& spec, const SkinBand& band);

/// Corpus recipe: cycles sizes, wrist sides and finger counts across
/// `frames` and derives per-frame hand specs from `seed`.
struct CorpusSpec {
    int frames = 24;
    std::uint32_t seed = 1;
    std::vector<std::pair<int, int>> sizes{{640, 480}};
    std::vector<WristSide> wrist_sides{WristSide::Bottom, WristSide::Top, WristSide::Left,
                                       WristSide::Right};
    std::vector<int> finger_counts{1, 2, 3, 4, 5};
    double noise = 0.0;
    double forearm_frac_lo = 0.14;  // fraction of the scan-axis extent
    double forearm_frac_hi = 0.30;
    double palm_frac = 0.52;        // palm width as a fraction of min(w,h)
    double finger_len_frac_lo = 0.16;
    double finger_len_frac_hi = 0.22;
    double finger_width_frac_lo = 0.046;
    double finger_width_frac_hi = 0.058;
    std::array<std::uint8_t, 3> skin_color{205, 140, 110};
    std::array<std::uint8_t, 3> background_color{40, 60, 90};

    SyntheticHandSpec frame_spec(int index) const;
};

/// Parses a flat `key = value` corpus description (see README).
CorpusSpec parse_corpus_spec(const std::string& text);

}  // namespace fingertrace
