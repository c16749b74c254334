#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fingertrace/synth.hpp"

using namespace fingertrace;

namespace {

SyntheticHandSpec small_spec() {
    SyntheticHandSpec spec;
    spec.frame_w = 320;
    spec.frame_h = 240;
    spec.palm_width = 125;
    spec.forearm_length = 50;
    spec.finger_len_min = 38;
    spec.finger_len_max = 52;
    spec.finger_width_min = 12;
    spec.finger_width_max = 14;
    return spec;
}

}  // namespace

TEST_CASE("generation is deterministic for a fixed seed") {
    SyntheticHandSpec spec;
    spec.finger_count = 3;
    spec.wrist_side = WristSide::Bottom;
    spec.seed = 7;
    const auto [img_a, truth_a] = generate_hand(spec, SkinBand{});
    const auto [img_b, truth_b] = generate_hand(spec, SkinBand{});
    CHECK(img_a == img_b);
    CHECK(truth_a.tips == truth_b.tips);

    spec.seed = 8;
    const auto [img_c, truth_c] = generate_hand(spec, SkinBand{});
    CHECK(img_a.pixels != img_c.pixels);
}

TEST_CASE("one ground-truth apex per finger") {
    for (int count = 1; count <= 5; ++count) {
        SyntheticHandSpec spec = small_spec();
        spec.finger_count = count;
        spec.seed = static_cast<std::uint32_t>(100 + count);
        const auto [img, truth] = generate_hand(spec, SkinBand{});
        CHECK(truth.tips.size() == static_cast<std::size_t>(count));
        CHECK(truth.frame_w == spec.frame_w);
        CHECK(truth.wrist_side == spec.wrist_side);

        // apexes are distinct pixels on the hand
        std::set<std::pair<int, int>> seen;
        for (const Point& p : truth.tips) {
            CHECK(p.x >= 0);
            CHECK(p.x < spec.frame_w);
            CHECK(p.y >= 0);
            CHECK(p.y < spec.frame_h);
            seen.insert({p.x, p.y});
            CHECK(img.at(p.x, p.y) == spec.skin_color);
        }
        CHECK(seen.size() == truth.tips.size());
    }
}

TEST_CASE("the pixel beyond each apex is background") {
    SyntheticHandSpec spec = small_spec();
    spec.finger_count = 4;
    spec.seed = 11;
    const auto [img, truth] = generate_hand(spec, SkinBand{});
    for (const Point& p : truth.tips)
        CHECK(img.at(p.x, p.y - 1) == spec.background_color);  // fingers point up
}

TEST_CASE("impossible hands are rejected up front") {
    {
        SyntheticHandSpec spec = small_spec();
        spec.finger_len_max = 500;  // cannot fit above the palm
        spec.finger_len_min = 400;
        CHECK_THROWS_AS(generate_hand(spec, SkinBand{}), SpecUnsatisfiable);
    }
    {
        SyntheticHandSpec spec = small_spec();
        spec.finger_count = 6;
        CHECK_THROWS_AS(generate_hand(spec, SkinBand{}), SpecUnsatisfiable);
    }
    {
        SyntheticHandSpec spec = small_spec();
        spec.palm_width = 400;  // wider than the frame
        CHECK_THROWS_AS(generate_hand(spec, SkinBand{}), SpecUnsatisfiable);
    }
    {
        SyntheticHandSpec spec = small_spec();
        spec.finger_width_min = spec.finger_width_max = 30;  // five do not fit
        spec.finger_count = 5;
        CHECK_THROWS_AS(generate_hand(spec, SkinBand{}), SpecUnsatisfiable);
    }
    {
        SyntheticHandSpec spec = small_spec();
        spec.noise = 0.2;
        CHECK_THROWS_AS(generate_hand(spec, SkinBand{}), SpecUnsatisfiable);
    }
    {
        SyntheticHandSpec spec = small_spec();
        spec.skin_color = {10, 10, 200};  // blue is not in the band
        CHECK_THROWS_AS(generate_hand(spec, SkinBand{}), SpecUnsatisfiable);
    }
    {
        SyntheticHandSpec spec = small_spec();
        spec.background_color = spec.skin_color;  // background must fail the band
        CHECK_THROWS_AS(generate_hand(spec, SkinBand{}), SpecUnsatisfiable);
    }
}

TEST_CASE("orientations are exact rotations of each other on square frames") {
    SyntheticHandSpec spec;
    spec.frame_w = 300;
    spec.frame_h = 300;
    spec.palm_width = 150;
    spec.forearm_length = 60;
    spec.finger_len_min = 45;
    spec.finger_len_max = 62;
    spec.finger_width_min = 14;
    spec.finger_width_max = 17;
    spec.finger_count = 3;
    spec.seed = 99;

    spec.wrist_side = WristSide::Bottom;
    const auto [bottom, truth_bottom] = generate_hand(spec, SkinBand{});
    spec.wrist_side = WristSide::Left;
    const auto [left, truth_left] = generate_hand(spec, SkinBand{});
    spec.wrist_side = WristSide::Right;
    const auto [right, truth_right] = generate_hand(spec, SkinBand{});
    spec.wrist_side = WristSide::Top;
    const auto [top, truth_top] = generate_hand(spec, SkinBand{});

    CHECK(left == rotate_cw(bottom));
    CHECK(right == rotate_ccw(bottom));
    CHECK(top == rotate_180(bottom));

    for (std::size_t i = 0; i < truth_bottom.tips.size(); ++i) {
        CHECK(truth_left.tips[i] == rotate_point_cw(truth_bottom.tips[i], 300, 300));
        CHECK(truth_right.tips[i] == rotate_point_ccw(truth_bottom.tips[i], 300, 300));
        CHECK(truth_top.tips[i] == rotate_point_180(truth_bottom.tips[i], 300, 300));
    }
}

TEST_CASE("noise flips at most the requested fraction of pixels") {
    SyntheticHandSpec spec = small_spec();
    spec.seed = 21;
    const auto [clean, t0] = generate_hand(spec, SkinBand{});
    spec.noise = 0.02;
    const auto [noisy, t1] = generate_hand(spec, SkinBand{});

    CHECK(t0.tips == t1.tips);  // noise never moves the ground truth
    int differing = 0;
    for (int y = 0; y < spec.frame_h; ++y)
        for (int x = 0; x < spec.frame_w; ++x)
            if (clean.at(x, y) != noisy.at(x, y)) ++differing;
    const int budget = static_cast<int>(0.02 * spec.frame_w * spec.frame_h);
    CHECK(differing > 0);
    CHECK(differing <= budget);

    // every noisy pixel is one of the two palette colors
    for (int y = 0; y < spec.frame_h; ++y)
        for (int x = 0; x < spec.frame_w; ++x) {
            const auto p = noisy.at(x, y);
            CHECK((p == spec.skin_color || p == spec.background_color));
        }
}

TEST_CASE("corpus specs cycle sides, counts, and sizes deterministically") {
    CorpusSpec corpus;
    corpus.frames = 40;
    corpus.sizes = {{640, 480}, {320, 240}, {800, 600}};

    for (int i = 0; i < 8; ++i) {
        const SyntheticHandSpec a = corpus.frame_spec(i);
        const SyntheticHandSpec b = corpus.frame_spec(i);
        CHECK(a.seed == b.seed);  // derivation is pure
        CHECK(a.wrist_side == corpus.wrist_sides[static_cast<std::size_t>(i) % 4]);
        const auto [w, h] = corpus.sizes[static_cast<std::size_t>(i) % 3];
        CHECK(a.frame_w == w);
        CHECK(a.frame_h == h);
    }
    // finger counts advance once per full side cycle
    CHECK(corpus.frame_spec(0).finger_count == corpus.finger_counts[0]);
    CHECK(corpus.frame_spec(4).finger_count == corpus.finger_counts[1]);
    CHECK(corpus.frame_spec(21).finger_count == corpus.finger_counts[0]);

    // distinct frames get distinct seeds
    CHECK(corpus.frame_spec(3).seed != corpus.frame_spec(7).seed);

    // every derived spec renders
    for (int i = 0; i < 12; ++i)
        CHECK_NOTHROW(generate_hand(corpus.frame_spec(i), SkinBand{}));
}

TEST_CASE("corpus spec text parses and rejects junk") {
    const CorpusSpec corpus = parse_corpus_spec(
        "# acceptance corpus\n"
        "frames = 12\n"
        "seed = 9\n"
        "sizes = 640x480, 320x240\n"
        "wrist_sides = bottom, left\n"
        "finger_counts = 2, 5\n"
        "noise = 0.01\n"
        "palm_frac = 0.5\n"
        "forearm_frac_lo = 0.2\n"
        "forearm_frac_hi = 0.25\n"
        "skin_color = 205, 140, 110\n");
    CHECK(corpus.frames == 12);
    CHECK(corpus.seed == 9u);
    REQUIRE(corpus.sizes.size() == 2);
    CHECK(corpus.sizes[1] == std::pair{320, 240});
    REQUIRE(corpus.wrist_sides.size() == 2);
    CHECK(corpus.wrist_sides[1] == WristSide::Left);
    CHECK(corpus.finger_counts == std::vector<int>{2, 5});
    CHECK(corpus.noise == doctest::Approx(0.01));
    CHECK(corpus.palm_frac == doctest::Approx(0.5));

    CHECK_THROWS_AS(parse_corpus_spec("frames = 10\nbogus_key = 1\n"), Error);
    CHECK_THROWS_AS(parse_corpus_spec("sizes = 640by480\n"), Error);
    CHECK_THROWS_AS(parse_corpus_spec("wrist_sides = north\n"), Error);
    CHECK_THROWS_AS(parse_corpus_spec("frames ten\n"), Error);
    CHECK_THROWS_AS(parse_corpus_spec("skin_color = 1,2\n"), Error);
}
