#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fingertrace/config.hpp"
#include "fingertrace/fingertip.hpp"

using namespace fingertrace;

namespace {

std::mt19937 rng(90210);

BinaryMask from_rows(const std::vector<std::string>& rows) {
    BinaryMask m(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int y = 0; y < m.height; ++y)
        for (int x = 0; x < m.width; ++x) m.set(x, y, rows[y][x] == '#' ? 1 : 0);
    return m;
}

}  // namespace

TEST_CASE("scanline profile runs wrist to finger") {
    const BinaryMask m = from_rows({
        "..#.",
        ".##.",
        "####",
    });
    CHECK(scanline_profile(m, WristSide::Bottom) == std::vector<int>{4, 2, 1});
    CHECK(scanline_profile(m, WristSide::Top) == std::vector<int>{1, 2, 4});
    CHECK(scanline_profile(m, WristSide::Left) == std::vector<int>{1, 2, 3, 1});
    CHECK(scanline_profile(m, WristSide::Right) == std::vector<int>{1, 3, 2, 1});
}

TEST_CASE("empty lines contribute zero to the profile") {
    const BinaryMask m = from_rows({
        "#..",
        "...",
        "##.",
    });
    CHECK(scanline_profile(m, WristSide::Bottom) == std::vector<int>{2, 0, 1});
}

TEST_CASE("ramp spreads 1..255 across the crop extent") {
    BinaryMask m(3, 5);
    std::fill(m.bits.begin(), m.bits.end(), 1);
    const GrayImage ramp = intensity_ramp(m, WristSide::Top);
    const std::vector<int> expected{51, 102, 153, 204, 255};
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 3; ++x)
            CHECK(ramp.at(x, y) == expected[static_cast<std::size_t>(y)]);

    // same mask entered from the bottom reverses the ramp
    const GrayImage rev = intensity_ramp(m, WristSide::Bottom);
    for (int y = 0; y < 5; ++y)
        CHECK(rev.at(0, y) == expected[static_cast<std::size_t>(4 - y)]);
}

TEST_CASE("single-line crop gets the full value") {
    BinaryMask m(4, 1);
    std::fill(m.bits.begin(), m.bits.end(), 1);
    const GrayImage ramp = intensity_ramp(m, WristSide::Bottom);
    for (int x = 0; x < 4; ++x) CHECK(ramp.at(x, 0) == 255);
}

TEST_CASE("extent 255 maps line rank to itself") {
    BinaryMask m(1, 255);
    std::fill(m.bits.begin(), m.bits.end(), 1);
    const GrayImage ramp = intensity_ramp(m, WristSide::Top);
    for (int y = 0; y < 255; ++y) CHECK(ramp.at(0, y) == y + 1);
}

TEST_CASE("foreground values are floored at 1 on very long crops") {
    BinaryMask m(1, 600);
    std::fill(m.bits.begin(), m.bits.end(), 1);
    const GrayImage ramp = intensity_ramp(m, WristSide::Top);
    CHECK(ramp.at(0, 0) == 1);  // round(255/600) would be 0
    CHECK(ramp.at(0, 599) == 255);
    for (int y = 1; y < 600; ++y) CHECK(ramp.at(0, y) >= ramp.at(0, y - 1));
}

TEST_CASE("background stays zero and sideways wrists ramp along columns") {
    const BinaryMask m = from_rows({
        "#.#",
        ".#.",
    });
    const GrayImage ramp = intensity_ramp(m, WristSide::Left);
    CHECK(ramp.at(0, 0) == 85);
    CHECK(ramp.at(1, 1) == 170);
    CHECK(ramp.at(2, 0) == 255);
    CHECK(ramp.at(1, 0) == 0);
    CHECK(ramp.at(0, 1) == 0);

    const GrayImage right = intensity_ramp(m, WristSide::Right);
    CHECK(right.at(2, 0) == 85);
    CHECK(right.at(0, 0) == 255);
}

TEST_CASE("ramp rejects empty masks and counts its pixel visits") {
    CHECK_THROWS_AS(intensity_ramp(BinaryMask(4, 4), WristSide::Top), NoForeground);

    BinaryMask m(7, 5);
    m.set(3, 2, 1);
    m.set(6, 4, 1);
    std::uint64_t visited = 0;
    intensity_ramp(m, WristSide::Bottom, &visited);
    CHECK(visited == 7u * 5u);
}

TEST_CASE("ramp is monotone away from the wrist on random masks") {
    for (int trial = 0; trial < 30; ++trial) {
        BinaryMask m(1 + static_cast<int>(rng() % 20), 1 + static_cast<int>(rng() % 20));
        for (auto& b : m.bits) b = (rng() % 3) == 0 ? 1 : 0;
        if (m.foreground_count() == 0) m.set(0, 0, 1);
        for (const WristSide side :
             {WristSide::Top, WristSide::Bottom, WristSide::Left, WristSide::Right}) {
            const GrayImage ramp = intensity_ramp(m, side);
            int prev = 0;
            const int extent =
                (side == WristSide::Top || side == WristSide::Bottom) ? m.height : m.width;
            for (int d = 0; d < extent; ++d) {
                int line_value = -1;
                const int cross =
                    (side == WristSide::Top || side == WristSide::Bottom) ? m.width : m.height;
                for (int c = 0; c < cross; ++c) {
                    int x, y;
                    if (side == WristSide::Top) { x = c; y = d; }
                    else if (side == WristSide::Bottom) { x = c; y = m.height - 1 - d; }
                    else if (side == WristSide::Left) { x = d; y = c; }
                    else { x = m.width - 1 - d; y = c; }
                    if (m.at(x, y)) line_value = ramp.at(x, y);
                }
                if (line_value < 0) continue;
                CHECK(line_value >= 1);
                CHECK(line_value <= 255);
                CHECK(line_value >= prev);
                prev = line_value;
            }
        }
    }
}

TEST_CASE("candidate mask follows the threshold") {
    BinaryMask m(2, 5);
    std::fill(m.bits.begin(), m.bits.end(), 1);
    const GrayImage ramp = intensity_ramp(m, WristSide::Top);  // rows 51,102,153,204,255

    const BinaryMask strict = finger_edge_mask(ramp, 255);
    CHECK(strict.foreground_count() == 2);
    CHECK(strict.at(0, 4) == 1);

    CHECK(finger_edge_mask(ramp, 235).foreground_count() == 2);
    CHECK(finger_edge_mask(ramp, 200).foreground_count() == 4);  // the 204 and 255 rows

    CHECK_THROWS_AS(finger_edge_mask(ramp, 0), Error);
    CHECK_THROWS_AS(finger_edge_mask(ramp, 256), Error);
}

TEST_CASE("each well-separated cluster yields one tip at its ramp peak") {
    GrayImage ramp(12, 4);
    BinaryMask cand(12, 4);
    // cluster A: two pixels, peak 250 at (1,1); cluster B: three, peak 255 at (8,0)
    cand.set(1, 1, 1); ramp.set(1, 1, 250);
    cand.set(1, 2, 1); ramp.set(1, 2, 240);
    cand.set(8, 0, 1); ramp.set(8, 0, 255);
    cand.set(8, 1, 1); ramp.set(8, 1, 245);
    cand.set(9, 1, 1); ramp.set(9, 1, 245);

    const auto tips = locate_fingertips(cand, ramp, WristSide::Bottom,
                                        TipParams{1, 3.0, 5});
    REQUIRE(tips.size() == 2);
    CHECK(tips[0] == Fingertip{1, 1, 250, 2});
    CHECK(tips[1] == Fingertip{8, 0, 255, 3});
}

TEST_CASE("min_cluster filters single-pixel noise") {
    GrayImage ramp(5, 5);
    BinaryMask cand(5, 5);
    cand.set(2, 2, 1);
    ramp.set(2, 2, 255);
    CHECK(locate_fingertips(cand, ramp, WristSide::Bottom, TipParams{1, 2.0, 5}).size() == 1);
    CHECK(locate_fingertips(cand, ramp, WristSide::Bottom, TipParams{2, 2.0, 5}).empty());
}

TEST_CASE("ramp ties resolve to the rounded centroid of the tied pixels") {
    GrayImage ramp(9, 3);
    BinaryMask cand(9, 3);
    for (int x = 3; x <= 6; ++x) {
        cand.set(x, 0, 1);
        ramp.set(x, 0, 255);
        cand.set(x, 1, 1);
        ramp.set(x, 1, 230);
    }
    const auto tips =
        locate_fingertips(cand, ramp, WristSide::Bottom, TipParams{2, 2.0, 5});
    REQUIRE(tips.size() == 1);
    CHECK(tips[0].x == 5);  // centroid 4.5 rounds away from zero
    CHECK(tips[0].y == 0);
    CHECK(tips[0].cluster_size == 8);
}

TEST_CASE("tips closer than min_separation merge, higher ramp wins") {
    GrayImage ramp(10, 6);
    BinaryMask cand(10, 6);
    cand.set(2, 0, 1); cand.set(2, 1, 1);
    ramp.set(2, 0, 240); ramp.set(2, 1, 230);
    cand.set(4, 3, 1); cand.set(4, 4, 1);  // cross-axis distance 2 from the first
    ramp.set(4, 3, 255); ramp.set(4, 4, 230);

    const auto merged =
        locate_fingertips(cand, ramp, WristSide::Bottom, TipParams{2, 5.0, 5});
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].x == 4);
    CHECK(merged[0].ramp_value == 255);

    const auto kept =
        locate_fingertips(cand, ramp, WristSide::Bottom, TipParams{2, 1.5, 5});
    CHECK(kept.size() == 2);

    // sideways hands measure separation along rows: |dy| = 3 < 5 merges too
    const auto sideways =
        locate_fingertips(cand, ramp, WristSide::Left, TipParams{2, 5.0, 5});
    REQUIRE(sideways.size() == 1);
    CHECK(sideways[0].ramp_value == 255);

    // ...and a row gap of 3 survives a tighter threshold
    const auto sideways_kept =
        locate_fingertips(cand, ramp, WristSide::Left, TipParams{2, 2.5, 5});
    CHECK(sideways_kept.size() == 2);
}

TEST_CASE("max_tips keeps the strongest candidates") {
    GrayImage ramp(13, 2);
    BinaryMask cand(13, 2);
    for (int i = 0; i < 6; ++i) {
        const int x = 2 * i;
        cand.set(x, 0, 1);
        cand.set(x, 1, 1);
        ramp.set(x, 0, static_cast<std::uint8_t>(200 + 10 * i));
        ramp.set(x, 1, 150);
    }
    const auto tips =
        locate_fingertips(cand, ramp, WristSide::Bottom, TipParams{2, 1.5, 5});
    REQUIRE(tips.size() == 5);
    CHECK(tips.front().x == 2);  // the ramp-200 cluster at x=0 was dropped
    for (std::size_t i = 1; i < tips.size(); ++i) CHECK(tips[i - 1].x < tips[i].x);
}

TEST_CASE("empty candidate mask yields no tips") {
    CHECK(locate_fingertips(BinaryMask(4, 4), GrayImage(4, 4), WristSide::Bottom,
                            TipParams{1, 2.0, 5})
              .empty());
}

TEST_CASE("detect rejects an all-background frame") {
    RgbImage frame(32, 32);
    for (int y = 0; y < 32; ++y)
        for (int x = 0; x < 32; ++x) frame.set(x, y, 30, 60, 120);
    CHECK_THROWS_AS(detect(frame, RunConfig{}), NoForeground);
}

TEST_CASE("detect on a bare rectangle falls back to the bounding box") {
    // A solid skin rectangle has no forearm step: the histogram never jumps,
    // so the crop falls back to the tight box and the flags say so.
    RgbImage frame(60, 40);
    for (int y = 0; y < 40; ++y)
        for (int x = 0; x < 60; ++x) frame.set(x, y, 30, 60, 120);
    for (int y = 20; y <= 29; ++y)
        for (int x = 15; x <= 44; ++x) frame.set(x, y, 205, 140, 110);

    StageTimings timings;
    const DetectionResult result = detect(frame, RunConfig{}, &timings);

    CHECK(result.direction == WristSide::Bottom);  // top/bottom contact tie
    CHECK(result.ambiguous_direction);
    CHECK(result.no_wrist_cut);
    CHECK(result.crop == CropRect{15, 44, 20, 29});

    // smoothing shaves the four corners; the top edge has 28 pixels whose
    // ramp is 255, so the single tip is their centroid
    REQUIRE(result.tips.size() == 1);
    CHECK(result.tips[0] == Fingertip{30, 20, 255, 28});

    CHECK(timings.ramp_pixels_visited == static_cast<std::uint64_t>(result.crop.area()));
    CHECK(timings.total_ms >= 0.0);
}
