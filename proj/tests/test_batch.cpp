#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "fingertrace/batch.hpp"
#include "fingertrace/netpbm.hpp"
#include "fingertrace/synth.hpp"

using namespace fingertrace;
namespace fs = std::filesystem;

namespace {

RgbImage hand_frame(std::uint32_t seed, WristSide side = WristSide::Bottom) {
    SyntheticHandSpec spec;
    spec.frame_w = 320;
    spec.frame_h = 240;
    spec.wrist_side = side;
    spec.finger_count = 3;
    spec.finger_len_min = 38;
    spec.finger_len_max = 52;
    spec.finger_width_min = 12;
    spec.finger_width_max = 14;
    spec.palm_width = 125;
    spec.forearm_length = 50;
    spec.seed = seed;
    return generate_hand(spec, RunConfig{}.band).first;
}

RgbImage flat_frame() {
    RgbImage img(64, 48);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) img.set(x, y, 30, 60, 120);
    return img;
}

}  // namespace

TEST_CASE("percentile uses nearest-rank on the sorted values") {
    CHECK(percentile({4, 1, 3, 2}, 0.50) == 2);
    CHECK(percentile({4, 1, 3, 2}, 0.95) == 4);
    CHECK(percentile({7}, 0.5) == 7);
    CHECK(percentile({}, 0.5) == 0);
}

TEST_CASE("run_batch keeps input order and isolates per-frame failures") {
    RunConfig cfg;
    cfg.tip_threshold = 210;
    std::vector<std::pair<std::string, RgbImage>> frames;
    frames.emplace_back("a", hand_frame(11));
    frames.emplace_back("empty", flat_frame());  // no skin: the frame fails
    frames.emplace_back("b", hand_frame(12, WristSide::Left));

    const BatchReport report = run_batch(frames, cfg);
    REQUIRE(report.records.size() == 3);
    CHECK(report.records[0].name == "a");
    CHECK(report.records[1].name == "empty");
    CHECK(report.records[2].name == "b");
    CHECK(report.ok_count == 2);
    CHECK(report.failed_count == 1);
    CHECK(report.records[0].ok);
    CHECK_FALSE(report.records[1].ok);
    CHECK_FALSE(report.records[1].error.empty());
    CHECK(report.records[2].ok);
    CHECK(report.records[0].result.direction == WristSide::Bottom);
    CHECK(report.records[2].result.direction == WristSide::Left);
    CHECK(report.records[0].result.tips.size() == 3);

    // Timing stats pool the successful frames only.
    CHECK(report.total.mean > 0.0);
    CHECK(report.total.p95 >= report.total.p50);
}

TEST_CASE("batch summaries list stage timings and failed frames") {
    RunConfig cfg;
    cfg.tip_threshold = 210;
    std::vector<std::pair<std::string, RgbImage>> frames;
    frames.emplace_back("good", hand_frame(5));
    frames.emplace_back("bad", flat_frame());
    const std::string text = summary_to_string(run_batch(frames, cfg));
    CHECK(text.find("frames") != std::string::npos);
    CHECK(text.find("total") != std::string::npos);
    CHECK(text.find("ramp") != std::string::npos);
    CHECK(text.find("bad") != std::string::npos);
}

TEST_CASE("run_batch_files writes byte-identical results across runs") {
    RunConfig cfg;
    cfg.tip_threshold = 210;
    const fs::path dir = fs::temp_directory_path() / "fingertrace_batch_test";
    fs::remove_all(dir);
    fs::create_directories(dir / "out1");
    fs::create_directories(dir / "out2");
    fs::create_directories(dir / "ann");

    std::vector<fs::path> inputs;
    for (int i = 0; i < 4; ++i) {
        const fs::path p = dir / ("frame_" + std::to_string(i) + ".ppm");
        save_ppm(p.string(), hand_frame(100 + i, static_cast<WristSide>(i % 4)));
        inputs.push_back(p);
    }

    const BatchReport r1 = run_batch_files(inputs, cfg, dir / "out1" / "results.jsonl", dir / "ann");
    const BatchReport r2 = run_batch_files(inputs, cfg, dir / "out2" / "results.jsonl", "");
    CHECK(r1.ok_count == 4);
    CHECK(r1.failed_count == 0);

    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const std::string bytes1 = slurp(dir / "out1" / "results.jsonl");
    CHECK_FALSE(bytes1.empty());
    CHECK(bytes1 == slurp(dir / "out2" / "results.jsonl"));

    // One annotated copy per input frame, same size as the original.
    for (const fs::path& p : inputs) {
        const fs::path ann = dir / "ann" / p.filename();
        REQUIRE(fs::exists(ann));
        const RgbImage img = load_ppm(ann.string());
        CHECK(img.width == 320);
        CHECK(img.height == 240);
    }
    fs::remove_all(dir);
}
