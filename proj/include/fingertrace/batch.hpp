#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fingertrace/config.hpp"
#include "fingertrace/fingertip.hpp"
#include "fingertrace/image.hpp"

namespace fingertrace {

struct FrameRecord {
    std::string name;
    bool ok = false;
    std::string error;
    DetectionResult result;
    StageTimings timings;
};

struct StageStats {
    double mean = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
};

struct BatchReport {
    std::vector<FrameRecord> records;  // input order, independent of scheduling
    int ok_count = 0;
    int failed_count = 0;
    StageStats skin, smooth, blob, wrist, crop, ramp, tips, total;
};

// Frames are processed in parallel; a frame that throws is recorded as failed
// and the rest keep going.
BatchReport run_batch(const std::vector<std::pair<std::string, RgbImage>>& frames,
                      const RunConfig& config);

// Loads every path, detects, then optionally writes results (JSONL, one line
// per successful frame in input order) and annotated copies of the inputs.
BatchReport run_batch_files(const std::vector<std::filesystem::path>& inputs,
                            const RunConfig& config,
                            const std::filesystem::path& results_path,  // empty: skip
                            const std::filesystem::path& annotate_dir); // empty: skip

std::string summary_to_string(const BatchReport& report);

// Nearest-rank percentile; q in [0,1]. Empty input yields 0.
double percentile(std::vector<double> values, double q);

}  // namespace fingertrace
