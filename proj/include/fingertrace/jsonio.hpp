#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fingertrace/eval.hpp"
#include "fingertrace/fingertip.hpp"
#include "fingertrace/synth.hpp"

namespace fingertrace {

// Key order is fixed so identical runs serialize to identical bytes.
nlohmann::ordered_json result_to_json(const std::string& frame_name,
                                      const DetectionResult& result);
DetectionResult result_from_json(const nlohmann::json& j);

nlohmann::ordered_json truth_to_json(const std::string& frame_name, const GroundTruth& truth);
GroundTruth truth_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const EvalReport& report);

// JSONL: one object per line, '\n' after every line including the last.
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<nlohmann::ordered_json>& rows);
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

}  // namespace fingertrace
