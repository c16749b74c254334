#include "fingertrace/jsonio.hpp"

#include <fstream>

#include "fingertrace/errors.hpp"

namespace fingertrace {

nlohmann::ordered_json result_to_json(const std::string& frame_name,
                                      const DetectionResult& result) {
    nlohmann::ordered_json j;
    j["frame"] = frame_name;
    j["direction"] = to_string(result.direction);
    j["ambiguous"] = result.ambiguous_direction;
    j["no_wrist_cut"] = result.no_wrist_cut;
    j["crop"] = {result.crop.xmin, result.crop.ymin, result.crop.xmax, result.crop.ymax};
    auto tips = nlohmann::ordered_json::array();
    for (const Fingertip& tip : result.tips) {
        nlohmann::ordered_json t;
        t["x"] = tip.x;
        t["y"] = tip.y;
        t["ramp"] = tip.ramp_value;
        t["cluster"] = tip.cluster_size;
        tips.push_back(std::move(t));
    }
    j["tips"] = std::move(tips);
    return j;
}

DetectionResult result_from_json(const nlohmann::json& j) {
    DetectionResult result;
    const auto side = wrist_side_from_string(j.at("direction").get<std::string>());
    if (!side) throw Error("unknown direction '" + j.at("direction").get<std::string>() + "'");
    result.direction = *side;
    result.ambiguous_direction = j.at("ambiguous").get<bool>();
    result.no_wrist_cut = j.at("no_wrist_cut").get<bool>();
    const auto& crop = j.at("crop");
    if (!crop.is_array() || crop.size() != 4) throw Error("crop must be [xmin,ymin,xmax,ymax]");
    result.crop.xmin = crop[0].get<int>();
    result.crop.ymin = crop[1].get<int>();
    result.crop.xmax = crop[2].get<int>();
    result.crop.ymax = crop[3].get<int>();
    for (const auto& t : j.at("tips")) {
        Fingertip tip;
        tip.x = t.at("x").get<int>();
        tip.y = t.at("y").get<int>();
        tip.ramp_value = t.at("ramp").get<int>();
        tip.cluster_size = t.at("cluster").get<int>();
        result.tips.push_back(tip);
    }
    return result;
}

nlohmann::ordered_json truth_to_json(const std::string& frame_name, const GroundTruth& truth) {
    nlohmann::ordered_json j;
    j["frame"] = frame_name;
    j["width"] = truth.frame_w;
    j["height"] = truth.frame_h;
    j["wrist_side"] = to_string(truth.wrist_side);
    auto tips = nlohmann::ordered_json::array();
    for (const Point& p : truth.tips) {
        nlohmann::ordered_json t;
        t["x"] = p.x;
        t["y"] = p.y;
        tips.push_back(std::move(t));
    }
    j["tips"] = std::move(tips);
    return j;
}

GroundTruth truth_from_json(const nlohmann::json& j) {
    GroundTruth truth;
    truth.frame_w = j.at("width").get<int>();
    truth.frame_h = j.at("height").get<int>();
    const auto side = wrist_side_from_string(j.at("wrist_side").get<std::string>());
    if (!side) throw Error("unknown wrist_side '" + j.at("wrist_side").get<std::string>() + "'");
    truth.wrist_side = *side;
    for (const auto& t : j.at("tips"))
        truth.tips.push_back({t.at("x").get<int>(), t.at("y").get<int>()});
    return truth;
}

nlohmann::ordered_json report_to_json(const EvalReport& report) {
    nlohmann::ordered_json j;
    j["frames"] = report.frames;
    j["true_positives"] = report.true_positives;
    j["false_positives"] = report.false_positives;
    j["false_negatives"] = report.false_negatives;
    j["frames_count_correct"] = report.frames_count_correct;
    j["precision"] = report.precision;
    j["recall"] = report.recall;
    j["mean_tip_error"] = report.mean_tip_error;
    return j;
}

void write_jsonl(const std::filesystem::path& path,
                 const std::vector<nlohmann::ordered_json>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    for (const auto& row : rows) out << row.dump() << '\n';
    if (!out) throw Error("failed writing " + path.string());
}

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<nlohmann::json> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            rows.push_back(nlohmann::json::parse(line));
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(path.string() + " line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rows;
}

}  // namespace fingertrace
