#include "fingertrace/batch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fingertrace/annotate.hpp"
#include "fingertrace/jsonio.hpp"
#include "fingertrace/netpbm.hpp"
#include "fingertrace/parallel.hpp"

namespace fingertrace {

double percentile(std::vector<double> values, double q) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    auto rank = static_cast<std::size_t>(std::ceil(q * n));
    rank = std::min(std::max<std::size_t>(rank, 1), values.size());
    return values[rank - 1];
}

namespace {

StageStats stats_of(const std::vector<double>& values) {
    StageStats s;
    if (values.empty()) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    s.p50 = percentile(values, 0.50);
    s.p95 = percentile(values, 0.95);
    return s;
}

void finalize(BatchReport& report) {
    std::vector<double> skin, smooth, blob, wrist, crop, ramp, tips, total;
    for (const FrameRecord& rec : report.records) {
        if (rec.ok) {
            ++report.ok_count;
            skin.push_back(rec.timings.skin_ms);
            smooth.push_back(rec.timings.smooth_ms);
            blob.push_back(rec.timings.blob_ms);
            wrist.push_back(rec.timings.wrist_ms);
            crop.push_back(rec.timings.crop_ms);
            ramp.push_back(rec.timings.ramp_ms);
            tips.push_back(rec.timings.tips_ms);
            total.push_back(rec.timings.total_ms);
        } else {
            ++report.failed_count;
        }
    }
    report.skin = stats_of(skin);
    report.smooth = stats_of(smooth);
    report.blob = stats_of(blob);
    report.wrist = stats_of(wrist);
    report.crop = stats_of(crop);
    report.ramp = stats_of(ramp);
    report.tips = stats_of(tips);
    report.total = stats_of(total);
}

}  // namespace

BatchReport run_batch(const std::vector<std::pair<std::string, RgbImage>>& frames,
                      const RunConfig& config) {
    BatchReport report;
    report.records.resize(frames.size());
    const auto n = static_cast<std::int64_t>(frames.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        FrameRecord& rec = report.records[static_cast<std::size_t>(i)];
        rec.name = frames[static_cast<std::size_t>(i)].first;
        try {
            rec.result = detect(frames[static_cast<std::size_t>(i)].second, config, &rec.timings);
            rec.ok = true;
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
    }
    finalize(report);
    return report;
}

BatchReport run_batch_files(const std::vector<std::filesystem::path>& inputs,
                            const RunConfig& config,
                            const std::filesystem::path& results_path,
                            const std::filesystem::path& annotate_dir) {
    BatchReport report;
    report.records.resize(inputs.size());
    const auto n = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& path = inputs[static_cast<std::size_t>(i)];
        FrameRecord& rec = report.records[static_cast<std::size_t>(i)];
        rec.name = path.stem().string();
        try {
            const RgbImage frame = load_ppm(path);
            rec.result = detect(frame, config, &rec.timings);
            rec.ok = true;
            if (!annotate_dir.empty())
                save_ppm(annotate_dir / (rec.name + ".ppm"),
                         annotate(frame, rec.result, config.marker_color));
        } catch (const std::exception& e) {
            rec.ok = false;
            rec.error = e.what();
        }
    }
    finalize(report);

    if (!results_path.empty()) {
        std::vector<nlohmann::ordered_json> rows;
        for (const FrameRecord& rec : report.records)
            if (rec.ok) rows.push_back(result_to_json(rec.name, rec.result));
        write_jsonl(results_path, rows);
    }
    return report;
}

std::string summary_to_string(const BatchReport& report) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << "frames: " << report.records.size() << "  ok: " << report.ok_count
        << "  failed: " << report.failed_count << '\n';
    const auto row = [&out](const char* name, const StageStats& s) {
        out << "  " << name << ": mean " << s.mean << " ms, p50 " << s.p50 << " ms, p95 "
            << s.p95 << " ms\n";
    };
    row("skin  ", report.skin);
    row("smooth", report.smooth);
    row("blob  ", report.blob);
    row("wrist ", report.wrist);
    row("crop  ", report.crop);
    row("ramp  ", report.ramp);
    row("tips  ", report.tips);
    row("total ", report.total);
    for (const FrameRecord& rec : report.records)
        if (!rec.ok) out << "  failed " << rec.name << ": " << rec.error << '\n';
    return out.str();
}

}  // namespace fingertrace
