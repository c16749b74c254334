#include "fingertrace/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "fingertrace/annotate.hpp"
#include "fingertrace/batch.hpp"
#include "fingertrace/blob.hpp"
#include "fingertrace/color.hpp"
#include "fingertrace/config.hpp"
#include "fingertrace/eval.hpp"
#include "fingertrace/fingertip.hpp"
#include "fingertrace/jsonio.hpp"
#include "fingertrace/netpbm.hpp"
#include "fingertrace/synth.hpp"

namespace fs = std::filesystem;

namespace fingertrace {

namespace {

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kProcessingError = 2;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw Error("failed writing " + path);
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

/// --config plus per-key overrides shared by the pipeline subcommands.
struct ConfigCli {
    CLI::App* sub = nullptr;
    std::string path;
    int smooth_kernel = 0;
    double smooth_cutoff = 0;
    int connectivity = 0;
    double slope_factor = 0;
    int tip_threshold = 0;
    int min_cluster = 0;
    double min_separation = 0;
    int max_tips = 0;

    void attach(CLI::App* s) {
        sub = s;
        s->add_option("--config", path, "config file; falls back to $FINGERTRACE_CONFIG")
            ->check(CLI::ExistingFile);
        s->add_option("--smooth-kernel", smooth_kernel, "averaging filter size (odd)");
        s->add_option("--smooth-cutoff", smooth_cutoff, "binarization cutoff in (0,1)");
        s->add_option("--connectivity", connectivity, "blob connectivity, 4 or 8");
        s->add_option("--slope-factor", slope_factor, "wrist-cut threshold factor");
        s->add_option("--tip-threshold", tip_threshold, "fingertip ramp threshold 1..255");
        s->add_option("--min-cluster", min_cluster, "smallest accepted candidate cluster");
        s->add_option("--min-separation", min_separation, "tip spacing in px at 640x480");
        s->add_option("--max-tips", max_tips, "most tips reported per frame");
    }

    RunConfig resolve() const {
        RunConfig cfg = load_config(path);
        if (sub->count("--smooth-kernel")) cfg.smooth_kernel = smooth_kernel;
        if (sub->count("--smooth-cutoff")) cfg.smooth_cutoff = smooth_cutoff;
        if (sub->count("--connectivity")) {
            if (connectivity != 4 && connectivity != 8)
                throw Error("connectivity must be 4 or 8");
            cfg.connectivity = static_cast<Connectivity>(connectivity);
        }
        if (sub->count("--slope-factor")) cfg.slope_factor = slope_factor;
        if (sub->count("--tip-threshold")) cfg.tip_threshold = tip_threshold;
        if (sub->count("--min-cluster")) cfg.min_cluster = min_cluster;
        if (sub->count("--min-separation")) cfg.min_separation = min_separation;
        if (sub->count("--max-tips")) cfg.max_tips = max_tips;
        cfg.validate();
        return cfg;
    }
};

std::string frame_label(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "frame_%04d", index);
    return buf;
}

int cmd_detect(const std::string& input, const RunConfig& cfg, const std::string& name,
               const std::string& out_path, const std::string& annotate_path) {
    try {
        const RgbImage frame = load_ppm(input);
        const DetectionResult result = detect(frame, cfg);
        const std::string frame_name = name.empty() ? fs::path(input).stem().string() : name;
        emit(out_path, result_to_json(frame_name, result).dump(2) + "\n");
        if (!annotate_path.empty())
            save_ppm(annotate_path, annotate(frame, result, cfg.marker_color));
        return kOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kProcessingError;
    }
}

int cmd_batch(std::vector<std::string> inputs, const std::string& input_dir,
              const RunConfig& cfg, const std::string& out_dir, bool want_annotate,
              bool strict) {
    try {
        if (!input_dir.empty()) {
            std::vector<std::string> found;
            for (const auto& entry : fs::directory_iterator(input_dir))
                if (entry.is_regular_file() && entry.path().extension() == ".ppm")
                    found.push_back(entry.path().string());
            std::sort(found.begin(), found.end());
            inputs.insert(inputs.end(), found.begin(), found.end());
        }

        fs::path results_path, annotate_dir;
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            results_path = fs::path(out_dir) / "results.jsonl";
            if (want_annotate) {
                annotate_dir = fs::path(out_dir) / "annotated";
                fs::create_directories(annotate_dir);
            }
        }

        std::vector<fs::path> paths(inputs.begin(), inputs.end());
        const BatchReport report = run_batch_files(paths, cfg, results_path, annotate_dir);
        std::cout << summary_to_string(report);
        return strict && report.failed_count > 0 ? kProcessingError : kOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kProcessingError;
    }
}

int cmd_generate(const std::string& spec_path, const RunConfig& cfg,
                 const std::string& out_dir) {
    CorpusSpec corpus;
    try {
        corpus = parse_corpus_spec(read_text_file(spec_path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    try {
        fs::create_directories(out_dir);
        std::vector<nlohmann::ordered_json> rows;
        for (int i = 0; i < corpus.frames; ++i) {
            const SyntheticHandSpec spec = corpus.frame_spec(i);
            const auto [image, truth] = generate_hand(spec, cfg.band);
            const std::string name = frame_label(i);
            save_ppm((fs::path(out_dir) / (name + ".ppm")).string(), image);
            rows.push_back(truth_to_json(name, truth));
        }
        write_jsonl(fs::path(out_dir) / "truth.jsonl", rows);
        std::cout << "generated " << corpus.frames << " frames -> " << out_dir << '\n';
        return kOk;
    } catch (const SpecUnsatisfiable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kProcessingError;
    }
}

int cmd_eval(const std::string& results_path, const std::string& truth_path, double radius,
             const std::string& out_path) {
    try {
        const auto result_rows = read_jsonl(results_path);
        const auto truth_rows = read_jsonl(truth_path);
        if (result_rows.size() != truth_rows.size())
            throw LengthMismatch(result_rows.size(), truth_rows.size());

        std::map<std::string, GroundTruth> truths;
        for (const auto& row : truth_rows) {
            const auto name = row.at("frame").get<std::string>();
            if (!truths.emplace(name, truth_from_json(row)).second)
                throw Error("duplicate truth frame '" + name + "'");
        }

        std::vector<FrameEval> frames;
        for (const auto& row : result_rows) {
            const auto name = row.at("frame").get<std::string>();
            const auto it = truths.find(name);
            if (it == truths.end()) throw Error("no truth entry for frame '" + name + "'");
            const GroundTruth& truth = it->second;
            const DetectionResult result = result_from_json(row);
            frames.push_back(evaluate_frame(
                result.tips, truth.tips,
                match_radius_for(radius, truth.frame_w, truth.frame_h)));
        }
        emit(out_path, report_to_json(aggregate(std::move(frames))).dump(2) + "\n");
        return kOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

int cmd_diagnostics(const std::string& input, const RunConfig& cfg,
                    const std::string& out_path) {
    try {
        const RgbImage frame = load_ppm(input);
        const BinaryMask raw = skin_mask(frame, cfg.band);
        const BinaryMask smoothed = smooth_mask(raw, cfg.smooth_kernel, cfg.smooth_cutoff);
        const auto [hand, blob] = largest_blob_mask(smoothed, cfg.connectivity);
        const WristScan scan = detect_wrist_side(hand);
        const ProjectionHistogram h_x = project(hand, Axis::Columns);
        const ProjectionHistogram h_y = project(hand, Axis::Rows);
        const bool row_axis =
            scan.wrist_side == WristSide::Top || scan.wrist_side == WristSide::Bottom;
        const double threshold =
            cfg.slope_threshold_for(scan.wrist_side, hand.width, hand.height);
        const auto cut = find_wrist_cut(row_axis ? h_y : h_x, scan.wrist_side, threshold);

        StageTimings timings;
        const DetectionResult result = detect(frame, cfg, &timings);

        std::ostringstream out;
        out << "frame: " << frame.width << "x" << frame.height << '\n';
        out << "skin pixels: " << raw.foreground_count()
            << "  after smoothing: " << smoothed.foreground_count() << '\n';
        out << "largest blob: area " << blob.area << "  bbox [" << blob.bbox.xmin << ", "
            << blob.bbox.ymin << ", " << blob.bbox.xmax << ", " << blob.bbox.ymax << "]\n";

        const int peak = std::max({scan.contact(WristSide::Top), scan.contact(WristSide::Bottom),
                                   scan.contact(WristSide::Left), scan.contact(WristSide::Right),
                                   1});
        out << "first-contact scan:\n";
        for (const WristSide side :
             {WristSide::Top, WristSide::Bottom, WristSide::Left, WristSide::Right}) {
            const int count = scan.contact(side);
            out << "  " << to_string(side)
                << std::string(7 - to_string(side).size(), ' ') << count << "  "
                << std::string(static_cast<std::size_t>(40.0 * count / peak), '#') << '\n';
        }
        out << "direction: " << to_string(scan.wrist_side)
            << (scan.ambiguous ? " (ambiguous)" : "") << '\n';

        out << "wrist cut: ";
        if (cut)
            out << (row_axis ? "row " : "column ") << *cut << "  (slope threshold "
                << threshold << ")\n";
        else
            out << "none, tight-box fallback  (slope threshold " << threshold << ")\n";
        out << "crop: [" << result.crop.xmin << ", " << result.crop.ymin << ", "
            << result.crop.xmax << ", " << result.crop.ymax << "]\n";
        out << "tips:";
        if (result.tips.empty()) out << " none";
        for (const Fingertip& tip : result.tips)
            out << "  (" << tip.x << ", " << tip.y << ") ramp " << tip.ramp_value
                << " cluster " << tip.cluster_size;
        out << '\n';

        const auto histogram_line = [&out](const char* name, const std::vector<int>& counts) {
            out << name << ':';
            for (int c : counts) out << ' ' << c;
            out << '\n';
        };
        histogram_line("H_x", h_x.counts);
        histogram_line("H_y", h_y.counts);

        out.setf(std::ios::fixed);
        out.precision(3);
        out << "timings ms: skin " << timings.skin_ms << ", smooth " << timings.smooth_ms
            << ", blob " << timings.blob_ms << ", wrist " << timings.wrist_ms << ", crop "
            << timings.crop_ms << ", ramp " << timings.ramp_ms << ", tips " << timings.tips_ms
            << ", total " << timings.total_ms << '\n';
        emit(out_path, out.str());
        return kOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kProcessingError;
    }
}

}  // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"fingertip detection on netpbm frames", "fingertrace"};
    app.require_subcommand(1);

    auto* detect_cmd = app.add_subcommand("detect", "detect fingertips in one frame");
    std::string detect_input, detect_name, detect_out, detect_annotate;
    ConfigCli detect_cfg;
    detect_cmd->add_option("input", detect_input, "input PPM frame")->required();
    detect_cmd->add_option("--name", detect_name, "frame name in the JSON (default: file stem)");
    detect_cmd->add_option("--out", detect_out, "write the JSON here instead of stdout");
    detect_cmd->add_option("--annotate", detect_annotate, "write an annotated PPM here");
    detect_cfg.attach(detect_cmd);

    auto* batch_cmd = app.add_subcommand("batch", "detect over many frames");
    std::vector<std::string> batch_inputs;
    std::string batch_input_dir, batch_out_dir;
    bool batch_annotate = false, batch_strict = false;
    ConfigCli batch_cfg;
    batch_cmd->add_option("inputs", batch_inputs, "input PPM frames");
    batch_cmd->add_option("--input-dir", batch_input_dir, "also process every *.ppm here")
        ->check(CLI::ExistingDirectory);
    batch_cmd->add_option("--out-dir", batch_out_dir,
                          "write results.jsonl (and annotated frames) here");
    batch_cmd->add_flag("--annotate", batch_annotate, "write annotated copies under out-dir");
    batch_cmd->add_flag("--strict", batch_strict, "exit 2 if any frame fails");
    batch_cfg.attach(batch_cmd);

    auto* generate_cmd = app.add_subcommand("generate", "render a labeled synthetic corpus");
    std::string generate_spec, generate_out_dir;
    ConfigCli generate_cfg;
    generate_cmd->add_option("spec", generate_spec, "corpus spec file (key = value lines)")
        ->required()
        ->check(CLI::ExistingFile);
    generate_cmd->add_option("--out-dir", generate_out_dir, "output directory")->required();
    generate_cfg.attach(generate_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "score detections against ground truth");
    std::string eval_results, eval_truth, eval_out;
    double eval_radius = 5.0;
    eval_cmd->add_option("--results", eval_results, "results.jsonl from batch")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--truth", eval_truth, "truth.jsonl from generate")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--radius", eval_radius, "match radius in px at 640x480 (default 5)");
    eval_cmd->add_option("--out", eval_out, "write the report here instead of stdout");

    auto* diag_cmd =
        app.add_subcommand("dump-diagnostics", "print per-stage internals for one frame");
    std::string diag_input, diag_out;
    ConfigCli diag_cfg;
    diag_cmd->add_option("input", diag_input, "input PPM frame")->required();
    diag_cmd->add_option("--out", diag_out, "write the dump here instead of stdout");
    diag_cfg.attach(diag_cmd);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsageError;
    }

    const auto resolve = [](const ConfigCli& cc, RunConfig& cfg) {
        try {
            cfg = cc.resolve();
            return true;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return false;
        }
    };

    RunConfig cfg;
    if (app.got_subcommand(detect_cmd)) {
        if (!resolve(detect_cfg, cfg)) return kUsageError;
        return cmd_detect(detect_input, cfg, detect_name, detect_out, detect_annotate);
    }
    if (app.got_subcommand(batch_cmd)) {
        if (!resolve(batch_cfg, cfg)) return kUsageError;
        return cmd_batch(std::move(batch_inputs), batch_input_dir, cfg, batch_out_dir,
                         batch_annotate, batch_strict);
    }
    if (app.got_subcommand(generate_cmd)) {
        if (!resolve(generate_cfg, cfg)) return kUsageError;
        return cmd_generate(generate_spec, cfg, generate_out_dir);
    }
    if (app.got_subcommand(eval_cmd))
        return cmd_eval(eval_results, eval_truth, eval_radius, eval_out);
    if (app.got_subcommand(diag_cmd)) {
        if (!resolve(diag_cfg, cfg)) return kUsageError;
        return cmd_diagnostics(diag_input, cfg, diag_out);
    }
    return kUsageError;  // unreachable: require_subcommand(1)
}

}  // namespace fingertrace
