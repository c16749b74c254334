#include "fingertrace/eval.hpp"

#include <algorithm>
#include <cmath>

#include "fingertrace/errors.hpp"

namespace fingertrace {

double match_radius_for(double match_radius, int width, int height) {
    return match_radius * std::hypot(width, height) / std::hypot(640.0, 480.0);
}

FrameEval evaluate_frame(const std::vector<Fingertip>& detected,
                         const std::vector<Point>& truth, double match_radius) {
    struct Pair {
        double dist;
        std::size_t det, tru;
    };
    std::vector<Pair> pairs;
    for (std::size_t d = 0; d < detected.size(); ++d)
        for (std::size_t t = 0; t < truth.size(); ++t) {
            const double dist =
                std::hypot(detected[d].x - truth[t].x, detected[d].y - truth[t].y);
            if (dist <= match_radius) pairs.push_back({dist, d, t});
        }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        if (a.det != b.det) return a.det < b.det;
        return a.tru < b.tru;
    });

    std::vector<bool> det_used(detected.size()), tru_used(truth.size());
    FrameEval fe;
    fe.truth_count = static_cast<int>(truth.size());
    fe.detected_count = static_cast<int>(detected.size());
    double error_sum = 0.0;
    for (const Pair& p : pairs) {
        if (det_used[p.det] || tru_used[p.tru]) continue;
        det_used[p.det] = tru_used[p.tru] = true;
        ++fe.matched;
        error_sum += p.dist;
    }
    if (fe.matched > 0) fe.mean_error = error_sum / fe.matched;
    fe.count_correct = fe.detected_count == fe.truth_count;
    return fe;
}

EvalReport aggregate(std::vector<FrameEval> frames) {
    EvalReport report;
    report.frames = static_cast<int>(frames.size());
    double error_sum = 0.0;
    for (const FrameEval& fe : frames) {
        report.true_positives += fe.matched;
        report.false_positives += fe.detected_count - fe.matched;
        report.false_negatives += fe.truth_count - fe.matched;
        report.frames_count_correct += fe.count_correct ? 1 : 0;
        error_sum += fe.mean_error * fe.matched;
    }
    const int det_total = report.true_positives + report.false_positives;
    const int tru_total = report.true_positives + report.false_negatives;
    report.precision = det_total == 0 ? 1.0 : static_cast<double>(report.true_positives) / det_total;
    report.recall = tru_total == 0 ? 1.0 : static_cast<double>(report.true_positives) / tru_total;
    if (report.true_positives > 0) report.mean_tip_error = error_sum / report.true_positives;
    report.per_frame = std::move(frames);
    return report;
}

EvalReport evaluate(const std::vector<std::vector<Fingertip>>& detected,
                    const std::vector<std::vector<Point>>& truth, double match_radius) {
    if (detected.size() != truth.size())
        throw LengthMismatch(detected.size(), truth.size());

    std::vector<FrameEval> frames;
    frames.reserve(detected.size());
    for (std::size_t i = 0; i < detected.size(); ++i)
        frames.push_back(evaluate_frame(detected[i], truth[i], match_radius));
    return aggregate(std::move(frames));
}

}  // namespace fingertrace
