#pragma once

#include <vector>

#include "fingertrace/fingertip.hpp"
#include "fingertrace/synth.hpp"

namespace fingertrace {

struct FrameEval {
    int truth_count = 0;
    int detected_count = 0;
    int matched = 0;           // true positives
    double mean_error = 0.0;   // mean distance over matched pairs, 0 if none
    bool count_correct = false;
};

struct EvalReport {
    int frames = 0;
    int true_positives = 0;
    int false_positives = 0;
    int false_negatives = 0;
    int frames_count_correct = 0;
    double precision = 1.0;
    double recall = 1.0;
    double mean_tip_error = 0.0;  // over all matched pairs
    std::vector<FrameEval> per_frame;
};

// One frame: greedily pair each detected tip with the nearest unmatched truth
// tip within match_radius (ties broken by detection then truth order).
FrameEval evaluate_frame(const std::vector<Fingertip>& detected,
                         const std::vector<Point>& truth, double match_radius);

EvalReport aggregate(std::vector<FrameEval> frames);

// Element i of each list describes the same frame.
EvalReport evaluate(const std::vector<std::vector<Fingertip>>& detected,
                    const std::vector<std::vector<Point>>& truth, double match_radius);

// match_radius scaled the same way tip merging is: radius * diag / diag(640x480).
double match_radius_for(double match_radius, int width, int height);

}  // namespace fingertrace
