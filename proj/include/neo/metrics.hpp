#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace neo {

struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t total() const { return tp + fp + tn + fn; }
};

ConfusionMatrix confusion(const std::vector<int>& preds, const std::vector<int>& truth);

struct Rates {
    double accuracy = 0.0;
    double sensitivity = 0.0;  // recall
    double specificity = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
    bool degenerate_precision = false;  // tp+fp == 0
    bool degenerate_f1 = false;         // precision+recall == 0
};

Rates rates(const ConfusionMatrix& cm);

struct RocPoint {
    double threshold = 0.0;
    double fpr = 0.0;
    double tpr = 0.0;
};

// Thresholds are the descending unique scores plus a sentinel above the
// maximum; classification uses the inclusive >= rule throughout, so the
// curve runs from (0,0) to (1,1).
std::vector<RocPoint> roc_curve(const std::vector<double>& scores,
                                const std::vector<int>& truth);

// Trapezoidal area; equals the pairwise ranking statistic with ties at half
// credit.
double auc(const std::vector<RocPoint>& roc);

struct EvalTiming {
    double total_ms = 0.0;
    double records_per_second = 0.0;
};

struct EvalReport {
    ConfusionMatrix cm;
    Rates r;
    std::vector<RocPoint> roc;
    double auc_value = 0.0;
    double loss = 0.0;          // mean BCE of the scores
    double threshold = 0.5;
    EvalTiming timing;          // informational; excluded from to_json

    // Deterministic key-ordered document; wall-clock timing deliberately
    // lives outside so identical runs serialize identically.
    nlohmann::json to_json() const;
    std::string roc_csv() const;

    bool same_decisions(const EvalReport& other) const;  // everything but timing
};

EvalReport evaluate(const std::vector<double>& scores, const std::vector<int>& truth,
                    double threshold = 0.5);

}  // namespace neo
