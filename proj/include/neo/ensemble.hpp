#pragma once

#include <span>

#include "neo/ffnn.hpp"
#include "neo/lstm.hpp"

namespace neo {

struct EnsembleConfig {
    double w_ffnn = 0.5;
    double w_rnn = 0.5;
    double threshold = 0.5;

    void validate() const;  // weights nonnegative, sum 1 within 1e-12
};

// Fixed-weight average of the branch probabilities.
double aggregate(double p_ffnn, double p_rnn, const EnsembleConfig& cfg);

struct Prediction {
    double p_ffnn = 0.0;
    double p_rnn = 0.0;
    double p = 0.0;
    int label = 0;
};

Prediction predict_record(const FfnnModel& ffnn, const RnnModel& rnn,
                          std::span<const double> numeric, const TimestepSequence& seq,
                          const EnsembleConfig& cfg);

}  // namespace neo
