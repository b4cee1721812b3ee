#include "neo/ensemble.hpp"

#include <cmath>

#include "neo/activations.hpp"
#include "neo/errors.hpp"

namespace neo {

void EnsembleConfig::validate() const {
    if (w_ffnn < 0.0 || w_rnn < 0.0) {
        throw ConfigError("ensemble: weights must be nonnegative");
    }
    if (std::abs(w_ffnn + w_rnn - 1.0) > 1e-12) {
        throw ConfigError("ensemble: weights must sum to 1");
    }
    if (threshold <= 0.0 || threshold >= 1.0) {
        throw ConfigError("ensemble: threshold must lie in (0,1)");
    }
}

double aggregate(double p_ffnn, double p_rnn, const EnsembleConfig& cfg) {
    if (p_ffnn < 0.0 || p_ffnn > 1.0 || p_rnn < 0.0 || p_rnn > 1.0) {
        throw DataError("ensemble: branch probabilities must lie in [0,1]");
    }
    return cfg.w_ffnn * p_ffnn + cfg.w_rnn * p_rnn;
}

Prediction predict_record(const FfnnModel& ffnn, const RnnModel& rnn,
                          std::span<const double> numeric, const TimestepSequence& seq,
                          const EnsembleConfig& cfg) {
    Prediction pred;
    pred.p_ffnn = ffnn_forward(ffnn, numeric);
    pred.p_rnn = rnn_forward(rnn, seq);
    pred.p = aggregate(pred.p_ffnn, pred.p_rnn, cfg);
    pred.label = classify(pred.p, cfg.threshold);
    return pred;
}

}  // namespace neo
