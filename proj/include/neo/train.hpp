#pragma once

#include <string>
#include <vector>

#include "neo/ffnn.hpp"
#include "neo/lstm.hpp"
#include "neo/optimizer.hpp"
#include "neo/packing.hpp"

namespace neo {

struct TrainHistory {
    std::vector<double> epoch_loss;      // mean BCE per epoch, length = epochs
    std::vector<std::string> warnings;
};

// Seed-deterministic: shuffles every epoch, mini-batches of cfg.batch_size
// (last batch may be smaller). Single-class labels are a warning, not an error.
TrainHistory train_ffnn(FfnnModel& model, const Matrix& x, const std::vector<int>& y,
                        const TrainConfig& cfg);

TrainHistory train_rnn(RnnModel& model, const std::vector<TimestepSequence>& seqs,
                       const std::vector<int>& y, const TrainConfig& cfg);

// Same loop, but packs each combined-matrix row into its timestep view on the
// fly; keeps the memory footprint flat for large resampled training sets.
TrainHistory train_rnn_packed(RnnModel& model, const Matrix& combined, const FeaturePacking& packing,
                              const std::vector<int>& y, const TrainConfig& cfg);

}  // namespace neo
