#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "neo/ffnn.hpp"
#include "neo/lstm.hpp"

namespace neo {

enum class OptimizerKind { Sgd, Adam, AdamThenSgd };

struct TrainConfig {
    double learning_rate = 0.001;
    std::size_t batch_size = 100;
    std::size_t epochs = 100;
    OptimizerKind optimizer = OptimizerKind::AdamThenSgd;
    std::optional<std::size_t> switch_epoch;  // AdamThenSgd; unset = epochs/2
    std::uint64_t seed = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    void validate() const;
};

// Flat view over one parameter tensor; models and their gradient twins
// expose the same view order.
struct ParamView {
    double* data = nullptr;
    std::size_t size = 0;
};

std::vector<ParamView> param_views(FfnnModel& m);
std::vector<ParamView> param_views(RnnModel& m);

struct AdamState {
    std::vector<std::vector<double>> m;
    std::vector<std::vector<double>> v;
    std::uint64_t t = 0;
};

// Applies sgd / bias-corrected adam / the adam-then-sgd schedule.
class Optimizer {
public:
    Optimizer(const TrainConfig& cfg, const std::vector<ParamView>& params);

    void step(const std::vector<ParamView>& params, const std::vector<ParamView>& grads,
              std::size_t epoch);

private:
    TrainConfig cfg_;
    std::size_t switch_epoch_;
    AdamState state_;
};

}  // namespace neo
