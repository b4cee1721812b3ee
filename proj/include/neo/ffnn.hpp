#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "neo/matrix.hpp"

namespace neo {

enum class Activation { Relu };

// Dense feed-forward branch. Hidden layers apply the rectifier; the single
// output unit applies the logistic at forward time.
struct FfnnModel {
    std::vector<std::size_t> arch;             // e.g. {8, 16, 32, 1}
    std::vector<Matrix> weights;               // per layer, out x in
    std::vector<std::vector<double>> biases;   // per layer, out
    Activation hidden_activation = Activation::Relu;

    std::size_t input_width() const { return arch.empty() ? 0 : arch.front(); }
    std::size_t layer_count() const { return weights.size(); }

    bool operator==(const FfnnModel&) const = default;
};

// Glorot-uniform weights, zero biases, seed-deterministic.
FfnnModel init_ffnn(const std::vector<std::size_t>& arch, std::uint64_t seed);

FfnnModel zeros_like(const FfnnModel& m);

// Pre-sigmoid output score (the quantity relevance propagation decomposes).
double ffnn_score(const FfnnModel& m, std::span<const double> x);
double ffnn_forward(const FfnnModel& m, std::span<const double> x);

struct FfnnBackward {
    FfnnModel grads;   // same shapes as the model; arch fields mirror it
    double mean_loss = 0.0;
};

// Gradients of the mean BCE over the batch w.r.t. every parameter tensor.
FfnnBackward ffnn_backward(const FfnnModel& m, const Matrix& x_batch,
                           const std::vector<int>& y_batch);

}  // namespace neo
