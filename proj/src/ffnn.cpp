#include "neo/ffnn.hpp"

#include <cmath>
#include <string>

#include "neo/activations.hpp"
#include "neo/errors.hpp"
#include "neo/rng.hpp"

namespace neo {

FfnnModel init_ffnn(const std::vector<std::size_t>& arch, std::uint64_t seed) {
    if (arch.size() < 2) {
        throw ConfigError("ffnn: architecture needs at least input and output layers");
    }
    for (const std::size_t width : arch) {
        if (width == 0) {
            throw ConfigError("ffnn: layer sizes must be positive");
        }
    }
    if (arch.back() != 1) {
        throw ConfigError("ffnn: final layer must have exactly 1 output unit");
    }

    FfnnModel m;
    m.arch = arch;
    Rng rng(seed);
    for (std::size_t l = 0; l + 1 < arch.size(); ++l) {
        const std::size_t fan_in = arch[l];
        const std::size_t fan_out = arch[l + 1];
        const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        Matrix w(fan_out, fan_in);
        for (auto& v : w.data()) {
            v = rng.uniform(-limit, limit);
        }
        m.weights.push_back(std::move(w));
        m.biases.emplace_back(fan_out, 0.0);
    }
    return m;
}

FfnnModel zeros_like(const FfnnModel& m) {
    FfnnModel z;
    z.arch = m.arch;
    z.hidden_activation = m.hidden_activation;
    for (std::size_t l = 0; l < m.weights.size(); ++l) {
        z.weights.emplace_back(m.weights[l].rows(), m.weights[l].cols());
        z.biases.emplace_back(m.biases[l].size(), 0.0);
    }
    return z;
}

namespace {

void check_input(const FfnnModel& m, std::size_t width) {
    if (width != m.input_width()) {
        throw RuntimeError("ffnn: input width " + std::to_string(width) +
                           " does not match model input " + std::to_string(m.input_width()));
    }
}

}  // namespace

double ffnn_score(const FfnnModel& m, std::span<const double> x) {
    check_input(m, x.size());
    std::vector<double> act(x.begin(), x.end());
    std::vector<double> next;
    for (std::size_t l = 0; l < m.layer_count(); ++l) {
        next.assign(m.biases[l].begin(), m.biases[l].end());
        matvec_add(m.weights[l], act.data(), next.data());
        if (l + 1 < m.layer_count()) {
            for (auto& v : next) v = relu(v);
        }
        act.swap(next);
    }
    return act[0];
}

double ffnn_forward(const FfnnModel& m, std::span<const double> x) {
    return sigmoid(ffnn_score(m, x));
}

FfnnBackward ffnn_backward(const FfnnModel& m, const Matrix& x_batch,
                           const std::vector<int>& y_batch) {
    if (x_batch.rows() == 0) {
        throw DataError("ffnn: empty batch");
    }
    if (x_batch.rows() != y_batch.size()) {
        throw DataError("ffnn: batch rows and label count differ");
    }
    check_input(m, x_batch.cols());

    FfnnBackward out{zeros_like(m), 0.0};
    const std::size_t layers = m.layer_count();
    const double inv_batch = 1.0 / static_cast<double>(x_batch.rows());

    // activations[l] is the input to layer l; activations[layers] the score
    std::vector<std::vector<double>> activations(layers + 1);
    std::vector<double> delta, delta_prev;

    for (std::size_t r = 0; r < x_batch.rows(); ++r) {
        activations[0].assign(x_batch.row(r), x_batch.row(r) + x_batch.cols());
        for (std::size_t l = 0; l < layers; ++l) {
            activations[l + 1].assign(m.biases[l].begin(), m.biases[l].end());
            matvec_add(m.weights[l], activations[l].data(), activations[l + 1].data());
            if (l + 1 < layers) {
                for (auto& v : activations[l + 1]) v = relu(v);
            }
        }
        const double p = sigmoid(activations[layers][0]);
        out.mean_loss += bce_loss(p, y_batch[r]) * inv_batch;

        // sigmoid + BCE collapse to (p - y) at the output score
        delta.assign(1, (p - static_cast<double>(y_batch[r])) * inv_batch);
        for (std::size_t l = layers; l-- > 0;) {
            outer_add(out.grads.weights[l], delta.data(), activations[l].data());
            for (std::size_t k = 0; k < delta.size(); ++k) {
                out.grads.biases[l][k] += delta[k];
            }
            if (l == 0) break;
            delta_prev.assign(m.weights[l].cols(), 0.0);
            matvec_transpose_add(m.weights[l], delta.data(), delta_prev.data());
            // rectifier gate of the activation that fed this layer
            for (std::size_t k = 0; k < delta_prev.size(); ++k) {
                if (activations[l][k] <= 0.0) delta_prev[k] = 0.0;
            }
            delta.swap(delta_prev);
        }
    }
    return out;
}

}  // namespace neo
