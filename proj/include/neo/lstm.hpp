#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "neo/matrix.hpp"

namespace neo {

// One LSTM layer: forget/input/output gates plus the candidate cell update.
struct LstmLayer {
    std::size_t input_size = 0;
    std::size_t hidden_size = 0;
    Matrix w_f, w_i, w_o, w_c;              // input weights, hidden x input
    Matrix u_f, u_i, u_o, u_c;              // recurrent weights, hidden x hidden
    std::vector<double> b_f, b_i, b_o, b_c;

    bool operator==(const LstmLayer&) const = default;
};

struct LstmState {
    std::vector<double> h;
    std::vector<double> c;
};

LstmState zero_state(const LstmLayer& layer);

// f = s(Wf x + Uf h + bf); i, o alike; cand = tanh(Wc x + Uc h + bc)
// c' = f*c + i*cand; h' = o*tanh(c')
LstmState lstm_step(const LstmLayer& layer, std::span<const double> x, const LstmState& s);

// Stacked LSTM layers feeding a dense single-unit readout.
struct RnnModel {
    std::size_t input_width = 0;
    std::vector<LstmLayer> layers;
    std::vector<double> readout_w;  // over the last layer's final hidden state
    double readout_b = 0.0;

    bool operator==(const RnnModel&) const = default;
};

// arch {input, hidden..., 1}, e.g. {35, 32, 32, 1}
RnnModel init_rnn(const std::vector<std::size_t>& arch, std::uint64_t seed);

RnnModel zeros_like(const RnnModel& m);

std::vector<std::size_t> rnn_arch(const RnnModel& m);

// One record's sequence view: rows are per-timestep feature vectors; only the
// first valid_len rows are real, anything after is padding and is skipped.
struct TimestepSequence {
    Matrix steps;
    int valid_len = 0;
};

double rnn_score(const RnnModel& m, const TimestepSequence& seq);
double rnn_forward(const RnnModel& m, const TimestepSequence& seq);

struct RnnBackward {
    RnnModel grads;
    double mean_loss = 0.0;
};

// Full backpropagation through time for the mean BCE over the batch.
RnnBackward rnn_backward(const RnnModel& m, const std::vector<TimestepSequence>& batch,
                         const std::vector<int>& y_batch);

}  // namespace neo
