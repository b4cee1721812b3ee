#include "neo/lstm.hpp"

#include <cmath>
#include <string>

#include "neo/activations.hpp"
#include "neo/errors.hpp"
#include "neo/rng.hpp"

namespace neo {

namespace {

Matrix glorot(std::size_t rows, std::size_t cols, Rng& rng) {
    const double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
    Matrix m(rows, cols);
    for (auto& v : m.data()) {
        v = rng.uniform(-limit, limit);
    }
    return m;
}

LstmLayer init_layer(std::size_t input, std::size_t hidden, Rng& rng) {
    LstmLayer layer;
    layer.input_size = input;
    layer.hidden_size = hidden;
    layer.w_f = glorot(hidden, input, rng);
    layer.u_f = glorot(hidden, hidden, rng);
    layer.w_i = glorot(hidden, input, rng);
    layer.u_i = glorot(hidden, hidden, rng);
    layer.w_o = glorot(hidden, input, rng);
    layer.u_o = glorot(hidden, hidden, rng);
    layer.w_c = glorot(hidden, input, rng);
    layer.u_c = glorot(hidden, hidden, rng);
    layer.b_f.assign(hidden, 0.0);
    layer.b_i.assign(hidden, 0.0);
    layer.b_o.assign(hidden, 0.0);
    layer.b_c.assign(hidden, 0.0);
    return layer;
}

void check_dims(const LstmLayer& layer, std::size_t x_size, const LstmState& s) {
    if (x_size != layer.input_size || s.h.size() != layer.hidden_size ||
        s.c.size() != layer.hidden_size) {
        throw RuntimeError("lstm: step dimension mismatch");
    }
}

// per-timestep cache of one layer's forward pass
struct StepCache {
    std::vector<double> x;   // layer input
    std::vector<double> f, i, o, g;
    std::vector<double> c, tc, h;
};

StepCache forward_step(const LstmLayer& layer, std::span<const double> x, const LstmState& s) {
    const std::size_t hid = layer.hidden_size;
    StepCache cache;
    cache.x.assign(x.begin(), x.end());
    cache.f.assign(layer.b_f.begin(), layer.b_f.end());
    cache.i.assign(layer.b_i.begin(), layer.b_i.end());
    cache.o.assign(layer.b_o.begin(), layer.b_o.end());
    cache.g.assign(layer.b_c.begin(), layer.b_c.end());
    matvec_add(layer.w_f, cache.x.data(), cache.f.data());
    matvec_add(layer.u_f, s.h.data(), cache.f.data());
    matvec_add(layer.w_i, cache.x.data(), cache.i.data());
    matvec_add(layer.u_i, s.h.data(), cache.i.data());
    matvec_add(layer.w_o, cache.x.data(), cache.o.data());
    matvec_add(layer.u_o, s.h.data(), cache.o.data());
    matvec_add(layer.w_c, cache.x.data(), cache.g.data());
    matvec_add(layer.u_c, s.h.data(), cache.g.data());
    cache.c.resize(hid);
    cache.tc.resize(hid);
    cache.h.resize(hid);
    for (std::size_t k = 0; k < hid; ++k) {
        cache.f[k] = sigmoid(cache.f[k]);
        cache.i[k] = sigmoid(cache.i[k]);
        cache.o[k] = sigmoid(cache.o[k]);
        cache.g[k] = std::tanh(cache.g[k]);
        cache.c[k] = cache.f[k] * s.c[k] + cache.i[k] * cache.g[k];
        cache.tc[k] = std::tanh(cache.c[k]);
        cache.h[k] = cache.o[k] * cache.tc[k];
    }
    return cache;
}

}  // namespace

LstmState zero_state(const LstmLayer& layer) {
    return {std::vector<double>(layer.hidden_size, 0.0),
            std::vector<double>(layer.hidden_size, 0.0)};
}

LstmState lstm_step(const LstmLayer& layer, std::span<const double> x, const LstmState& s) {
    check_dims(layer, x.size(), s);
    auto cache = forward_step(layer, x, s);
    return {std::move(cache.h), std::move(cache.c)};
}

RnnModel init_rnn(const std::vector<std::size_t>& arch, std::uint64_t seed) {
    if (arch.size() < 3) {
        throw ConfigError("rnn: architecture needs input, at least one LSTM layer, and output");
    }
    for (const std::size_t width : arch) {
        if (width == 0) {
            throw ConfigError("rnn: layer sizes must be positive");
        }
    }
    if (arch.back() != 1) {
        throw ConfigError("rnn: final layer must have exactly 1 output unit");
    }

    RnnModel m;
    m.input_width = arch.front();
    Rng rng(seed);
    std::size_t input = arch.front();
    for (std::size_t l = 1; l + 1 < arch.size(); ++l) {
        m.layers.push_back(init_layer(input, arch[l], rng));
        input = arch[l];
    }
    const double limit = std::sqrt(6.0 / static_cast<double>(input + 1));
    m.readout_w.resize(input);
    for (auto& v : m.readout_w) {
        v = rng.uniform(-limit, limit);
    }
    m.readout_b = 0.0;
    return m;
}

RnnModel zeros_like(const RnnModel& m) {
    RnnModel z;
    z.input_width = m.input_width;
    for (const auto& layer : m.layers) {
        LstmLayer zl;
        zl.input_size = layer.input_size;
        zl.hidden_size = layer.hidden_size;
        zl.w_f = Matrix(layer.hidden_size, layer.input_size);
        zl.u_f = Matrix(layer.hidden_size, layer.hidden_size);
        zl.w_i = zl.w_f;
        zl.u_i = zl.u_f;
        zl.w_o = zl.w_f;
        zl.u_o = zl.u_f;
        zl.w_c = zl.w_f;
        zl.u_c = zl.u_f;
        zl.b_f.assign(layer.hidden_size, 0.0);
        zl.b_i = zl.b_f;
        zl.b_o = zl.b_f;
        zl.b_c = zl.b_f;
        z.layers.push_back(std::move(zl));
    }
    z.readout_w.assign(m.readout_w.size(), 0.0);
    z.readout_b = 0.0;
    return z;
}

std::vector<std::size_t> rnn_arch(const RnnModel& m) {
    std::vector<std::size_t> arch{m.input_width};
    for (const auto& layer : m.layers) {
        arch.push_back(layer.hidden_size);
    }
    arch.push_back(1);
    return arch;
}

namespace {

int effective_len(const RnnModel& m, const TimestepSequence& seq) {
    if (seq.valid_len <= 0 || seq.steps.rows() == 0) {
        throw DataError("rnn: empty sequence");
    }
    if (seq.steps.cols() != m.input_width) {
        throw RuntimeError("rnn: timestep width " + std::to_string(seq.steps.cols()) +
                           " does not match model input " + std::to_string(m.input_width));
    }
    return std::min(seq.valid_len, static_cast<int>(seq.steps.rows()));
}

}  // namespace

double rnn_score(const RnnModel& m, const TimestepSequence& seq) {
    const int steps = effective_len(m, seq);
    std::vector<LstmState> states;
    states.reserve(m.layers.size());
    for (const auto& layer : m.layers) {
        states.push_back(zero_state(layer));
    }
    for (int t = 0; t < steps; ++t) {
        std::span<const double> x = seq.steps.row_span(static_cast<std::size_t>(t));
        for (std::size_t l = 0; l < m.layers.size(); ++l) {
            states[l] = lstm_step(m.layers[l], x, states[l]);
            x = {states[l].h.data(), states[l].h.size()};
        }
    }
    const auto& top = states.back().h;
    double z = m.readout_b;
    for (std::size_t k = 0; k < top.size(); ++k) {
        z += m.readout_w[k] * top[k];
    }
    return z;
}

double rnn_forward(const RnnModel& m, const TimestepSequence& seq) {
    return sigmoid(rnn_score(m, seq));
}

RnnBackward rnn_backward(const RnnModel& m, const std::vector<TimestepSequence>& batch,
                         const std::vector<int>& y_batch) {
    if (batch.empty()) {
        throw DataError("rnn: empty batch");
    }
    if (batch.size() != y_batch.size()) {
        throw DataError("rnn: batch size and label count differ");
    }

    RnnBackward out{zeros_like(m), 0.0};
    const double inv_batch = 1.0 / static_cast<double>(batch.size());
    const std::size_t n_layers = m.layers.size();

    // reused across samples; grown on demand
    std::vector<std::vector<StepCache>> caches(n_layers);
    std::vector<std::vector<double>> dh_seq, dx_seq;

    for (std::size_t r = 0; r < batch.size(); ++r) {
        const auto& seq = batch[r];
        const int steps = effective_len(m, seq);

        // forward, caching every gate
        for (std::size_t l = 0; l < n_layers; ++l) {
            caches[l].clear();
        }
        std::vector<LstmState> states;
        states.reserve(n_layers);
        for (const auto& layer : m.layers) {
            states.push_back(zero_state(layer));
        }
        for (int t = 0; t < steps; ++t) {
            std::span<const double> x = seq.steps.row_span(static_cast<std::size_t>(t));
            for (std::size_t l = 0; l < n_layers; ++l) {
                caches[l].push_back(forward_step(m.layers[l], x, states[l]));
                states[l].h = caches[l].back().h;
                states[l].c = caches[l].back().c;
                x = {states[l].h.data(), states[l].h.size()};
            }
        }
        const auto& top = states.back().h;
        double z = m.readout_b;
        for (std::size_t k = 0; k < top.size(); ++k) {
            z += m.readout_w[k] * top[k];
        }
        const double p = sigmoid(z);
        out.mean_loss += bce_loss(p, y_batch[r]) * inv_batch;
        const double dscore = (p - static_cast<double>(y_batch[r])) * inv_batch;

        for (std::size_t k = 0; k < top.size(); ++k) {
            out.grads.readout_w[k] += dscore * top[k];
        }
        out.grads.readout_b += dscore;

        // gradient flowing into each timestep's hidden output of the top layer
        dh_seq.assign(static_cast<std::size_t>(steps), {});
        const std::size_t top_hidden = m.layers.back().hidden_size;
        for (auto& v : dh_seq) v.assign(top_hidden, 0.0);
        for (std::size_t k = 0; k < top_hidden; ++k) {
            dh_seq[static_cast<std::size_t>(steps - 1)][k] = dscore * m.readout_w[k];
        }

        for (std::size_t l = n_layers; l-- > 0;) {
            const auto& layer = m.layers[l];
            auto& g = out.grads.layers[l];
            const std::size_t hid = layer.hidden_size;

            dx_seq.assign(static_cast<std::size_t>(steps), {});
            for (auto& v : dx_seq) v.assign(layer.input_size, 0.0);

            std::vector<double> dh_carry(hid, 0.0), dc_carry(hid, 0.0);
            std::vector<double> dzf(hid), dzi(hid), dzo(hid), dzg(hid);
            for (int t = steps - 1; t >= 0; --t) {
                const auto& cache = caches[l][static_cast<std::size_t>(t)];
                const std::vector<double>* c_prev =
                    t > 0 ? &caches[l][static_cast<std::size_t>(t - 1)].c : nullptr;
                const std::vector<double>* h_prev =
                    t > 0 ? &caches[l][static_cast<std::size_t>(t - 1)].h : nullptr;

                for (std::size_t k = 0; k < hid; ++k) {
                    const double dh = dh_seq[static_cast<std::size_t>(t)][k] + dh_carry[k];
                    const double dout = dh * cache.tc[k];
                    const double dc =
                        dc_carry[k] + dh * cache.o[k] * (1.0 - cache.tc[k] * cache.tc[k]);
                    const double cp = c_prev ? (*c_prev)[k] : 0.0;
                    dzf[k] = dc * cp * cache.f[k] * (1.0 - cache.f[k]);
                    dzi[k] = dc * cache.g[k] * cache.i[k] * (1.0 - cache.i[k]);
                    dzo[k] = dout * cache.o[k] * (1.0 - cache.o[k]);
                    dzg[k] = dc * cache.i[k] * (1.0 - cache.g[k] * cache.g[k]);
                    dc_carry[k] = dc * cache.f[k];
                }

                outer_add(g.w_f, dzf.data(), cache.x.data());
                outer_add(g.w_i, dzi.data(), cache.x.data());
                outer_add(g.w_o, dzo.data(), cache.x.data());
                outer_add(g.w_c, dzg.data(), cache.x.data());
                if (h_prev) {
                    outer_add(g.u_f, dzf.data(), h_prev->data());
                    outer_add(g.u_i, dzi.data(), h_prev->data());
                    outer_add(g.u_o, dzo.data(), h_prev->data());
                    outer_add(g.u_c, dzg.data(), h_prev->data());
                }
                for (std::size_t k = 0; k < hid; ++k) {
                    g.b_f[k] += dzf[k];
                    g.b_i[k] += dzi[k];
                    g.b_o[k] += dzo[k];
                    g.b_c[k] += dzg[k];
                }

                auto& dx = dx_seq[static_cast<std::size_t>(t)];
                matvec_transpose_add(layer.w_f, dzf.data(), dx.data());
                matvec_transpose_add(layer.w_i, dzi.data(), dx.data());
                matvec_transpose_add(layer.w_o, dzo.data(), dx.data());
                matvec_transpose_add(layer.w_c, dzg.data(), dx.data());

                if (t > 0) {
                    std::fill(dh_carry.begin(), dh_carry.end(), 0.0);
                    matvec_transpose_add(layer.u_f, dzf.data(), dh_carry.data());
                    matvec_transpose_add(layer.u_i, dzi.data(), dh_carry.data());
                    matvec_transpose_add(layer.u_o, dzo.data(), dh_carry.data());
                    matvec_transpose_add(layer.u_c, dzg.data(), dh_carry.data());
                }
            }
            dh_seq = dx_seq;  // feeds the layer below
        }
    }
    return out;
}

}  // namespace neo
