#include "neo/optimizer.hpp"

#include <cmath>

#include "neo/errors.hpp"

namespace neo {

void TrainConfig::validate() const {
    if (learning_rate <= 0.0) throw ConfigError("train: learning_rate must be > 0");
    if (batch_size < 1) throw ConfigError("train: batch_size must be >= 1");
    if (epochs < 1) throw ConfigError("train: epochs must be >= 1");
    if (beta1 < 0.0 || beta1 >= 1.0 || beta2 < 0.0 || beta2 >= 1.0) {
        throw ConfigError("train: adam betas must lie in [0,1)");
    }
    if (epsilon <= 0.0) throw ConfigError("train: adam epsilon must be > 0");
}

std::vector<ParamView> param_views(FfnnModel& m) {
    std::vector<ParamView> views;
    for (std::size_t l = 0; l < m.weights.size(); ++l) {
        views.push_back({m.weights[l].data().data(), m.weights[l].data().size()});
        views.push_back({m.biases[l].data(), m.biases[l].size()});
    }
    return views;
}

std::vector<ParamView> param_views(RnnModel& m) {
    std::vector<ParamView> views;
    for (auto& layer : m.layers) {
        for (Matrix* w : {&layer.w_f, &layer.u_f, &layer.w_i, &layer.u_i, &layer.w_o, &layer.u_o,
                          &layer.w_c, &layer.u_c}) {
            views.push_back({w->data().data(), w->data().size()});
        }
        for (std::vector<double>* b : {&layer.b_f, &layer.b_i, &layer.b_o, &layer.b_c}) {
            views.push_back({b->data(), b->size()});
        }
    }
    views.push_back({m.readout_w.data(), m.readout_w.size()});
    views.push_back({&m.readout_b, 1});
    return views;
}

Optimizer::Optimizer(const TrainConfig& cfg, const std::vector<ParamView>& params) : cfg_(cfg) {
    cfg_.validate();
    switch_epoch_ = cfg.switch_epoch.value_or(cfg.epochs / 2);
    state_.m.reserve(params.size());
    state_.v.reserve(params.size());
    for (const auto& p : params) {
        state_.m.emplace_back(p.size, 0.0);
        state_.v.emplace_back(p.size, 0.0);
    }
}

void Optimizer::step(const std::vector<ParamView>& params, const std::vector<ParamView>& grads,
                     std::size_t epoch) {
    if (params.size() != grads.size() || params.size() != state_.m.size()) {
        throw RuntimeError("optimizer: parameter/gradient tensor count mismatch");
    }

    const bool use_adam = cfg_.optimizer == OptimizerKind::Adam ||
                          (cfg_.optimizer == OptimizerKind::AdamThenSgd && epoch < switch_epoch_);
    if (!use_adam) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            for (std::size_t k = 0; k < params[i].size; ++k) {
                params[i].data[k] -= cfg_.learning_rate * grads[i].data[k];
            }
        }
        return;
    }

    ++state_.t;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(state_.t));
    const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(state_.t));
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].size != grads[i].size || params[i].size != state_.m[i].size()) {
            throw RuntimeError("optimizer: tensor shape mismatch");
        }
        double* m = state_.m[i].data();
        double* v = state_.v[i].data();
        for (std::size_t k = 0; k < params[i].size; ++k) {
            const double g = grads[i].data[k];
            m[k] = cfg_.beta1 * m[k] + (1.0 - cfg_.beta1) * g;
            v[k] = cfg_.beta2 * v[k] + (1.0 - cfg_.beta2) * g * g;
            const double m_hat = m[k] / bc1;
            const double v_hat = v[k] / bc2;
            params[i].data[k] -= cfg_.learning_rate * m_hat / (std::sqrt(v_hat) + cfg_.epsilon);
        }
    }
}

}  // namespace neo
