#include "neo/train.hpp"

#include <numeric>

#include "neo/errors.hpp"
#include "neo/rng.hpp"

namespace neo {

namespace {

void check_labels(const std::vector<int>& y, TrainHistory& history) {
    for (const int label : y) {
        if (label != 0 && label != 1) {
            throw DataError("train: labels must be binary");
        }
    }
    const auto pos = static_cast<std::size_t>(std::accumulate(y.begin(), y.end(), 0));
    if (pos == 0 || pos == y.size()) {
        history.warnings.push_back("training labels contain a single class");
    }
}

// One epoch order, one batch at a time.
template <typename StepFn>
TrainHistory run_epochs(std::size_t n, const TrainConfig& cfg, const std::vector<int>& y,
                        StepFn&& step_batch) {
    TrainHistory history;
    if (n == 0) {
        throw DataError("train: training data is empty");
    }
    if (n != y.size()) {
        throw DataError("train: sample count and label count differ");
    }
    check_labels(y, history);

    Rng shuffle_rng(derive_seed(cfg.seed, "shuffle"));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        double loss_sum = 0.0;
        for (std::size_t start = 0; start < n; start += cfg.batch_size) {
            const std::size_t size = std::min(cfg.batch_size, n - start);
            const double batch_loss =
                step_batch({order.begin() + static_cast<std::ptrdiff_t>(start),
                            order.begin() + static_cast<std::ptrdiff_t>(start + size)},
                           epoch);
            loss_sum += batch_loss * static_cast<double>(size);
        }
        history.epoch_loss.push_back(loss_sum / static_cast<double>(n));
    }
    return history;
}

}  // namespace

TrainHistory train_ffnn(FfnnModel& model, const Matrix& x, const std::vector<int>& y,
                        const TrainConfig& cfg) {
    cfg.validate();
    Optimizer opt(cfg, param_views(model));

    Matrix batch_x;
    std::vector<int> batch_y;
    return run_epochs(x.rows(), cfg, y, [&](std::span<const std::size_t> rows, std::size_t epoch) {
        batch_x = Matrix(rows.size(), x.cols());
        batch_y.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::copy(x.row(rows[i]), x.row(rows[i]) + x.cols(), batch_x.row(i));
            batch_y[i] = y[rows[i]];
        }
        auto back = ffnn_backward(model, batch_x, batch_y);
        opt.step(param_views(model), param_views(back.grads), epoch);
        return back.mean_loss;
    });
}

TrainHistory train_rnn(RnnModel& model, const std::vector<TimestepSequence>& seqs,
                       const std::vector<int>& y, const TrainConfig& cfg) {
    cfg.validate();
    Optimizer opt(cfg, param_views(model));

    std::vector<TimestepSequence> batch;
    std::vector<int> batch_y;
    return run_epochs(seqs.size(), cfg, y,
                      [&](std::span<const std::size_t> rows, std::size_t epoch) {
                          batch.clear();
                          batch_y.clear();
                          for (const std::size_t r : rows) {
                              batch.push_back(seqs[r]);
                              batch_y.push_back(y[r]);
                          }
                          auto back = rnn_backward(model, batch, batch_y);
                          opt.step(param_views(model), param_views(back.grads), epoch);
                          return back.mean_loss;
                      });
}

TrainHistory train_rnn_packed(RnnModel& model, const Matrix& combined,
                              const FeaturePacking& packing, const std::vector<int>& y,
                              const TrainConfig& cfg) {
    cfg.validate();
    Optimizer opt(cfg, param_views(model));
    const auto layout =
        CombinedLayout::make(combined.cols() - 1 - 2 * static_cast<std::size_t>(packing.max_len),
                             packing.max_len);
    if (layout.total != combined.cols()) {
        throw RuntimeError("train: combined matrix width does not match packing");
    }

    std::vector<TimestepSequence> batch;
    std::vector<int> batch_y;
    return run_epochs(combined.rows(), cfg, y,
                      [&](std::span<const std::size_t> rows, std::size_t epoch) {
                          batch.clear();
                          batch_y.clear();
                          for (const std::size_t r : rows) {
                              batch.push_back(
                                  pack_sequence(packing, combined.row_span(r), layout));
                              batch_y.push_back(y[r]);
                          }
                          auto back = rnn_backward(model, batch, batch_y);
                          opt.step(param_views(model), param_views(back.grads), epoch);
                          return back.mean_loss;
                      });
}

}  // namespace neo
