#include "neo/smote.hpp"

#include <algorithm>
#include <cmath>

#include "neo/errors.hpp"
#include "neo/rng.hpp"

namespace neo {

void SmoteConfig::validate() const {
    if (k < 1) throw ConfigError("smote: k must be >= 1");
    if (target_ratio <= 0.0) throw ConfigError("smote: target_ratio must be > 0");
}

std::vector<std::vector<std::size_t>> minority_neighbors(const Matrix& x_min, int k) {
    const std::size_t m = x_min.rows();
    if (m < 2) {
        throw DataError("smote: need at least 2 minority rows to interpolate");
    }
    const std::size_t k_eff = std::min<std::size_t>(static_cast<std::size_t>(k), m - 1);

    std::vector<std::vector<std::size_t>> table(m);
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        dist.clear();
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            double d2 = 0.0;
            const double* a = x_min.row(i);
            const double* b = x_min.row(j);
            for (std::size_t c = 0; c < x_min.cols(); ++c) {
                const double d = a[c] - b[c];
                d2 += d * d;
            }
            dist.emplace_back(d2, j);
        }
        // pair ordering gives the tie rule: equal distance -> lower index
        std::sort(dist.begin(), dist.end());
        table[i].reserve(k_eff);
        for (std::size_t n = 0; n < k_eff; ++n) {
            table[i].push_back(dist[n].second);
        }
    }
    return table;
}

std::vector<double> synthesize(std::span<const double> s, std::span<const double> n, double u) {
    if (s.size() != n.size()) {
        throw DataError("smote: sample/neighbor dimension mismatch");
    }
    std::vector<double> out(s.size());
    for (std::size_t c = 0; c < s.size(); ++c) {
        out[c] = s[c] + u * (n[c] - s[c]);
    }
    return out;
}

SmoteResult oversample(const Matrix& x, const std::vector<int>& y, const SmoteConfig& cfg) {
    cfg.validate();
    if (x.rows() != y.size()) {
        throw DataError("smote: feature rows and label count differ");
    }

    std::size_t pos = 0;
    for (const int label : y) pos += label == 1 ? 1 : 0;
    const std::size_t neg = y.size() - pos;
    if (pos == 0 || neg == 0) {
        throw DataError("smote: both classes must be present");
    }

    // ties go to the positive class so balanced input stays a no-op
    const int minority_label = pos <= neg ? 1 : 0;
    const std::size_t minority_count = std::min(pos, neg);
    const std::size_t majority_count = std::max(pos, neg);

    const auto target = static_cast<std::size_t>(
        std::llround(cfg.target_ratio * static_cast<double>(majority_count)));
    const std::size_t need = target > minority_count ? target - minority_count : 0;

    SmoteResult result;
    result.minority_label = minority_label;
    result.synthetic_count = need;
    result.y = y;
    result.x = Matrix(x.rows() + need, x.cols());
    std::copy(x.data().begin(), x.data().end(), result.x.data().begin());
    if (need == 0) {
        return result;
    }

    std::vector<std::size_t> minority_rows;
    minority_rows.reserve(minority_count);
    for (std::size_t r = 0; r < y.size(); ++r) {
        if (y[r] == minority_label) minority_rows.push_back(r);
    }
    if (minority_rows.size() < 2) {
        throw DataError("smote: need at least 2 minority rows to interpolate");
    }

    Matrix x_min(minority_rows.size(), x.cols());
    for (std::size_t i = 0; i < minority_rows.size(); ++i) {
        std::copy(x.row(minority_rows[i]), x.row(minority_rows[i]) + x.cols(), x_min.row(i));
    }
    const auto neighbors = minority_neighbors(x_min, cfg.k);

    Rng rng(cfg.seed);
    for (std::size_t j = 0; j < need; ++j) {
        const std::size_t s = rng.below(minority_rows.size());
        const auto& nbrs = neighbors[s];
        const std::size_t n = nbrs[rng.below(nbrs.size())];
        const double u = rng.uniform();
        const auto row = synthesize({x_min.row(s), x_min.cols()}, {x_min.row(n), x_min.cols()}, u);
        std::copy(row.begin(), row.end(), result.x.row(x.rows() + j));
        result.y.push_back(minority_label);
    }
    return result;
}

}  // namespace neo
