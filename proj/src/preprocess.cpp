#include "neo/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "neo/errors.hpp"

namespace neo {

nlohmann::json TransformParams::to_json() const {
    return nlohmann::json{
        {"dropped", dropped},
        {"hla_categories", hla_categories},
        {"mean", mean},
        {"numeric_columns", numeric_columns},
        {"stddev", stddev},
    };
}

TransformParams TransformParams::from_json(const nlohmann::json& j) {
    TransformParams p;
    p.dropped = j.at("dropped").get<std::vector<std::string>>();
    p.hla_categories = j.at("hla_categories").get<std::vector<std::string>>();
    p.mean = j.at("mean").get<std::vector<double>>();
    p.numeric_columns = j.at("numeric_columns").get<std::vector<std::string>>();
    p.stddev = j.at("stddev").get<std::vector<double>>();
    if (p.mean.size() != p.numeric_columns.size() || p.stddev.size() != p.numeric_columns.size()) {
        throw DataError("transform params: column/statistic length mismatch");
    }
    return p;
}

TransformParams fit(const Dataset& train, const std::vector<std::string>& drop) {
    if (train.size() == 0) {
        throw DataError("fit: training dataset is empty");
    }
    const auto& all = Schema::numeric_names();
    for (const auto& name : drop) {
        if (std::find(all.begin(), all.end(), name) == all.end()) {
            throw ConfigError("fit: unknown column in drop list: " + name);
        }
    }

    TransformParams params;
    params.dropped = drop;
    std::sort(params.dropped.begin(), params.dropped.end());

    for (std::size_t f = 0; f < all.size(); ++f) {
        if (std::find(drop.begin(), drop.end(), all[f]) != drop.end()) continue;
        double sum = 0.0;
        std::size_t n = 0;
        for (const auto& rec : train.records()) {
            if (rec.numeric[f].has_value()) {
                sum += *rec.numeric[f];
                ++n;
            }
        }
        if (n == 0) {
            throw DataError("fit: numeric column " + all[f] + " has no present values");
        }
        const double mean = sum / static_cast<double>(n);
        double sq = 0.0;
        for (const auto& rec : train.records()) {
            if (rec.numeric[f].has_value()) {
                const double d = *rec.numeric[f] - mean;
                sq += d * d;
            }
        }
        params.numeric_columns.push_back(all[f]);
        params.mean.push_back(mean);
        params.stddev.push_back(std::sqrt(sq / static_cast<double>(n)));
    }

    std::set<std::string> categories;
    for (const auto& rec : train.records()) {
        categories.insert(rec.hla);
    }
    params.hla_categories.assign(categories.begin(), categories.end());
    return params;
}

int hla_code(const TransformParams& params, const std::string& hla) {
    const auto it =
        std::lower_bound(params.hla_categories.begin(), params.hla_categories.end(), hla);
    if (it == params.hla_categories.end() || *it != hla) {
        throw DataError("apply: unseen hla category '" + hla + "'");
    }
    return static_cast<int>(it - params.hla_categories.begin());
}

Matrix apply(const TransformParams& params, const Dataset& d) {
    const auto& all = Schema::numeric_names();
    std::vector<std::size_t> kept;
    for (std::size_t f = 0; f < all.size(); ++f) {
        if (std::find(params.numeric_columns.begin(), params.numeric_columns.end(), all[f]) !=
            params.numeric_columns.end()) {
            kept.push_back(f);
        }
    }

    Matrix out(d.size(), kept.size() + 1);
    for (std::size_t r = 0; r < d.size(); ++r) {
        const auto& rec = d[r];
        for (std::size_t c = 0; c < kept.size(); ++c) {
            const double x = rec.numeric[kept[c]].value_or(params.mean[c]);
            const double sd = params.stddev[c];
            out(r, c) = sd == 0.0 ? 0.0 : (x - params.mean[c]) / sd;
        }
        out(r, kept.size()) = static_cast<double>(hla_code(params, rec.hla));
    }
    return out;
}

}  // namespace neo
