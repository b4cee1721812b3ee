#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "neo/dataset.hpp"
#include "neo/matrix.hpp"

namespace neo {

// Fit-on-train / apply-everywhere column transforms. Statistics are computed
// from training rows only; applying to other rows never updates them.
struct TransformParams {
    std::vector<std::string> numeric_columns;  // kept columns, schema order
    std::vector<double> mean;                  // over present values
    std::vector<double> stddev;                // population convention
    std::vector<std::string> hla_categories;   // sorted; code = index
    std::vector<std::string> dropped;          // excluded numeric columns

    nlohmann::json to_json() const;
    static TransformParams from_json(const nlohmann::json& j);

    bool operator==(const TransformParams&) const = default;
};

TransformParams fit(const Dataset& train, const std::vector<std::string>& drop = {});

// Unseen category at apply time is an error, never a silent new code.
int hla_code(const TransformParams& params, const std::string& hla);

// Output columns: kept numerics (imputed then standardized; std 0 maps to 0)
// followed by one hla code column. Row order preserved.
Matrix apply(const TransformParams& params, const Dataset& d);

}  // namespace neo
