#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "neo/dataset.hpp"
#include "neo/lstm.hpp"
#include "neo/matrix.hpp"
#include "neo/preprocess.hpp"

namespace neo {

// How one record becomes (a) a flat numeric row shared by SMOTE and both
// branches and (b) the per-timestep vectors the recurrent branch consumes.
//
// Combined row layout:  [numerics | hla | mut tokens | wt tokens]
// Timestep t:           [mut_tok(t), wt_tok(t), t/max_len, numerics..., hla, 0...]
// padded with zeros out to `width`. Token codes are raw values in [0,20];
// interpolated (synthetic) rows may carry fractional codes.
struct FeaturePacking {
    int max_len = static_cast<int>(kMaxPeptideLen);
    std::size_t width = 35;

    std::string descriptor(std::size_t numeric_count) const;

    nlohmann::json to_json() const;
    static FeaturePacking from_json(const nlohmann::json& j);

    bool operator==(const FeaturePacking&) const = default;
};

// column offsets inside a combined row with `numeric_count` kept numerics
struct CombinedLayout {
    std::size_t numeric_count = 0;
    std::size_t hla = 0;        // single column
    std::size_t mut_tokens = 0; // max_len columns
    std::size_t wt_tokens = 0;  // max_len columns
    std::size_t total = 0;

    static CombinedLayout make(std::size_t numeric_count, int max_len);
};

// transformed = apply(params, d); rows align with d
Matrix build_combined(const TransformParams& params, const Dataset& d,
                      const FeaturePacking& packing);

// A step is real while either token is a residue; trailing all-pad steps are
// cut. Fractional codes from interpolation count as real below pad-0.5.
int combined_valid_len(std::span<const double> row, const CombinedLayout& layout);

TimestepSequence pack_sequence(const FeaturePacking& packing, std::span<const double> row,
                               const CombinedLayout& layout);

}  // namespace neo
