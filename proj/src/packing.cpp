#include "neo/packing.hpp"

#include <algorithm>

#include "neo/errors.hpp"

namespace neo {

std::string FeaturePacking::descriptor(std::size_t numeric_count) const {
    const std::size_t used = 3 + numeric_count + 1;
    return "mut_tok,wt_tok,pos_frac,numerics[" + std::to_string(numeric_count) + "],hla,zeros[" +
           std::to_string(width - used) + "]";
}

nlohmann::json FeaturePacking::to_json() const {
    return nlohmann::json{{"max_len", max_len}, {"width", width}};
}

FeaturePacking FeaturePacking::from_json(const nlohmann::json& j) {
    FeaturePacking p;
    p.max_len = j.at("max_len").get<int>();
    p.width = j.at("width").get<std::size_t>();
    return p;
}

CombinedLayout CombinedLayout::make(std::size_t numeric_count, int max_len) {
    CombinedLayout layout;
    layout.numeric_count = numeric_count;
    layout.hla = numeric_count;
    layout.mut_tokens = numeric_count + 1;
    layout.wt_tokens = layout.mut_tokens + static_cast<std::size_t>(max_len);
    layout.total = layout.wt_tokens + static_cast<std::size_t>(max_len);
    return layout;
}

Matrix build_combined(const TransformParams& params, const Dataset& d,
                      const FeaturePacking& packing) {
    const Matrix transformed = apply(params, d);
    const std::size_t numeric_count = transformed.cols() - 1;  // hla is the last column
    const auto layout = CombinedLayout::make(numeric_count, packing.max_len);
    if (packing.width < 3 + numeric_count + 1) {
        throw ConfigError("packing: width " + std::to_string(packing.width) +
                          " too small for " + std::to_string(numeric_count) +
                          " numerics plus tokens");
    }

    Matrix out(d.size(), layout.total);
    for (std::size_t r = 0; r < d.size(); ++r) {
        double* row = out.row(r);
        const double* t = transformed.row(r);
        std::copy(t, t + transformed.cols(), row);  // numerics + hla code
        const auto mut = tokenize(d[r].peptide_mut, packing.max_len);
        const auto wt = tokenize(d[r].peptide_wt, packing.max_len);
        for (int i = 0; i < packing.max_len; ++i) {
            row[layout.mut_tokens + static_cast<std::size_t>(i)] =
                static_cast<double>(mut.tokens[static_cast<std::size_t>(i)]);
            row[layout.wt_tokens + static_cast<std::size_t>(i)] =
                static_cast<double>(wt.tokens[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

int combined_valid_len(std::span<const double> row, const CombinedLayout& layout) {
    const std::size_t max_len = layout.wt_tokens - layout.mut_tokens;
    int valid = 0;
    for (std::size_t t = 0; t < max_len; ++t) {
        const double m = row[layout.mut_tokens + t];
        const double w = row[layout.wt_tokens + t];
        if (std::min(m, w) < static_cast<double>(kPadCode) - 0.5) {
            valid = static_cast<int>(t) + 1;
        }
    }
    return std::max(valid, 1);
}

TimestepSequence pack_sequence(const FeaturePacking& packing, std::span<const double> row,
                               const CombinedLayout& layout) {
    if (row.size() != layout.total) {
        throw RuntimeError("packing: combined row width mismatch");
    }
    TimestepSequence seq;
    seq.valid_len = combined_valid_len(row, layout);
    seq.steps = Matrix(static_cast<std::size_t>(seq.valid_len), packing.width);
    for (int t = 0; t < seq.valid_len; ++t) {
        double* step = seq.steps.row(static_cast<std::size_t>(t));
        std::size_t col = 0;
        step[col++] = row[layout.mut_tokens + static_cast<std::size_t>(t)];
        step[col++] = row[layout.wt_tokens + static_cast<std::size_t>(t)];
        step[col++] = static_cast<double>(t) / static_cast<double>(packing.max_len);
        for (std::size_t k = 0; k < layout.numeric_count; ++k) {
            step[col++] = row[k];
        }
        step[col++] = row[layout.hla];
        // remaining columns stay zero
    }
    return seq;
}

}  // namespace neo
