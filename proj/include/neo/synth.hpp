#pragma once

#include <cstdint>
#include <string>

#include "neo/dataset.hpp"

namespace neo {

// Planted-signal generator standing in for the private clinical data.
// A record's label is decided by a known linear rule over its own numeric
// features plus an optional sequence motif bonus, so downstream behavior
// stays verifiable: the rule (weights, motif, noise) is recorded in the
// dataset metadata under the "generator" key.
struct SynthConfig {
    std::size_t n_neg = 0;
    std::size_t n_pos = 0;
    std::string motif;           // empty = numeric signal only
    double motif_weight = 1.0;   // score bonus per motif occurrence in the mutant
    double motif_rate = 0.5;     // fraction of candidates that get the motif planted
    double noise = 0.0;          // sd of the gaussian perturbation on the sigmoid score
    double missing_rate = 0.0;   // chance each numeric cell is blanked after labeling
    std::size_t len_min = kMinPeptideLen;
    std::size_t len_max = kMaxPeptideLen;
    std::size_t hla_count = 4;   // categories drawn from a fixed allele pool
    std::uint64_t seed = 0;

    void validate() const;       // ConfigError on violations
};

Dataset synth_generate(const SynthConfig& cfg);

// Score of the planted rule for one record (the oracle side of the generator).
double planted_score(const std::vector<double>& weights, const FeatureRecord& rec,
                     const std::string& motif, double motif_weight);

}  // namespace neo
