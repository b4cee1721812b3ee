#include "neo/synth.hpp"

#include <array>
#include <cstdio>

#include "json.hpp"
#include "neo/activations.hpp"
#include "neo/errors.hpp"
#include "neo/rng.hpp"

namespace neo {

namespace {

constexpr std::array<const char*, 8> kHlaPool = {
    "A*01:01", "A*02:01", "A*03:01", "B*07:02",
    "B*08:01", "B*44:02", "C*04:01", "C*07:01",
};

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    if (needle.empty() || needle.size() > haystack.size()) return 0;
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = haystack.find(needle, pos)) != std::string::npos; ++pos) {
        ++count;
    }
    return count;
}

std::string random_residues(std::size_t len, Rng& rng) {
    std::string s(len, 'A');
    for (auto& c : s) {
        c = kAlphabet[rng.below(kAlphabetSize)];
    }
    return s;
}

}  // namespace

void SynthConfig::validate() const {
    if (noise < 0.0) throw ConfigError("synth: noise must be >= 0");
    if (missing_rate < 0.0 || missing_rate > 1.0) {
        throw ConfigError("synth: missing_rate must be in [0,1]");
    }
    if (motif_rate < 0.0 || motif_rate > 1.0) {
        throw ConfigError("synth: motif_rate must be in [0,1]");
    }
    if (len_min < kMinPeptideLen || len_max > kMaxPeptideLen || len_min > len_max) {
        throw ConfigError("synth: peptide length range must lie within [8,25]");
    }
    if (hla_count < 1 || hla_count > kHlaPool.size()) {
        throw ConfigError("synth: hla_count must be in [1," + std::to_string(kHlaPool.size()) +
                          "]");
    }
    for (const char c : motif) {
        if (!is_canonical_residue(c)) {
            throw ConfigError(std::string("synth: motif contains non-canonical residue '") + c +
                              "'");
        }
    }
    if (!motif.empty() && motif.size() > len_min) {
        throw ConfigError("synth: motif longer than the shortest peptide");
    }
}

double planted_score(const std::vector<double>& weights, const FeatureRecord& rec,
                     const std::string& motif, double motif_weight) {
    double score = 0.0;
    for (std::size_t k = 0; k < kNumericFeatures && k < weights.size(); ++k) {
        score += weights[k] * rec.numeric[k].value_or(0.0);
    }
    if (!motif.empty()) {
        score += motif_weight *
                 static_cast<double>(count_occurrences(rec.peptide_mut.str(), motif));
    }
    return score;
}

Dataset synth_generate(const SynthConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);

    std::vector<double> weights(kNumericFeatures);
    for (auto& w : weights) {
        w = rng.normal();
    }

    const std::size_t want_total = cfg.n_neg + cfg.n_pos;
    std::vector<FeatureRecord> records;
    records.reserve(want_total);
    std::size_t have_neg = 0, have_pos = 0;
    std::size_t attempts = 0;
    const std::size_t max_attempts = 2000 * (want_total + 10);

    while (have_neg < cfg.n_neg || have_pos < cfg.n_pos) {
        if (++attempts > max_attempts) {
            throw RuntimeError("synth: generator could not reach the requested class counts (" +
                               std::to_string(have_neg) + "/" + std::to_string(cfg.n_neg) +
                               " neg, " + std::to_string(have_pos) + "/" +
                               std::to_string(cfg.n_pos) + " pos)");
        }

        const std::size_t len = cfg.len_min + rng.below(cfg.len_max - cfg.len_min + 1);
        std::string wt = random_residues(len, rng);
        std::string mut = wt;
        {
            // single point substitution, always to a different residue
            const std::size_t pos = rng.below(len);
            const int shift = 1 + static_cast<int>(rng.below(kAlphabetSize - 1));
            mut[pos] = kAlphabet[(static_cast<std::size_t>(residue_code(wt[pos])) + shift) %
                                 kAlphabetSize];
        }
        if (!cfg.motif.empty() && rng.uniform() < cfg.motif_rate) {
            const std::size_t start = rng.below(len - cfg.motif.size() + 1);
            mut.replace(start, cfg.motif.size(), cfg.motif);
        }

        FeatureRecord rec{
            .id = "",
            .peptide_mut = PeptideSequence(mut),
            .peptide_wt = PeptideSequence(std::move(wt)),
            .hla = kHlaPool[rng.below(cfg.hla_count)],
            .numeric = {},
            .label = 0,
        };
        for (std::size_t k = 0; k < kNumericFeatures; ++k) {
            rec.numeric[k] = rng.normal();
        }

        double decision = sigmoid(planted_score(weights, rec, cfg.motif, cfg.motif_weight));
        if (cfg.noise > 0.0) {
            decision += rng.normal(0.0, cfg.noise);
        }
        rec.label = decision > 0.5 ? 1 : 0;

        if (cfg.missing_rate > 0.0) {
            for (auto& cell : rec.numeric) {
                if (rng.uniform() < cfg.missing_rate) cell.reset();
            }
        }

        auto& have = rec.label == 1 ? have_pos : have_neg;
        const auto want = rec.label == 1 ? cfg.n_pos : cfg.n_neg;
        if (have >= want) continue;
        ++have;
        char id[16];
        std::snprintf(id, sizeof(id), "syn-%06zu", records.size() + 1);
        rec.id = id;
        records.push_back(std::move(rec));
    }

    nlohmann::json gen{
        {"motif", cfg.motif},
        {"motif_rate", cfg.motif_rate},
        {"motif_weight", cfg.motif_weight},
        {"noise", cfg.noise},
        {"weights", weights},
    };
    return Dataset(std::move(records), {{"generator", gen.dump()}});
}

}  // namespace neo
