#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neo/alphabet.hpp"

namespace neo {

inline constexpr std::size_t kNumericFeatures = 8;

// Validated peptide: canonical residues only, length within [8, 25].
class PeptideSequence {
public:
    explicit PeptideSequence(std::string letters);

    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    int code_at(std::size_t i) const;

    bool operator==(const PeptideSequence&) const = default;

private:
    std::string letters_;
};

struct TokenizedPeptide {
    std::vector<int> tokens;  // length max_len; kPadCode for i >= valid_len
    int valid_len = 0;

    bool operator==(const TokenizedPeptide&) const = default;
};

TokenizedPeptide tokenize(const PeptideSequence& p, int max_len = kMaxPeptideLen);
PeptideSequence detokenize(const TokenizedPeptide& t);

struct FeatureRecord {
    std::string id;
    PeptideSequence peptide_mut;
    PeptideSequence peptide_wt;
    std::string hla;
    std::array<std::optional<double>, kNumericFeatures> numeric;  // absent = missing
    int label = 0;

    bool operator==(const FeatureRecord&) const = default;
};

// Fixed column layout of the input CSV. Numeric columns may be marked
// dropped by the preprocess stage; the file itself always carries all of them.
struct Schema {
    static const std::vector<std::string>& column_names();      // all 13
    static const std::vector<std::string>& numeric_names();     // f1..f8
    static std::string header_line();
};

// Immutable after construction; safe to share across threads.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<FeatureRecord> records,
                     std::map<std::string, std::string> metadata = {});

    const std::vector<FeatureRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    const FeatureRecord& operator[](std::size_t i) const { return records_[i]; }

    // free-form provenance (e.g. the synthetic generator's planted rule)
    const std::map<std::string, std::string>& metadata() const { return metadata_; }

    std::size_t positive_count() const;

    bool operator==(const Dataset&) const = default;

private:
    std::vector<FeatureRecord> records_;
    std::map<std::string, std::string> metadata_;
};

Dataset parse_dataset(const std::string& path);
Dataset parse_dataset(std::istream& in, const std::string& source_name);

std::string to_csv(const Dataset& d);
void write_csv(const Dataset& d, const std::string& path);

struct SplitFractions {
    double train = 0.8;
    double val = 0.1;
    double test = 0.1;
};

struct SplitResult {
    Dataset train;
    Dataset val;
    Dataset test;
};

// Disjoint, exhaustive, seed-deterministic partition. With stratify on,
// each split receives the proportional (largest-remainder) share of
// positives, and at least one positive when the pool has >= 3.
SplitResult split(const Dataset& d, SplitFractions fractions, std::uint64_t seed,
                  bool stratify = true);

// Largest-remainder apportionment of n into parts proportional to fractions.
std::vector<std::size_t> proportional_counts(std::size_t n,
                                             const std::vector<double>& fractions);

}  // namespace neo
