#include "neo/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "neo/errors.hpp"
#include "neo/rng.hpp"

namespace neo {

namespace {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& cell, std::size_t line_no, const std::string& column) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw DataError("line " + std::to_string(line_no) + ": malformed numeric '" + cell +
                        "' in column " + column);
    }
    return v;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (const char c : line) {
        if (c == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    cells.push_back(std::move(cur));
    return cells;
}

PeptideSequence parse_peptide(const std::string& cell, std::size_t line_no,
                              const std::string& column) {
    try {
        return PeptideSequence(cell);
    } catch (const DataError& e) {
        throw DataError("line " + std::to_string(line_no) + ": " + e.what() + " in column " +
                        column);
    }
}

}  // namespace

PeptideSequence::PeptideSequence(std::string letters) : letters_(std::move(letters)) {
    if (letters_.size() < kMinPeptideLen || letters_.size() > kMaxPeptideLen) {
        throw DataError("peptide length " + std::to_string(letters_.size()) +
                        " out of range [" + std::to_string(kMinPeptideLen) + "," +
                        std::to_string(kMaxPeptideLen) + "]");
    }
    for (const char c : letters_) {
        if (!is_canonical_residue(c)) {
            throw DataError(std::string("invalid residue '") + c + "'");
        }
    }
}

int PeptideSequence::code_at(std::size_t i) const {
    return residue_code(letters_[i]);
}

TokenizedPeptide tokenize(const PeptideSequence& p, int max_len) {
    if (p.size() > static_cast<std::size_t>(max_len)) {
        throw DataError("sequence length " + std::to_string(p.size()) +
                        " exceeds max_len " + std::to_string(max_len));
    }
    TokenizedPeptide t;
    t.valid_len = static_cast<int>(p.size());
    t.tokens.assign(static_cast<std::size_t>(max_len), kPadCode);
    for (std::size_t i = 0; i < p.size(); ++i) {
        t.tokens[i] = p.code_at(i);
    }
    return t;
}

PeptideSequence detokenize(const TokenizedPeptide& t) {
    std::string letters;
    letters.reserve(static_cast<std::size_t>(t.valid_len));
    for (int i = 0; i < t.valid_len; ++i) {
        letters.push_back(residue_letter(t.tokens[static_cast<std::size_t>(i)]));
    }
    return PeptideSequence(std::move(letters));
}

const std::vector<std::string>& Schema::column_names() {
    static const std::vector<std::string> names = {
        "id", "peptide_mut", "peptide_wt", "hla", "f1", "f2", "f3",
        "f4", "f5", "f6", "f7", "f8", "label"};
    return names;
}

const std::vector<std::string>& Schema::numeric_names() {
    static const std::vector<std::string> names = {"f1", "f2", "f3", "f4",
                                                   "f5", "f6", "f7", "f8"};
    return names;
}

std::string Schema::header_line() {
    std::string h;
    for (const auto& name : column_names()) {
        if (!h.empty()) h.push_back(',');
        h += name;
    }
    return h;
}

Dataset::Dataset(std::vector<FeatureRecord> records, std::map<std::string, std::string> metadata)
    : records_(std::move(records)), metadata_(std::move(metadata)) {}

std::size_t Dataset::positive_count() const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(),
                      [](const FeatureRecord& r) { return r.label == 1; }));
}

Dataset parse_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open dataset file: " + path);
    }
    return parse_dataset(in, path);
}

Dataset parse_dataset(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(source_name + ": empty file");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != Schema::header_line()) {
        throw DataError(source_name + ": header mismatch, expected '" + Schema::header_line() +
                        "'");
    }

    const std::size_t expected_cols = Schema::column_names().size();
    std::vector<FeatureRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto cells = split_line(line);
        if (cells.size() != expected_cols) {
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(expected_cols) + " columns, got " +
                            std::to_string(cells.size()));
        }

        FeatureRecord rec{
            .id = cells[0],
            .peptide_mut = parse_peptide(cells[1], line_no, "peptide_mut"),
            .peptide_wt = parse_peptide(cells[2], line_no, "peptide_wt"),
            .hla = cells[3],
            .numeric = {},
            .label = 0,
        };
        for (std::size_t f = 0; f < kNumericFeatures; ++f) {
            const std::string& cell = cells[4 + f];
            if (cell.empty()) continue;  // missing stays missing
            rec.numeric[f] = parse_double(cell, line_no, Schema::numeric_names()[f]);
        }
        const double label = parse_double(cells[12], line_no, "label");
        if (label != 0.0 && label != 1.0) {
            throw DataError("line " + std::to_string(line_no) + ": label must be 0.0 or 1.0, got '" +
                            cells[12] + "'");
        }
        rec.label = label == 1.0 ? 1 : 0;
        records.push_back(std::move(rec));
    }
    if (records.empty()) {
        throw DataError(source_name + ": no data rows");
    }
    return Dataset(std::move(records));
}

std::string to_csv(const Dataset& d) {
    std::string out = Schema::header_line();
    out.push_back('\n');
    for (const auto& rec : d.records()) {
        out += rec.id;
        out.push_back(',');
        out += rec.peptide_mut.str();
        out.push_back(',');
        out += rec.peptide_wt.str();
        out.push_back(',');
        out += rec.hla;
        for (const auto& cell : rec.numeric) {
            out.push_back(',');
            if (cell.has_value()) out += format_double(*cell);
        }
        out.push_back(',');
        out += rec.label == 1 ? "1.0" : "0.0";
        out.push_back('\n');
    }
    return out;
}

void write_csv(const Dataset& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write dataset file: " + path);
    }
    out << to_csv(d);
}

std::vector<std::size_t> proportional_counts(std::size_t n,
                                             const std::vector<double>& fractions) {
    std::vector<std::size_t> counts(fractions.size(), 0);
    std::vector<double> remainders(fractions.size(), 0.0);
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        const double share = static_cast<double>(n) * fractions[i];
        counts[i] = static_cast<std::size_t>(share);
        remainders[i] = share - static_cast<double>(counts[i]);
        assigned += counts[i];
    }
    // hand out the remainder by largest fractional part, ties to lower index
    std::vector<std::size_t> order(fractions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return remainders[a] > remainders[b];
    });
    for (std::size_t i = 0; assigned < n; ++i) {
        ++counts[order[i % order.size()]];
        ++assigned;
    }
    return counts;
}

namespace {

// Slice shuffled indices into three groups, preserving source order inside each.
std::array<std::vector<std::size_t>, 3> allocate(std::vector<std::size_t> indices,
                                                 const std::vector<std::size_t>& counts,
                                                 Rng& rng) {
    rng.shuffle(indices);
    std::array<std::vector<std::size_t>, 3> groups;
    std::size_t offset = 0;
    for (std::size_t g = 0; g < 3; ++g) {
        groups[g].assign(indices.begin() + static_cast<std::ptrdiff_t>(offset),
                         indices.begin() + static_cast<std::ptrdiff_t>(offset + counts[g]));
        std::sort(groups[g].begin(), groups[g].end());
        offset += counts[g];
    }
    return groups;
}

}  // namespace

SplitResult split(const Dataset& d, SplitFractions fractions, std::uint64_t seed, bool stratify) {
    if (d.size() == 0) {
        throw DataError("cannot split an empty dataset");
    }
    const std::vector<double> fracs = {fractions.train, fractions.val, fractions.test};
    for (const double f : fracs) {
        if (f <= 0.0) {
            throw ConfigError("split fractions must be positive");
        }
    }
    const double sum = fracs[0] + fracs[1] + fracs[2];
    if (std::abs(sum - 1.0) > 1e-9) {
        throw ConfigError("split fractions must sum to 1");
    }

    Rng rng(seed);
    std::array<std::vector<std::size_t>, 3> groups;

    if (stratify) {
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < d.size(); ++i) {
            (d[i].label == 1 ? pos : neg).push_back(i);
        }
        if (pos.empty()) {
            throw DataError("stratified split requested but the dataset has no positives");
        }
        auto pos_counts = proportional_counts(pos.size(), fracs);
        if (pos.size() >= 3) {
            // every split keeps at least one positive
            for (std::size_t g = 0; g < 3; ++g) {
                while (pos_counts[g] == 0) {
                    const std::size_t donor = static_cast<std::size_t>(
                        std::max_element(pos_counts.begin(), pos_counts.end()) -
                        pos_counts.begin());
                    --pos_counts[donor];
                    ++pos_counts[g];
                }
            }
        }
        const auto neg_counts = proportional_counts(neg.size(), fracs);
        const auto pos_groups = allocate(std::move(pos), pos_counts, rng);
        const auto neg_groups = allocate(std::move(neg), neg_counts, rng);
        for (std::size_t g = 0; g < 3; ++g) {
            groups[g].reserve(pos_groups[g].size() + neg_groups[g].size());
            std::merge(pos_groups[g].begin(), pos_groups[g].end(), neg_groups[g].begin(),
                       neg_groups[g].end(), std::back_inserter(groups[g]));
        }
    } else {
        std::vector<std::size_t> indices(d.size());
        for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
        groups = allocate(std::move(indices), proportional_counts(d.size(), fracs), rng);
    }

    SplitResult result;
    Dataset* outputs[3] = {&result.train, &result.val, &result.test};
    for (std::size_t g = 0; g < 3; ++g) {
        std::vector<FeatureRecord> recs;
        recs.reserve(groups[g].size());
        for (const std::size_t i : groups[g]) {
            recs.push_back(d[i]);
        }
        *outputs[g] = Dataset(std::move(recs), d.metadata());
    }
    return result;
}

}  // namespace neo
