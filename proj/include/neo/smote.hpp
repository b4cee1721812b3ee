#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "neo/matrix.hpp"

namespace neo {

struct SmoteConfig {
    int k = 5;                  // neighbors considered per minority sample
    double target_ratio = 1.0;  // minority:majority after oversampling
    std::uint64_t seed = 0;

    void validate() const;
};

// For each minority row, the k nearest other minority rows by Euclidean
// distance; ties broken by lower row index; k clamped to rows-1.
std::vector<std::vector<std::size_t>> minority_neighbors(const Matrix& x_min, int k);

// Point on the segment [s, n] at parameter u.
std::vector<double> synthesize(std::span<const double> s, std::span<const double> n, double u);

struct SmoteResult {
    Matrix x;            // originals first (bit-identical), synthetic rows after
    std::vector<int> y;
    std::size_t synthetic_count = 0;
    int minority_label = 0;
};

SmoteResult oversample(const Matrix& x, const std::vector<int>& y, const SmoteConfig& cfg);

}  // namespace neo
