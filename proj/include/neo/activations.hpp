#pragma once

#include <algorithm>
#include <cmath>

namespace neo {

// Numerically stable logistic; never overflows for large |x|.
inline double sigmoid(double x) {
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

inline double relu(double x) { return x > 0.0 ? x : 0.0; }

inline constexpr double kBceClip = 1e-12;

// Binary cross entropy of one prediction; clipping absorbs saturated inputs.
inline double bce_loss(double p, int y) {
    p = std::clamp(p, kBceClip, 1.0 - kBceClip);
    return y == 1 ? -std::log(p) : -std::log(1.0 - p);
}

// Inclusive upper interval: probabilities at the threshold classify positive.
inline int classify(double p, double threshold = 0.5) {
    return p >= threshold ? 1 : 0;
}

}  // namespace neo
