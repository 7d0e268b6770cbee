#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace psdyn {

/// A point in R^n. Dimension is fixed per system and must stay consistent
/// across a run.
using StateVector = std::vector<double>;

inline bool all_finite(std::span<const double> x) {
    for (double v : x) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

inline double euclidean_norm(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace psdyn
