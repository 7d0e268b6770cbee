#include "psdyn/scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace psdyn {

void validate_scheme(const SwitchingScheme& scheme) {
    if (scheme.entries.size() < 2) {
        throw std::invalid_argument("scheme: needs more than one parameter value (N > 1)");
    }
    for (const auto& e : scheme.entries) {
        if (e.m < 1) throw std::invalid_argument("scheme: weights must be positive integers");
    }
    if (!(scheme.h > 0.0)) throw std::invalid_argument("scheme: step size h must be positive");
}

double averaged_parameter(const SwitchingScheme& scheme) {
    validate_scheme(scheme);
    double num = 0.0;
    std::int64_t den = 0;
    for (const auto& e : scheme.entries) {
        num += static_cast<double>(e.m) * e.p;
        den += e.m;
    }
    return num / static_cast<double>(den);
}

DecompositionWeights convex_weights(const SwitchingScheme& scheme) {
    validate_scheme(scheme);
    const auto total = static_cast<double>(scheme.total_weight());
    DecompositionWeights w;
    w.alphas.reserve(scheme.entries.size());
    for (const auto& e : scheme.entries) w.alphas.push_back(static_cast<double>(e.m) / total);
    return w;
}

bool framing_check(const SwitchingScheme& scheme, double p0) {
    if (scheme.entries.empty()) return false;
    auto [lo, hi] = std::minmax_element(scheme.entries.begin(), scheme.entries.end(),
                                        [](const SchemeEntry& a, const SchemeEntry& b) { return a.p < b.p; });
    return lo->p < p0 && p0 < hi->p;
}

std::vector<double> parameter_sequence(const SwitchingScheme& scheme, std::uint64_t steps) {
    validate_scheme(scheme);
    if (steps < 1) throw std::invalid_argument("parameter_sequence: steps must be >= 1");
    std::vector<double> seq;
    seq.reserve(steps);
    while (seq.size() < steps) {
        for (const auto& e : scheme.entries) {
            for (std::int64_t i = 0; i < e.m && seq.size() < steps; ++i) seq.push_back(e.p);
        }
    }
    return seq;
}

} // namespace psdyn
