#pragma once

#include <cstdint>
#include <vector>

namespace psdyn {

/// One scheme entry: apply value p for m consecutive integration steps.
struct SchemeEntry {
    std::int64_t m = 0;
    double p = 0.0;
    friend bool operator==(const SchemeEntry&, const SchemeEntry&) = default;
};

/// A periodic switching rule: p1 for m1 steps, p2 for m2 steps, ..., then
/// repeat. Entry order is preserved as authored; the period is sum(m_i) steps,
/// sum(m_i)*h time units.
struct SwitchingScheme {
    std::vector<SchemeEntry> entries;
    double h = 0.0;

    std::int64_t total_weight() const {
        std::int64_t s = 0;
        for (const auto& e : entries) s += e.m;
        return s;
    }
    friend bool operator==(const SwitchingScheme&, const SwitchingScheme&) = default;
};

/// Convex coefficients alpha_j = m_j / sum(m_i); they sum to 1 and dot with
/// the scheme's values to the averaged parameter.
struct DecompositionWeights {
    std::vector<double> alphas;
};

/// Throws std::invalid_argument unless all weights are >= 1, there are at
/// least two entries, and h > 0.
void validate_scheme(const SwitchingScheme& scheme);

/// p0 = sum(m_i * p_i) / sum(m_i). Weights stay in exact integer arithmetic;
/// the division happens once, at the end.
double averaged_parameter(const SwitchingScheme& scheme);

DecompositionWeights convex_weights(const SwitchingScheme& scheme);

/// Strict bracket check min(p_i) < p0 < max(p_i).
bool framing_check(const SwitchingScheme& scheme, double p0);

/// The periodic per-step parameter values, truncated to `steps`.
std::vector<double> parameter_sequence(const SwitchingScheme& scheme, std::uint64_t steps);

} // namespace psdyn
