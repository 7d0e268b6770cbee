#include "psdyn/ps.hpp"

#include <random>

#include "psdyn/detail/fixed_step.hpp"

namespace psdyn {

void warn_inadmissible_p(const SystemDef& system, double p); // integrate.cpp

namespace {

std::vector<double> expand_period(const SwitchingScheme& scheme) {
    std::vector<double> period;
    period.reserve(static_cast<std::size_t>(scheme.total_weight()));
    for (const auto& e : scheme.entries) {
        for (std::int64_t i = 0; i < e.m; ++i) period.push_back(e.p);
    }
    return period;
}

void warn_scheme_values(const SystemDef& system, const SwitchingScheme& scheme) {
    for (const auto& e : scheme.entries) warn_inadmissible_p(system, e.p);
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Bounded draw via multiply-shift; deterministic across platforms.
std::uint64_t bounded(std::uint64_t r, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * n) >> 64);
}

// Within-period order for period k, derived purely from (seed, k) so lookups
// may arrive in any order.
std::vector<double> permuted_period(const std::vector<double>& base, std::uint64_t seed,
                                    std::uint64_t k) {
    std::vector<double> out = base;
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(k)));
    for (std::size_t i = out.size() - 1; i > 0; --i) {
        const auto j = bounded(rng(), i + 1);
        std::swap(out[i], out[j]);
    }
    return out;
}

} // namespace

Trajectory ps_integrate(const std::shared_ptr<const SystemDef>& system,
                        const SwitchingScheme& scheme, const StateVector& x0,
                        std::uint64_t steps) {
    validate_scheme(scheme);
    warn_scheme_values(*system, scheme);
    const auto period = expand_period(scheme);
    const auto len = period.size();
    return detail::run_fixed_step(system, x0, scheme.h, steps,
                                  [&period, len](std::uint64_t n) { return period[n % len]; });
}

Trajectory ps_integrate_random(const std::shared_ptr<const SystemDef>& system,
                               const SwitchingScheme& scheme, const StateVector& x0,
                               std::uint64_t steps, std::uint64_t rng_seed) {
    validate_scheme(scheme);
    warn_scheme_values(*system, scheme);
    const auto base = expand_period(scheme);
    const auto len = base.size();

    struct Cache {
        std::uint64_t k = ~0ull;
        std::vector<double> period;
    };
    Cache cache;
    auto p_of_step = [&](std::uint64_t n) {
        const std::uint64_t k = n / len;
        if (k != cache.k) {
            cache.period = permuted_period(base, rng_seed, k);
            cache.k = k;
        }
        return cache.period[n % len];
    };
    return detail::run_fixed_step(system, x0, scheme.h, steps, p_of_step);
}

} // namespace psdyn
