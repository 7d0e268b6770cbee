#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>

#include "psdyn/integrate.hpp"

namespace psdyn::detail {

inline void check_run_inputs(const std::shared_ptr<const SystemDef>& system,
                             const StateVector& x0, double h, std::uint64_t steps) {
    if (!system) throw std::invalid_argument("integrate: null system");
    if (steps < 1) throw std::invalid_argument("integrate: steps must be >= 1");
    if (!(h > 0.0)) throw std::invalid_argument("integrate: step size h must be positive");
    if (x0.size() != static_cast<std::size_t>(system->dim)) {
        throw std::invalid_argument("integrate: x0 dimension mismatch for system '" + system->name + "'");
    }
    if (!all_finite(x0)) throw std::invalid_argument("integrate: non-finite component in x0");
}

/// Shared fixed-step driver. ParamFn maps a 0-based step index to the
/// parameter value applied on that step; constant-p and switched runs use the
/// exact same float path, which is what makes the degenerate-scheme collapse
/// bit-exact.
template <typename ParamFn>
Trajectory run_fixed_step(const std::shared_ptr<const SystemDef>& system, const StateVector& x0,
                          double h, std::uint64_t steps, ParamFn&& p_of_step) {
    check_run_inputs(system, x0, h, steps);

    Trajectory traj(system, h, x0, steps);
    Rk4Workspace ws(system->dim);
    StateVector x = x0;
    StateVector next(static_cast<std::size_t>(system->dim));
    const double radius = system->divergence_radius;

    traj.push_node(x, p_of_step(std::uint64_t{0}));
    for (std::uint64_t n = 0; n < steps; ++n) {
        const double p = p_of_step(n);
        if (!rk4_step(*system, p, x, h, next, ws)) {
            traj.set_divergence({n + 1, x, 0.0});
            return traj;
        }
        const double norm = euclidean_norm(next);
        if (norm > radius) {
            traj.set_divergence({n + 1, next, norm});
            return traj;
        }
        x.swap(next);
        const double p_label = (n + 1 < steps) ? p_of_step(n + 1) : p;
        traj.push_node(x, p_label);
    }
    return traj;
}

} // namespace psdyn::detail
