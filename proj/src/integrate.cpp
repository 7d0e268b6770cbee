#include "psdyn/integrate.hpp"

#include <iostream>

#include "psdyn/detail/fixed_step.hpp"

namespace psdyn {

bool rk4_step(const SystemDef& system, double p, std::span<const double> x, double h,
              std::span<double> out, Rk4Workspace& ws) {
    const auto dim = static_cast<std::size_t>(system.dim);
    system.rhs(p, x, ws.k1);
    for (std::size_t i = 0; i < dim; ++i) ws.tmp[i] = x[i] + 0.5 * h * ws.k1[i];
    system.rhs(p, ws.tmp, ws.k2);
    for (std::size_t i = 0; i < dim; ++i) ws.tmp[i] = x[i] + 0.5 * h * ws.k2[i];
    system.rhs(p, ws.tmp, ws.k3);
    for (std::size_t i = 0; i < dim; ++i) ws.tmp[i] = x[i] + h * ws.k3[i];
    system.rhs(p, ws.tmp, ws.k4);
    for (std::size_t i = 0; i < dim; ++i) {
        out[i] = x[i] + (h / 6.0) * (ws.k1[i] + 2.0 * ws.k2[i] + 2.0 * ws.k3[i] + ws.k4[i]);
    }
    return all_finite(ws.k1) && all_finite(ws.k2) && all_finite(ws.k3) && all_finite(ws.k4) &&
           all_finite(out);
}

StateVector rk4_step(const SystemDef& system, double p, const StateVector& x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("rk4_step: step size h must be positive");
    if (!all_finite(x)) throw std::invalid_argument("rk4_step: non-finite component in x");
    Rk4Workspace ws(system.dim);
    StateVector out(static_cast<std::size_t>(system.dim));
    if (!rk4_step(system, p, x, h, out, ws)) {
        throw DivergenceError("rk4_step: non-finite intermediate stage", {1, x, 0.0});
    }
    return out;
}

void warn_inadmissible_p(const SystemDef& system, double p) {
    if (!system.p_admissible(p)) {
        std::cerr << "psdyn: warning: p=" << p << " outside admissible range ["
                  << system.admissible_p[0] << ", " << system.admissible_p[1] << "] for system '"
                  << system.name << "'\n";
    }
}

Trajectory integrate(const std::shared_ptr<const SystemDef>& system, double p,
                     const StateVector& x0, double h, std::uint64_t steps) {
    detail::check_run_inputs(system, x0, h, steps);
    warn_inadmissible_p(*system, p);
    return detail::run_fixed_step(system, x0, h, steps, [p](std::uint64_t) { return p; });
}

} // namespace psdyn
