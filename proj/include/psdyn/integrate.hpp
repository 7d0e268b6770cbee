#pragma once

#include <cstdint>
#include <memory>

#include "psdyn/trajectory.hpp"

namespace psdyn {

/// Scratch buffers for the four RK stages, reused across steps.
struct Rk4Workspace {
    StateVector k1, k2, k3, k4, tmp;
    explicit Rk4Workspace(int dim)
        : k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim) {}
};

/// One classical 4-stage Runge-Kutta step with p held constant across all
/// stages. Writes the advanced state into out; returns false if any stage or
/// the result has a non-finite component.
bool rk4_step(const SystemDef& system, double p, std::span<const double> x, double h,
              std::span<double> out, Rk4Workspace& ws);

/// Allocating convenience wrapper; throws DivergenceError on a non-finite stage.
StateVector rk4_step(const SystemDef& system, double p, const StateVector& x, double h);

class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::string msg, DivergenceInfo info)
        : std::runtime_error(std::move(msg)), info(std::move(info)) {}
    DivergenceInfo info;
};

/// Fixed-step integration at constant parameter p. The trajectory carries
/// every node up to and including the last finite one; if the run leaves the
/// divergence radius (or hits a non-finite value) the trajectory's
/// divergence() field reports the failing step and last finite state.
///
/// Preconditions (throw std::invalid_argument): steps >= 1, h > 0, finite x0
/// of matching dimension. A p outside the system's admissible range is legal
/// but prints a one-line warning per run.
Trajectory integrate(const std::shared_ptr<const SystemDef>& system, double p,
                     const StateVector& x0, double h, std::uint64_t steps);

} // namespace psdyn
