#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "psdyn/system.hpp"
#include "psdyn/types.hpp"

namespace psdyn {

/// Reported when a run leaves the system's divergence radius or produces a
/// non-finite component. The trajectory keeps every node computed before the
/// offending step.
struct DivergenceInfo {
    std::uint64_t step = 0;    // index of the step that failed (1-based node index it would have produced)
    StateVector last_state;    // last finite state, at node step-1
    double norm = 0.0;         // norm that tripped the radius check, 0 if non-finite
};

/// Sequence of states at the nodes n*h, n = 0,1,2,... together with the
/// parameter value applied on the step leaving each node. The final node
/// repeats the last applied value (it has no outgoing step).
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(std::shared_ptr<const SystemDef> system, double h, StateVector x0,
               std::uint64_t expected_steps)
        : system_(std::move(system)), h_(h), x0_(std::move(x0)) {
        const auto dim = static_cast<std::size_t>(system_->dim);
        states_.reserve((expected_steps + 1) * dim);
        params_.reserve(expected_steps + 1);
    }

    const SystemDef& system() const { return *system_; }
    std::shared_ptr<const SystemDef> system_ptr() const { return system_; }
    double h() const { return h_; }
    const StateVector& x0() const { return x0_; }

    std::size_t size() const { return params_.size(); } // node count
    int dim() const { return system_ ? system_->dim : 0; }

    std::span<const double> state(std::size_t n) const {
        const auto d = static_cast<std::size_t>(dim());
        return {states_.data() + n * d, d};
    }
    double param(std::size_t n) const { return params_[n]; }
    double time(std::size_t n) const { return static_cast<double>(n) * h_; }

    void push_node(std::span<const double> x, double p) {
        states_.insert(states_.end(), x.begin(), x.end());
        params_.push_back(p);
    }

    bool ok() const { return !divergence_.has_value(); }
    const std::optional<DivergenceInfo>& divergence() const { return divergence_; }
    void set_divergence(DivergenceInfo d) { divergence_ = std::move(d); }

    /// Flat state buffer, node-major; used by the analysis layer.
    std::span<const double> raw_states() const { return states_; }
    std::span<const double> raw_params() const { return params_; }

private:
    std::shared_ptr<const SystemDef> system_;
    double h_ = 0.0;
    StateVector x0_;
    std::vector<double> states_;
    std::vector<double> params_;
    std::optional<DivergenceInfo> divergence_;
};

} // namespace psdyn
