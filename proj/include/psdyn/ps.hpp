#pragma once

#include <cstdint>
#include <memory>

#include "psdyn/scheme.hpp"
#include "psdyn/trajectory.hpp"

namespace psdyn {

/// Integrate under the switching rule: the step leaving node n uses the n-th
/// value of the scheme's periodic parameter sequence. A scheme whose values
/// are all equal reproduces the constant-p run bit-exactly (same float path).
Trajectory ps_integrate(const std::shared_ptr<const SystemDef>& system,
                        const SwitchingScheme& scheme, const StateVector& x0,
                        std::uint64_t steps);

/// Randomized variant: each switching period applies the same multiset of
/// values {p_i with multiplicity m_i} in a seeded random within-period order.
/// The permutation of period k is a pure function of (seed, k), so identical
/// seeds give bit-identical trajectories.
Trajectory ps_integrate_random(const std::shared_ptr<const SystemDef>& system,
                               const SwitchingScheme& scheme, const StateVector& x0,
                               std::uint64_t steps, std::uint64_t rng_seed);

} // namespace psdyn
