#pragma once

#include "psdyn/scheme.hpp"

namespace psdyn {

/// Exhaustively enumerate weight vectors (m_1..m_N), all m_i >= 1 and
/// sum(m_i) <= max_total_weight, whose averaged parameter hits target_p0
/// within 1e-12 * max|p_i|. Results are sorted by total weight, then
/// lexicographically; the list is empty when no combination exists within the
/// budget. The given h is attached to every returned scheme.
///
/// Throws std::invalid_argument unless min(values) < target_p0 < max(values)
/// and max_total_weight >= 2.
std::vector<SwitchingScheme> decompose(double target_p0, const std::vector<double>& values,
                                       std::int64_t max_total_weight, double h = 0.005);

} // namespace psdyn
