#include "psdyn/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psdyn {

std::vector<SwitchingScheme> decompose(double target_p0, const std::vector<double>& values,
                                       std::int64_t max_total_weight, double h) {
    if (values.size() < 2) {
        throw std::invalid_argument("decompose: need at least two values");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (!(*lo < target_p0 && target_p0 < *hi)) {
        throw std::invalid_argument(
            "decompose: values must frame the target (p_1 < p0 < p_N required)");
    }
    if (max_total_weight < 2) {
        throw std::invalid_argument("decompose: max_total_weight must be >= 2");
    }

    double max_abs = 0.0;
    for (double p : values) max_abs = std::max(max_abs, std::abs(p));
    const double tol = 1e-12 * max_abs;

    const auto n = values.size();
    std::vector<std::int64_t> weights(n, 1);
    std::vector<SwitchingScheme> out;

    // depth-first over weight vectors with remaining-budget pruning
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t used, double num) -> void {
        if (idx == n) {
            const double avg = num / static_cast<double>(used);
            if (std::abs(avg - target_p0) <= tol) {
                SwitchingScheme s;
                s.h = h;
                for (std::size_t i = 0; i < n; ++i) s.entries.push_back({weights[i], values[i]});
                out.push_back(std::move(s));
            }
            return;
        }
        const auto remaining_min = static_cast<std::int64_t>(n - idx - 1); // one per later slot
        for (std::int64_t m = 1; used + m + remaining_min <= max_total_weight; ++m) {
            weights[idx] = m;
            self(self, idx + 1, used + m, num + static_cast<double>(m) * values[idx]);
        }
    };
    rec(rec, 0, 0, 0.0);

    std::stable_sort(out.begin(), out.end(), [](const SwitchingScheme& a, const SwitchingScheme& b) {
        const auto ta = a.total_weight(), tb = b.total_weight();
        if (ta != tb) return ta < tb;
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            if (a.entries[i].m != b.entries[i].m) return a.entries[i].m < b.entries[i].m;
        }
        return false;
    });
    return out;
}

} // namespace psdyn
