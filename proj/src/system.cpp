#include "psdyn/system.hpp"

#include <stdexcept>

namespace psdyn {

void SystemDef::rhs(double p, std::span<const double> x, std::span<double> out) const {
    if (x.size() != static_cast<std::size_t>(dim) || out.size() != static_cast<std::size_t>(dim)) {
        throw std::invalid_argument("rhs: state dimension mismatch for system '" + name + "'");
    }
    if (!all_finite(x)) {
        throw std::invalid_argument("rhs: non-finite input component for system '" + name + "'");
    }
    g(x, out);
    // out += p * B * x
    const double* brow = b_matrix.data();
    for (int i = 0; i < dim; ++i, brow += dim) {
        double acc = 0.0;
        for (int j = 0; j < dim; ++j) acc += brow[j] * x[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] += p * acc;
    }
}

StateVector SystemDef::rhs(double p, const StateVector& x) const {
    StateVector out(static_cast<std::size_t>(dim));
    rhs(p, x, out);
    return out;
}

} // namespace psdyn
