#pragma once

#include <array>
#include <functional>
#include <string>

#include "psdyn/types.hpp"

namespace psdyn {

/// A parameterized ODE system x' = g(x) + p*B*x with a constant coupling
/// matrix B. The nonlinear part g writes its value into a caller-provided
/// buffer so the integrator can run allocation-free.
struct SystemDef {
    std::string name;
    int dim = 0;
    std::function<void(std::span<const double>, std::span<double>)> g;
    std::vector<double> b_matrix; // dim*dim, row-major
    double default_p = 0.0;
    std::array<double, 2> admissible_p{0.0, 0.0}; // closed interval, advisory
    double divergence_radius = 1e6;
    StateVector default_x0;

    double b_at(int row, int col) const { return b_matrix[static_cast<std::size_t>(row) * dim + col]; }

    /// out = g(x) + p * B * x. Throws std::invalid_argument on dimension
    /// mismatch or non-finite input. The admissible-p check is advisory and
    /// handled by the integration drivers, not here.
    void rhs(double p, std::span<const double> x, std::span<double> out) const;

    /// Convenience allocating form.
    StateVector rhs(double p, const StateVector& x) const;

    bool p_admissible(double p) const { return p >= admissible_p[0] && p <= admissible_p[1]; }
};

} // namespace psdyn
