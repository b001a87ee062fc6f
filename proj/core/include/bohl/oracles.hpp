#pragma once

// Brute-force ground truth for tests and verification reports. Nothing in
// the lattice or continuum pipelines calls into this header.

#include <span>
#include <vector>

#include "bohl/continuum.hpp"
#include "bohl/lattice.hpp"

namespace bohl::oracles {

/// The finite matrix of -Δ + V with Dirichlet padding: diagonal 2 + V_n,
/// off-diagonals -1.
struct TridiagonalSystem {
    LatticeWindow window;
    std::vector<double> diagonal;
    double off_diagonal = -1.0;
};

[[nodiscard]] TridiagonalSystem make_tridiagonal(const LatticePotential& v);

/// Full inverse by LU (Thomas) elimination, one column at a time. Throws
/// singular_system naming the index of a near-zero pivot.
[[nodiscard]] GreenMatrix green_by_inversion(const LatticePotential& v);

/// (-Δ + V) f on interior indices, NaN at the edges.
[[nodiscard]] ComplexSequence apply_operator(const LatticePotential& v, const ComplexSequence& f);

/// max over interior n of |u_{n+1} + u_{n-1} - (2+V_n) u_n| / max(1, |u_n|).
[[nodiscard]] double recurrence_residual(const LatticePotential& v, const LatticeSolution& u);

/// (f_{k+1} - 2 f_k + f_{k-1}) / h^2 on interior nodes; NaN at both ends.
[[nodiscard]] std::vector<double> fd_second_derivative(std::span<const double> f, const Grid& grid);
[[nodiscard]] std::vector<cplx> fd_second_derivative(std::span<const cplx> f, const Grid& grid);

/// Composite trapezoid rule for samples on a uniform grid.
[[nodiscard]] cplx trapezoid(std::span<const cplx> f, double h);

} // namespace bohl::oracles
