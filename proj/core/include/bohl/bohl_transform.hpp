#pragma once

// The diagonal function Z = (u1 u2)^{1/2} of a Wronskian-normalized basis,
// the basis phi^± = Z exp(±∫ 1/(2Z^2)) it generates, and the Green function
// Z(x)Z(y) exp(-∫_{min}^{max} 1/(2Z^2)).

#include <vector>

#include "bohl/continuum.hpp"

namespace bohl {

struct DiagonalFunction {
    Grid grid;
    std::vector<cplx> z;         // square root with continuously unwrapped phase
    std::vector<cplx> dz;        // Z' from the carried derivatives of the basis
    std::vector<cplx> z2;        // u1 u2
    std::vector<cplx> integral;  // trapezoid ∫_a^{x_k} 1/(2 Z^2)

    /// Linear interpolation of Z and of the running integral at x.
    [[nodiscard]] cplx z_at(double x) const;
    [[nodiscard]] cplx integral_at(double x) const;
};

/// Z from a pair with W[u1, u2] = 1 (checked to w_tol). The phase starts at
/// the principal root at x = a and each later node takes the root closest
/// to its predecessor.
[[nodiscard]] DiagonalFunction diagonal_function(const GridSolution& u1, const GridSolution& u2,
                                                 double w_tol = 1e-6);

/// max-norm over interior nodes of J[Z] = -Z'' + V Z - 1/(4 Z^3), with Z''
/// from the centered second difference.
[[nodiscard]] double diagonal_equation_residual(const DiagonalFunction& z,
                                                const ContinuumPotential& v);

struct BohlBasisContinuum {
    double anchor;
    GridSolution plus;
    GridSolution minus;
    cplx wronskian;          // W[phi^-, phi^+], 1 by construction
    double residual_plus;    // sle_residual of each member
    double residual_minus;
};

/// phi^± = Z exp(±∫_{x0}^{x} 1/(2Z^2)). Refuses a Z whose diagonal-equation
/// residual exceeds max_diagonal_residual.
[[nodiscard]] BohlBasisContinuum bohl_basis(const DiagonalFunction& z, const ContinuumPotential& v,
                                            double x0, double max_diagonal_residual = 1e-4);

/// Z(x) Z(y) exp(-∫_{min(x,y)}^{max(x,y)} 1/(2Z^2)).
[[nodiscard]] cplx green_function(const DiagonalFunction& z, double x, double y);

/// Jump of ∂_x G(x, y) across x = y from one-sided differences of width h
/// (the grid step). Equals -1 up to O(h) for a genuine Green function.
[[nodiscard]] cplx green_derivative_jump(const DiagonalFunction& z, double y);

struct NonvanishingCombination {
    GridSolution u;        // u1 + i beta u2
    double beta;
    double x0;             // grid node actually used
    cplx alpha;            // u'(x0)/u(x0)
    double wronskian_im_re;  // W[Im u, Re u] over the grid
    double identity_value;   // -Im(alpha) |u(x0)|^2
    double min_modulus;      // min over grid of |u|
};

/// u = u1 + i beta u2 for real independent u1, u2, with beta = |u1(x0)/u2(x0)|
/// so Re u and Im u have equal size at x0. x0 snaps to the nearest node.
[[nodiscard]] NonvanishingCombination nonvanishing_combination(const GridSolution& u1,
                                                               const GridSolution& u2, double x0);

enum class AlphaBranch { disconjugate, oscillatory };

struct SpecialAlpha {
    cplx alpha;
    int k;  // arg(alpha) = k pi/4
    AlphaBranch branch;
};

/// alpha with W[u, alpha^2 conj(u)] = 1, so that Z = alpha |u|.
[[nodiscard]] SpecialAlpha special_alpha(const GridSolution& u);

/// For a real basis: if u1 u2 > 0 on the grid, alpha = W[u1,u2]^{-1/2} > 0 so
/// that Z = alpha sqrt(u1 u2) (the disconjugate branch, arg alpha = 0).
/// Otherwise falls back to the nonvanishing combination at the grid
/// midpoint and special_alpha of it.
[[nodiscard]] SpecialAlpha special_alpha(const GridSolution& u1, const GridSolution& u2);

struct SpecialDiagonal {
    SpecialAlpha alpha;
    DiagonalFunction z;
};

/// Z = alpha |u| realized as the diagonal function of (u, alpha^2 conj u).
[[nodiscard]] SpecialDiagonal special_diagonal(const GridSolution& u);
[[nodiscard]] SpecialDiagonal special_diagonal(const GridSolution& u1, const GridSolution& u2);

} // namespace bohl
