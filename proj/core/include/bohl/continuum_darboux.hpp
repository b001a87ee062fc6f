#pragma once

// D^±[Z] = d/dx - Z'/Z ∓ 1/(2Z^2). Each annihilates the matching phi^±, and
// (D^± - 2 d/dx) D^± = -d^2/dx^2 + V whenever Z solves the diagonal equation.

#include <vector>

#include "bohl/bohl_transform.hpp"

namespace bohl {

enum class Sign { plus, minus };

/// f' - (Z'/Z) f ∓ f/(2Z^2) with f' by centered differences and Z' carried
/// by Z. NaN at the two end nodes.
[[nodiscard]] std::vector<cplx> darboux_apply(const DiagonalFunction& z, Sign sign,
                                              const std::vector<cplx>& f);

struct DarbouxResidual {
    double plus;
    double minus;
    [[nodiscard]] double max() const noexcept { return plus > minus ? plus : minus; }
};

/// Nodes kept at exactly zero on each end of f before the residual is taken.
inline constexpr std::size_t kDarbouxPadding = 4;

/// max-norm over nodes 2..N-3 of (D - 2 d/dx) D f - (-f'' + V f), for both
/// signs. f must vanish on the first and last kDarbouxPadding nodes.
[[nodiscard]] DarbouxResidual darboux_factorization_residual(const DiagonalFunction& z,
                                                             const ContinuumPotential& v,
                                                             const std::vector<cplx>& f);

/// Smooth bump exp(1 - 1/(1 - t^2)), t = (x - center)/half_width, zero outside.
[[nodiscard]] std::vector<cplx> bump_function(const Grid& grid, double center, double half_width);

} // namespace bohl
