#pragma once

// Factorization of -Δ + V into first-order difference operators built from
// the Green diagonal:
//
//   -Δ + V = R [-∇+ - 1 + 1/a_n] [∇+ + 1 - a_n],
//   a_n = (1 + sqrt(1 + 4 G_nn G_{n+1,n+1})) / (2 G_nn) = 1 - Q_n,
//
// with (R f)_n = f_{n-1} and (∇+ f)_n = f_{n+1} - f_n.

#include "bohl/lattice.hpp"

namespace bohl {

/// Q_n = 1 - z_{n+1} S_{n+1} / z_n for lo <= n < hi (NaN at hi). Verifies
/// (∇+ + Q) phi^+ = 0 on the reconstructed basis before returning.
[[nodiscard]] ComplexSequence darboux_discrete_q(const DiagonalSequence& z);

/// max over lo <= n < hi of |phi_{n+1} - phi_n + Q_n phi_n| / max(1, |phi_n|).
[[nodiscard]] double first_order_residual(const ComplexSequence& q, const LatticeSolution& phi);

/// Applies the factored operator to f. Defined for lo < n < hi; NaN at the
/// two edges.
[[nodiscard]] ComplexSequence darboux_discrete_apply(const DiagonalSequence& z,
                                                     const ComplexSequence& f);

/// max over interior n of |(factored f)_n - ((-Δ+V) f)_n|.
[[nodiscard]] double darboux_discrete_residual(const DiagonalSequence& z,
                                               const LatticePotential& v,
                                               const ComplexSequence& f);

} // namespace bohl
