#include "bohl/lattice_darboux.hpp"

#include <algorithm>
#include <cmath>

namespace bohl {

ComplexSequence darboux_discrete_q(const DiagonalSequence& z) {
    const SFactorSequence s = s_factor(z);
    ComplexSequence q(z.z.window(), cplx(kNaN, kNaN));
    for (long n = z.z.lo(); n < z.z.hi(); ++n) q[n] = 1.0 - z.z[n + 1] * s.s[n + 1] / z.z[n];

    const BohlBasisDiscrete basis = bohl_reconstruct(z, z.z.lo());
    if (first_order_residual(q, basis.plus) > 1e-10)
        throw Error(ErrorKind::consistency, "darboux_discrete_q: (∇+ + Q) phi^+ != 0");
    return q;
}

double first_order_residual(const ComplexSequence& q, const LatticeSolution& phi) {
    if (!(q.window() == phi.window()))
        throw Error(ErrorKind::invalid_input, "first_order_residual: windows differ");
    double out = 0.0;
    for (long n = q.lo(); n < q.hi(); ++n) {
        const double r = std::abs(phi[n + 1] - phi[n] + q[n] * phi[n]);
        out = std::max(out, r / std::max(1.0, std::abs(phi[n])));
    }
    return out;
}

ComplexSequence darboux_discrete_apply(const DiagonalSequence& z, const ComplexSequence& f) {
    const LatticeWindow& win = z.z.window();
    if (!(f.window() == win))
        throw Error(ErrorKind::invalid_input, "darboux_discrete_apply: windows differ");

    // a_k = 1 - Q_k, written with G = z^2 as in the factorization.
    ComplexSequence a(win, cplx(kNaN, kNaN));
    for (long k = win.lo(); k < win.hi(); ++k) {
        const cplx g = z.z[k] * z.z[k];
        const cplx g_next = z.z[k + 1] * z.z[k + 1];
        a[k] = (1.0 + std::sqrt(1.0 + 4.0 * g * g_next)) / (2.0 * g);
    }
    // Right factor: (∇+ + 1 - a_k) f = f_{k+1} - a_k f_k.
    ComplexSequence right(win, cplx(kNaN, kNaN));
    for (long k = win.lo(); k < win.hi(); ++k) right[k] = f[k + 1] - a[k] * f[k];
    // Left factor (-∇+ - 1 + 1/a_k) g = -g_{k+1} + g_k / a_k, then shift k = n - 1.
    ComplexSequence out(win, cplx(kNaN, kNaN));
    for (long n = win.lo() + 1; n < win.hi(); ++n) {
        const long k = n - 1;
        out[n] = -right[k + 1] + right[k] / a[k];
    }
    return out;
}

double darboux_discrete_residual(const DiagonalSequence& z, const LatticePotential& v,
                                 const ComplexSequence& f) {
    if (!(v.window() == z.z.window()))
        throw Error(ErrorKind::invalid_input, "darboux_discrete_residual: windows differ");
    const ComplexSequence factored = darboux_discrete_apply(z, f);
    double out = 0.0;
    for (long n = v.lo() + 1; n < v.hi(); ++n) {
        const cplx direct = -f[n + 1] - f[n - 1] + (2.0 + v[n]) * f[n];
        out = std::max(out, std::abs(factored[n] - direct));
    }
    return out;
}

} // namespace bohl
