#include "bohl/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bohl {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_same_window(const LatticeWindow& a, const LatticeWindow& b, const char* what) {
    if (!(a == b))
        throw Error(ErrorKind::invalid_input, std::string(what) + ": windows differ");
}

void require_finite(const LatticeSolution& u, const char* what) {
    for (const cplx& x : u.values())
        if (!finite(x))
            throw Error(ErrorKind::invalid_input,
                        std::string(what) + ": values overflowed; window too long for double range");
}

} // namespace

LatticeWindow::LatticeWindow(long lo, long hi) : lo_(lo), hi_(hi) {
    if (hi < lo + 2)
        throw Error(ErrorKind::invalid_input,
                    "lattice window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "] needs at least 3 points");
}

LatticePotential::LatticePotential(LatticeWindow window, std::vector<double> values)
    : seq_(window, std::move(values)) {
    for (double v : seq_.values())
        if (!std::isfinite(v))
            throw Error(ErrorKind::invalid_input, "potential has a non-finite entry");
}

double LatticePotential::min() const {
    const auto vals = values();
    return *std::min_element(vals.begin(), vals.end());
}

void LatticePotential::require_above(double bound, const char* what) const {
    for (long n = lo(); n <= hi(); ++n)
        if (!((*this)[n] > bound))
            throw Error(ErrorKind::hypothesis_not_met,
                        std::string(what) + ": requires V_n > " + std::to_string(bound) +
                            ", violated at n = " + std::to_string(n) + " (V_n = " +
                            std::to_string((*this)[n]) + ")");
}

LatticePotential constant_potential(LatticeWindow window, double c) {
    return LatticePotential(window, std::vector<double>(window.size(), c));
}

GreenMatrix::GreenMatrix(LatticeWindow window, std::vector<cplx> row_major)
    : window_(window), entries_(std::move(row_major)) {
    if (entries_.size() != window_.size() * window_.size())
        throw Error(ErrorKind::invalid_input, "Green matrix size does not match its window");
}

ComplexSequence GreenMatrix::diagonal() const {
    ComplexSequence d(window_, cplx{});
    for (long n = window_.lo(); n <= window_.hi(); ++n) d[n] = (*this)(n, n);
    return d;
}

LatticeSolution solve_three_term(const LatticePotential& v, cplx u_lo, cplx u_lo_plus_1) {
    LatticeSolution u(v.window(), cplx{});
    const long lo = v.lo();
    u[lo] = u_lo;
    u[lo + 1] = u_lo_plus_1;
    for (long n = lo + 1; n < v.hi(); ++n) u[n + 1] = (2.0 + v[n]) * u[n] - u[n - 1];
    return u;
}

cplx wronskian_discrete(const LatticeSolution& u1, const LatticeSolution& u2, double rel_tol) {
    require_same_window(u1.window(), u2.window(), "wronskian_discrete");
    cplx first{};
    double w_max = 0.0;
    double term_max = 0.0;
    double spread = 0.0;
    for (long n = u1.lo(); n < u1.hi(); ++n) {
        const cplx a = u1[n] * u2[n + 1];
        const cplx b = u1[n + 1] * u2[n];
        const cplx w = a - b;
        if (n == u1.lo()) first = w;
        w_max = std::max(w_max, std::abs(w));
        term_max = std::max(term_max, std::abs(a) + std::abs(b));
        spread = std::max(spread, std::abs(w - first));
    }
    const double tol = rel_tol * w_max + 64.0 * kEps * term_max;
    if (spread > tol)
        throw Error(ErrorKind::consistency,
                    "Wronskian varies by " + std::to_string(spread) +
                        " across the window; inputs do not solve one equation");
    return first;
}

PositiveBasis positive_basis(const LatticePotential& v) {
    v.require_above(-2.0, "positive_basis");
    const long lo = v.lo();
    const long hi = v.hi();

    LatticeSolution plus(v.window(), cplx{});
    plus[lo] = 1.0;
    plus[lo + 1] = 2.0 + v[lo];
    for (long n = lo + 1; n < hi; ++n) plus[n + 1] = (2.0 + v[n]) * plus[n] - plus[n - 1];

    LatticeSolution minus(v.window(), cplx{});
    minus[hi] = 1.0;
    minus[hi - 1] = 2.0 + v[hi];
    for (long n = hi - 1; n > lo; --n) minus[n - 1] = (2.0 + v[n]) * minus[n] - minus[n + 1];

    require_finite(plus, "positive_basis");
    require_finite(minus, "positive_basis");
    for (long n = lo; n <= hi; ++n) {
        if (!(plus[n].real() > 0.0) || !(minus[n].real() > 0.0))
            throw Error(ErrorKind::positivity_failure,
                        "positive_basis: a solution changes sign at n = " + std::to_string(n) +
                            "; no positive pair on this window");
    }

    const double w = wronskian_discrete(minus, plus).real();
    if (!(w > 0.0))
        throw Error(ErrorKind::positivity_failure, "positive_basis: non-positive Wronskian");
    const double scale = 1.0 / std::sqrt(w);
    for (long n = lo; n <= hi; ++n) {
        plus[n] *= scale;
        minus[n] *= scale;
    }
    return {std::move(plus), std::move(minus)};
}

GreenMatrix build_green_matrix(const LatticeSolution& u1, const LatticeSolution& u2) {
    require_same_window(u1.window(), u2.window(), "build_green_matrix");
    const cplx w = wronskian_discrete(u1, u2);
    double scale = 0.0;
    for (long n = u1.lo(); n <= u1.hi(); ++n) scale = std::max(scale, std::abs(u1[n] * u2[n]));
    if (std::abs(w) <= 64.0 * kEps * scale || w == cplx{})
        throw Error(ErrorKind::dependent_solutions,
                    "build_green_matrix: zero Wronskian; solutions are dependent");

    const LatticeWindow& win = u1.window();
    const std::size_t size = win.size();
    std::vector<cplx> entries(size * size);
    for (long m = win.lo(); m <= win.hi(); ++m) {
        for (long n = win.lo(); n <= win.hi(); ++n) {
            const long big = std::max(m, n);
            const long small = std::min(m, n);
            entries[win.offset(m) * size + win.offset(n)] = u1[big] * u2[small] / w;
        }
    }
    return GreenMatrix(win, std::move(entries));
}

DiagonalSequence diagonal_sequence(const GreenMatrix& g) { return diagonal_sequence(g.diagonal()); }

DiagonalSequence diagonal_sequence(const ComplexSequence& g_diag) {
    double scale = 0.0;
    for (const cplx& x : g_diag.values()) {
        if (!finite(x))
            throw Error(ErrorKind::invalid_input, "diagonal_sequence: non-finite diagonal entry");
        scale = std::max(scale, std::abs(x));
    }
    bool positive = true;
    for (long n = g_diag.lo(); n <= g_diag.hi(); ++n) {
        const cplx g = g_diag[n];
        if (std::abs(g) <= 1e-14 * scale || g == cplx{})
            throw Error(ErrorKind::diagonal_degenerate,
                        "diagonal_sequence: G_nn vanishes at n = " + std::to_string(n));
        if (!(g.real() > 0.0) || std::abs(g.imag()) > 1e-14 * g.real()) positive = false;
    }

    DiagonalSequence out{ComplexSequence(g_diag.window(), cplx{}), positive};
    for (long n = g_diag.lo(); n <= g_diag.hi(); ++n)
        out.z[n] = positive ? cplx(std::sqrt(g_diag[n].real()), 0.0) : std::sqrt(g_diag[n]);
    return out;
}

SFactorSequence s_factor(const DiagonalSequence& z) {
    SFactorSequence out{ComplexSequence(z.z.window(), cplx(kNaN, kNaN))};
    for (long n = z.z.lo() + 1; n <= z.z.hi(); ++n) {
        const cplx p = z.z[n] * z.z[n - 1];
        if (p == cplx{})
            throw Error(ErrorKind::diagonal_degenerate, "s_factor: z_n vanishes");
        const cplx s = (1.0 + std::sqrt(1.0 + 4.0 * p * p)) / (2.0 * p);
        const cplx defect = s - 1.0 / s - 1.0 / p;
        if (std::abs(defect) > 1e-12 * std::max({1.0, std::abs(s), std::abs(1.0 / p)}))
            throw Error(ErrorKind::consistency,
                        "s_factor: S - 1/S = 1/(z_n z_{n-1}) fails at n = " + std::to_string(n));
        out.s[n] = s;
    }
    return out;
}

BohlBasisDiscrete bohl_reconstruct(const DiagonalSequence& z, long anchor) {
    const LatticeWindow& win = z.z.window();
    if (!win.contains(anchor))
        throw Error(ErrorKind::invalid_input, "bohl_reconstruct: anchor outside window");
    const SFactorSequence s = s_factor(z);

    ComplexSequence prod(win, cplx(1.0, 0.0));
    for (long n = anchor + 1; n <= win.hi(); ++n) prod[n] = prod[n - 1] * s.s[n];
    for (long n = anchor - 1; n >= win.lo(); --n) prod[n] = prod[n + 1] / s.s[n + 1];

    BohlBasisDiscrete out{anchor, LatticeSolution(win, cplx{}), LatticeSolution(win, cplx{})};
    for (long n = win.lo(); n <= win.hi(); ++n) {
        out.plus[n] = z.z[n] * prod[n];
        out.minus[n] = z.z[n] / prod[n];
    }
    require_finite(out.plus, "bohl_reconstruct");
    require_finite(out.minus, "bohl_reconstruct");
    return out;
}

RealSequence potential_from_diagonal(const DiagonalSequence& z) {
    if (!z.positive)
        throw Error(ErrorKind::hypothesis_not_met,
                    "potential_from_diagonal: needs a positive diagonal (G_nn > 0)");
    RealSequence out(z.z.window(), kNaN);
    for (long n = z.z.lo() + 1; n < z.z.hi(); ++n) {
        const double zn2 = std::norm(z.z[n]);
        const double up = std::sqrt(1.0 + 4.0 * zn2 * std::norm(z.z[n + 1]));
        const double down = std::sqrt(1.0 + 4.0 * zn2 * std::norm(z.z[n - 1]));
        out[n] = (up + down) / (2.0 * zn2) - 2.0;
    }
    return out;
}

RealSequence gtov_residual(const GreenMatrix& g, const LatticePotential& v) {
    require_same_window(g.window(), v.window(), "gtov_residual");
    const ComplexSequence d = g.diagonal();
    for (long n = d.lo(); n <= d.hi(); ++n)
        if (!(d[n].real() > 0.0) || std::abs(d[n].imag()) > 1e-14 * d[n].real())
            throw Error(ErrorKind::hypothesis_not_met,
                        "gtov_residual: needs a positive Green diagonal");
    RealSequence out(v.window(), kNaN);
    for (long n = v.lo() + 1; n < v.hi(); ++n) {
        const double gn = d[n].real();
        const double lhs = 0.5 * (std::sqrt(1.0 + 4.0 * gn * d[n + 1].real()) +
                                  std::sqrt(1.0 + 4.0 * gn * d[n - 1].real()));
        out[n] = lhs - (v[n] + 2.0) * gn;
    }
    return out;
}

std::pair<LatticePotential, LatticeSolution> symmetry_map(const LatticePotential& v,
                                                          const LatticeSolution& u) {
    require_same_window(v.window(), u.window(), "symmetry_map");
    std::vector<double> vt(v.window().size());
    LatticeSolution ut(u.window(), cplx{});
    for (long n = v.lo(); n <= v.hi(); ++n) {
        vt[v.window().offset(n)] = -4.0 - v[n];
        ut[n] = (n % 2 == 0) ? u[n] : -u[n];
    }
    return {LatticePotential(v.window(), std::move(vt)), std::move(ut)};
}

cplx green_product(const DiagonalSequence& z, const SFactorSequence& s, long m, long n) {
    if (m > n) std::swap(m, n);
    cplx prod(1.0, 0.0);
    for (long l = m + 1; l <= n; ++l) prod /= s.s[l];
    return z.z[n] * z.z[m] * prod;
}

double max_abs_finite(std::span<const double> r) {
    double out = 0.0;
    for (double x : r)
        if (std::isfinite(x)) out = std::max(out, std::abs(x));
    return out;
}

double max_abs_finite(std::span<const cplx> r) {
    double out = 0.0;
    for (const cplx& x : r)
        if (finite(x)) out = std::max(out, std::abs(x));
    return out;
}

double lattice_residual(const LatticePotential& v, const LatticeSolution& u) {
    require_same_window(v.window(), u.window(), "lattice_residual");
    double out = 0.0;
    for (long n = v.lo() + 1; n < v.hi(); ++n) {
        const double r = std::abs(u[n + 1] + u[n - 1] - (2.0 + v[n]) * u[n]);
        out = std::max(out, r / std::max(1.0, std::abs(u[n])));
    }
    return out;
}

} // namespace bohl
