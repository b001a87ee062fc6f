#pragma once

// Discrete Schrödinger equation (-Δ + V)u = 0 on a finite integer window,
// written as the three-term recurrence u_{n+1} = (2 + V_n) u_n - u_{n-1}.
//
// Everything in here is a pure function of its arguments. Sequences carry
// their window so that lattice indices (which may be negative) are used
// directly instead of zero-based offsets.

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "bohl/error.hpp"

namespace bohl {

using cplx = std::complex<double>;

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Inclusive index range [lo, hi] with at least one interior point.
class LatticeWindow {
public:
    LatticeWindow(long lo, long hi);

    [[nodiscard]] long lo() const noexcept { return lo_; }
    [[nodiscard]] long hi() const noexcept { return hi_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(hi_ - lo_ + 1);
    }
    [[nodiscard]] bool contains(long n) const noexcept { return n >= lo_ && n <= hi_; }
    [[nodiscard]] std::size_t offset(long n) const noexcept {
        return static_cast<std::size_t>(n - lo_);
    }

    friend bool operator==(const LatticeWindow&, const LatticeWindow&) = default;

private:
    long lo_;
    long hi_;
};

/// A sequence indexed by lattice position over a window.
template <class T>
class LatticeSequence {
public:
    LatticeSequence(LatticeWindow window, std::vector<T> values)
        : window_(window), values_(std::move(values)) {
        if (values_.size() != window_.size())
            throw Error(ErrorKind::invalid_input,
                        "sequence length does not match its window");
    }
    LatticeSequence(LatticeWindow window, T fill)
        : window_(window), values_(window.size(), fill) {}

    [[nodiscard]] const LatticeWindow& window() const noexcept { return window_; }
    [[nodiscard]] long lo() const noexcept { return window_.lo(); }
    [[nodiscard]] long hi() const noexcept { return window_.hi(); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    T& operator[](long n) { return values_[window_.offset(n)]; }
    const T& operator[](long n) const { return values_[window_.offset(n)]; }

    [[nodiscard]] const T& at(long n) const {
        if (!window_.contains(n))
            throw Error(ErrorKind::invalid_input, "lattice index outside window");
        return (*this)[n];
    }

    [[nodiscard]] std::span<const T> values() const noexcept { return values_; }
    [[nodiscard]] std::span<T> values() noexcept { return values_; }

private:
    LatticeWindow window_;
    std::vector<T> values_;
};

using RealSequence = LatticeSequence<double>;
using ComplexSequence = LatticeSequence<cplx>;

/// Real potential V_n with finite entries.
class LatticePotential {
public:
    LatticePotential(LatticeWindow window, std::vector<double> values);

    [[nodiscard]] const LatticeWindow& window() const noexcept { return seq_.window(); }
    [[nodiscard]] long lo() const noexcept { return seq_.lo(); }
    [[nodiscard]] long hi() const noexcept { return seq_.hi(); }
    [[nodiscard]] double operator[](long n) const { return seq_[n]; }
    [[nodiscard]] std::span<const double> values() const noexcept { return seq_.values(); }
    [[nodiscard]] double min() const;

    /// Throws hypothesis_not_met unless V_n > bound everywhere.
    void require_above(double bound, const char* what) const;

private:
    RealSequence seq_;
};

[[nodiscard]] LatticePotential constant_potential(LatticeWindow window, double c);

using LatticeSolution = ComplexSequence;

/// Dense symmetric Green matrix over a window, indexed by lattice positions.
class GreenMatrix {
public:
    GreenMatrix(LatticeWindow window, std::vector<cplx> row_major);

    [[nodiscard]] const LatticeWindow& window() const noexcept { return window_; }
    [[nodiscard]] cplx operator()(long m, long n) const {
        return entries_[window_.offset(m) * window_.size() + window_.offset(n)];
    }
    [[nodiscard]] ComplexSequence diagonal() const;

private:
    LatticeWindow window_;
    std::vector<cplx> entries_;
};

/// z_n with z_n^2 = G_nn. `positive` is set iff every G_nn > 0 and the
/// positive root was taken.
struct DiagonalSequence {
    ComplexSequence z;
    bool positive = false;
};

/// S_n for lo+1 <= n <= hi; the entry at lo is NaN.
struct SFactorSequence {
    ComplexSequence s;
};

/// phi^+ and phi^- with W[phi^-, phi^+] = 1 and phi^+_n phi^-_n = z_n^2.
struct BohlBasisDiscrete {
    long anchor;
    LatticeSolution plus;
    LatticeSolution minus;
};

/// Positive pair with W[psi^-, psi^+] = 1.
struct PositiveBasis {
    LatticeSolution plus;   // grows to the right, vanishes just left of lo
    LatticeSolution minus;  // decays to the right, vanishes just right of hi
};

// -- recurrences ----------------------------------------------------------

[[nodiscard]] LatticeSolution solve_three_term(const LatticePotential& v, cplx u_lo,
                                               cplx u_lo_plus_1);

/// W = u1_n u2_{n+1} - u1_{n+1} u2_n, checked constant across the window to
/// rel_tol * max|W| plus the rounding floor of the products involved.
[[nodiscard]] cplx wronskian_discrete(const LatticeSolution& u1, const LatticeSolution& u2,
                                      double rel_tol = 1e-10);

/// Two strictly positive solutions built from Dirichlet-type seeds one step
/// outside each edge: psi^+ by forward recurrence from lo, psi^- by backward
/// recurrence from hi. psi^- approximates the recessive solution at indices
/// 20 or more away from hi (the error decays geometrically when V > 0).
[[nodiscard]] PositiveBasis positive_basis(const LatticePotential& v);

/// G_mn = u1_{max(m,n)} u2_{min(m,n)} / W[u1, u2].
[[nodiscard]] GreenMatrix build_green_matrix(const LatticeSolution& u1,
                                             const LatticeSolution& u2);

[[nodiscard]] DiagonalSequence diagonal_sequence(const GreenMatrix& g);
[[nodiscard]] DiagonalSequence diagonal_sequence(const ComplexSequence& g_diag);

/// Larger root of S - 1/S = 1/(z_n z_{n-1}).
[[nodiscard]] SFactorSequence s_factor(const DiagonalSequence& z);

/// Product ansatz anchored at m. Empty product at n = m; for n < m the
/// product is inverted so the basis covers the whole window.
[[nodiscard]] BohlBasisDiscrete bohl_reconstruct(const DiagonalSequence& z, long anchor);

/// V^{[z]}_n on interior indices; NaN at lo and hi. Requires z positive.
[[nodiscard]] RealSequence potential_from_diagonal(const DiagonalSequence& z);

/// r_n = (sqrt(1+4G_nn G_{n+1}) + sqrt(1+4G_nn G_{n-1}))/2 - (V_n+2)G_nn on
/// interior indices; NaN at lo and hi.
[[nodiscard]] RealSequence gtov_residual(const GreenMatrix& g, const LatticePotential& v);

/// V_n -> -4 - V_n, u_n -> (-1)^n u_n.
[[nodiscard]] std::pair<LatticePotential, LatticeSolution>
symmetry_map(const LatticePotential& v, const LatticeSolution& u);

/// G_{nm} = z_n z_m prod_{l=m+1}^{n} 1/S_l for m <= n.
[[nodiscard]] cplx green_product(const DiagonalSequence& z, const SFactorSequence& s,
                                 long m, long n);

// -- small helpers shared by the front ends --------------------------------

/// max |r_n| over indices where r_n is finite.
[[nodiscard]] double max_abs_finite(std::span<const double> r);
[[nodiscard]] double max_abs_finite(std::span<const cplx> r);

/// max over interior n of |u_{n+1} + u_{n-1} - (2+V_n)u_n| / max(1, |u_n|).
[[nodiscard]] double lattice_residual(const LatticePotential& v, const LatticeSolution& u);

} // namespace bohl
