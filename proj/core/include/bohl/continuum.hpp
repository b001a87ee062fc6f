#pragma once

// -u'' + V(x) u = 0 on a uniform grid. Solutions carry u' alongside u so
// Wronskians and log-derivatives do not need differencing.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bohl/error.hpp"
#include "bohl/lattice.hpp"

namespace bohl {

/// Uniform grid x_k = a + k h, k = 0..N-1, h = (b - a)/(N - 1), N >= 9.
class Grid {
public:
    Grid(double a, double b, std::size_t points);

    /// Grid with step as close to `h` as the interval allows.
    [[nodiscard]] static Grid with_step(double a, double b, double h);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] double step() const noexcept { return h_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double x(std::size_t k) const noexcept {
        return k + 1 == n_ ? b_ : a_ + static_cast<double>(k) * h_;
    }
    [[nodiscard]] bool contains(double x) const noexcept { return x >= a_ && x <= b_; }
    /// Index of the node nearest to x (x clamped into [a, b]).
    [[nodiscard]] std::size_t nearest(double x) const noexcept;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    double a_;
    double b_;
    std::size_t n_;
    double h_;
};

/// Real, continuous potential V(x).
class ContinuumPotential {
public:
    ContinuumPotential(std::function<double(double)> eval, std::string description)
        : eval_(std::move(eval)), description_(std::move(description)) {}

    [[nodiscard]] static ContinuumPotential constant(double c);
    [[nodiscard]] static ContinuumPotential affine(double slope, double intercept);
    /// V(x) = scale * x^exponent.
    [[nodiscard]] static ContinuumPotential power(double scale, double exponent);
    /// Linear interpolation of equally spaced samples over [a, b].
    [[nodiscard]] static ContinuumPotential samples(double a, double b, std::vector<double> values);

    [[nodiscard]] double operator()(double x) const { return eval_(x); }
    [[nodiscard]] const std::string& description() const noexcept { return description_; }

    /// min V over the grid nodes.
    [[nodiscard]] double min_on(const Grid& grid) const;

private:
    std::function<double(double)> eval_;
    std::string description_;
};

struct GridSolution {
    Grid grid;
    std::vector<cplx> u;
    std::vector<cplx> du;

    [[nodiscard]] GridSolution conj() const;
    [[nodiscard]] GridSolution scaled(cplx c) const;
    [[nodiscard]] bool is_real(double rel_tol = 1e-14) const;
};

/// Classical RK4 on (u, u') from x = a.
[[nodiscard]] GridSolution integrate_sle(const ContinuumPotential& v, const Grid& grid, cplx u_a,
                                         cplx du_a);

/// Classical RK4 on (u, u') from x = b towards a.
[[nodiscard]] GridSolution integrate_sle_backward(const ContinuumPotential& v, const Grid& grid,
                                                  cplx u_b, cplx du_b);

/// W[u1, u2] = u1 u2' - u2 u1', checked constant over the grid to
/// rel_tol * max|W| plus the rounding floor of the two products. Returns the
/// grid mean.
[[nodiscard]] cplx wronskian_grid(const GridSolution& u1, const GridSolution& u2,
                                  double rel_tol = 1e-8);

/// Positive pair for V > 0 on the grid: `recessive` integrated backwards
/// from b with Liouville-Green data (1, -sqrt V(b)), `dominant` forwards from
/// a with (1, sqrt V(a)). Scaled so W[recessive, dominant] = 1.
struct PositivePair {
    GridSolution recessive;
    GridSolution dominant;
};
[[nodiscard]] PositivePair positive_pair(const ContinuumPotential& v, const Grid& grid);

/// max over interior nodes of |-u''_fd + V u| / max(1, |u|).
[[nodiscard]] double sle_residual(const GridSolution& u, const ContinuumPotential& v);

} // namespace bohl
