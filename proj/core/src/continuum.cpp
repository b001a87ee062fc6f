#include "bohl/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bohl {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct State {
    cplx u;
    cplx du;
};

// One RK4 step of u' = du, du' = V u with signed step h.
State rk4_step(const ContinuumPotential& v, double x, State s, double h) {
    const double v0 = v(x);
    const double vm = v(x + 0.5 * h);
    const double v1 = v(x + h);
    const cplx k1u = s.du;
    const cplx k1d = v0 * s.u;
    const cplx k2u = s.du + 0.5 * h * k1d;
    const cplx k2d = vm * (s.u + 0.5 * h * k1u);
    const cplx k3u = s.du + 0.5 * h * k2d;
    const cplx k3d = vm * (s.u + 0.5 * h * k2u);
    const cplx k4u = s.du + h * k3d;
    const cplx k4d = v1 * (s.u + h * k3u);
    return {s.u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
            s.du + h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)};
}

void require_finite(const GridSolution& s) {
    for (std::size_t k = 0; k < s.u.size(); ++k)
        if (!std::isfinite(std::abs(s.u[k])) || !std::isfinite(std::abs(s.du[k])))
            throw Error(ErrorKind::invalid_input,
                        "integration overflowed; interval too long for double range");
}

} // namespace

Grid::Grid(double a, double b, std::size_t points) : a_(a), b_(b), n_(points), h_(0.0) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
        throw Error(ErrorKind::invalid_input, "grid needs finite a < b");
    if (points < 9) throw Error(ErrorKind::invalid_input, "grid needs at least 9 points");
    h_ = (b - a) / static_cast<double>(points - 1);
}

Grid Grid::with_step(double a, double b, double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw Error(ErrorKind::invalid_input, "grid step must be positive");
    const double count = std::round((b - a) / h);
    if (!(count >= 8.0) || count > 1e8)
        throw Error(ErrorKind::invalid_input, "grid step gives fewer than 9 or too many points");
    return Grid(a, b, static_cast<std::size_t>(count) + 1);
}

std::size_t Grid::nearest(double x) const noexcept {
    const double t = std::clamp((x - a_) / h_, 0.0, static_cast<double>(n_ - 1));
    return static_cast<std::size_t>(std::lround(t));
}

ContinuumPotential ContinuumPotential::constant(double c) {
    return {[c](double) { return c; }, "constant"};
}

ContinuumPotential ContinuumPotential::affine(double slope, double intercept) {
    return {[slope, intercept](double x) { return slope * x + intercept; }, "affine"};
}

ContinuumPotential ContinuumPotential::power(double scale, double exponent) {
    return {[scale, exponent](double x) { return scale * std::pow(x, exponent); }, "power"};
}

ContinuumPotential ContinuumPotential::samples(double a, double b, std::vector<double> values) {
    if (values.size() < 2 || !(b > a))
        throw Error(ErrorKind::invalid_input, "sampled potential needs >= 2 values on a < b");
    for (double x : values)
        if (!std::isfinite(x)) throw Error(ErrorKind::invalid_input, "non-finite potential sample");
    const double step = (b - a) / static_cast<double>(values.size() - 1);
    return {[a, step, vals = std::move(values)](double x) {
                const double t = std::clamp((x - a) / step, 0.0, static_cast<double>(vals.size() - 1));
                const auto i = std::min(static_cast<std::size_t>(t), vals.size() - 2);
                const double frac = t - static_cast<double>(i);
                return (1.0 - frac) * vals[i] + frac * vals[i + 1];
            },
            "samples"};
}

double ContinuumPotential::min_on(const Grid& grid) const {
    double out = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid.size(); ++k) out = std::min(out, (*this)(grid.x(k)));
    return out;
}

GridSolution GridSolution::conj() const {
    GridSolution out = *this;
    for (auto& x : out.u) x = std::conj(x);
    for (auto& x : out.du) x = std::conj(x);
    return out;
}

GridSolution GridSolution::scaled(cplx c) const {
    GridSolution out = *this;
    for (auto& x : out.u) x *= c;
    for (auto& x : out.du) x *= c;
    return out;
}

bool GridSolution::is_real(double rel_tol) const {
    double mag = 0.0;
    double imag = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        mag = std::max({mag, std::abs(u[k]), std::abs(du[k])});
        imag = std::max({imag, std::abs(u[k].imag()), std::abs(du[k].imag())});
    }
    return imag <= rel_tol * mag;
}

GridSolution integrate_sle(const ContinuumPotential& v, const Grid& grid, cplx u_a, cplx du_a) {
    GridSolution out{grid, std::vector<cplx>(grid.size()), std::vector<cplx>(grid.size())};
    State s{u_a, du_a};
    out.u[0] = s.u;
    out.du[0] = s.du;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        s = rk4_step(v, grid.x(k), s, grid.step());
        out.u[k + 1] = s.u;
        out.du[k + 1] = s.du;
    }
    require_finite(out);
    return out;
}

GridSolution integrate_sle_backward(const ContinuumPotential& v, const Grid& grid, cplx u_b,
                                    cplx du_b) {
    const std::size_t last = grid.size() - 1;
    GridSolution out{grid, std::vector<cplx>(grid.size()), std::vector<cplx>(grid.size())};
    State s{u_b, du_b};
    out.u[last] = s.u;
    out.du[last] = s.du;
    for (std::size_t k = last; k > 0; --k) {
        s = rk4_step(v, grid.x(k), s, -grid.step());
        out.u[k - 1] = s.u;
        out.du[k - 1] = s.du;
    }
    require_finite(out);
    return out;
}

cplx wronskian_grid(const GridSolution& u1, const GridSolution& u2, double rel_tol) {
    if (!(u1.grid == u2.grid))
        throw Error(ErrorKind::invalid_input, "wronskian_grid: grids differ");
    const std::size_t n = u1.u.size();
    std::vector<cplx> w(n);
    double w_max = 0.0;
    double term_max = 0.0;
    cplx sum{};
    for (std::size_t k = 0; k < n; ++k) {
        const cplx p = u1.u[k] * u2.du[k];
        const cplx q = u2.u[k] * u1.du[k];
        w[k] = p - q;
        sum += w[k];
        w_max = std::max(w_max, std::abs(w[k]));
        term_max = std::max(term_max, std::abs(p) + std::abs(q));
    }
    const cplx mean = sum / static_cast<double>(n);
    double spread = 0.0;
    for (const cplx& x : w) spread = std::max(spread, std::abs(x - mean));
    const double tol = rel_tol * w_max + 64.0 * kEps * term_max;
    if (spread > tol)
        throw Error(ErrorKind::consistency,
                    "wronskian_grid: W varies by " + std::to_string(spread) +
                        "; inputs do not solve one equation on this grid");
    return mean;
}

PositivePair positive_pair(const ContinuumPotential& v, const Grid& grid) {
    const double v_min = v.min_on(grid);
    if (!(v_min > 0.0))
        throw Error(ErrorKind::hypothesis_not_met,
                    "positive_pair: requires V > 0 on the grid (min V = " + std::to_string(v_min) +
                        ")");
    GridSolution rec = integrate_sle_backward(v, grid, 1.0, -std::sqrt(v(grid.b())));
    GridSolution dom = integrate_sle(v, grid, 1.0, std::sqrt(v(grid.a())));
    for (std::size_t k = 0; k < grid.size(); ++k)
        if (!(rec.u[k].real() > 0.0) || !(dom.u[k].real() > 0.0))
            throw Error(ErrorKind::positivity_failure,
                        "positive_pair: a solution changes sign at x = " +
                            std::to_string(grid.x(k)));
    const double w = wronskian_grid(rec, dom).real();
    const double s = 1.0 / std::sqrt(w);
    return {rec.scaled(s), dom.scaled(s)};
}

double sle_residual(const GridSolution& u, const ContinuumPotential& v) {
    const double h = u.grid.step();
    double out = 0.0;
    for (std::size_t k = 1; k + 1 < u.u.size(); ++k) {
        const cplx d2 = (u.u[k + 1] - 2.0 * u.u[k] + u.u[k - 1]) / (h * h);
        const double r = std::abs(-d2 + v(u.grid.x(k)) * u.u[k]);
        out = std::max(out, r / std::max(1.0, std::abs(u.u[k])));
    }
    return out;
}

} // namespace bohl
