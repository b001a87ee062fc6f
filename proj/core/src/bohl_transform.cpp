#include "bohl/bohl_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bohl {

namespace {

cplx interpolate(const Grid& grid, const std::vector<cplx>& f, double x) {
    if (!grid.contains(x))
        throw Error(ErrorKind::invalid_input,
                    "point " + std::to_string(x) + " outside grid [" + std::to_string(grid.a()) +
                        ", " + std::to_string(grid.b()) + "]");
    const double t = (x - grid.a()) / grid.step();
    const auto i = std::min(static_cast<std::size_t>(std::max(t, 0.0)), grid.size() - 2);
    const double frac = std::clamp(t - static_cast<double>(i), 0.0, 1.0);
    return (1.0 - frac) * f[i] + frac * f[i + 1];
}

std::vector<cplx> running_integral(const Grid& grid, const std::vector<cplx>& z2) {
    std::vector<cplx> out(grid.size());
    out[0] = 0.0;
    const double h = grid.step();
    for (std::size_t k = 1; k < grid.size(); ++k)
        out[k] = out[k - 1] + 0.5 * h * (1.0 / (2.0 * z2[k - 1]) + 1.0 / (2.0 * z2[k]));
    return out;
}

// Index k in (0, N-1) whose |u1| and |u2| are both at least 10% of their
// maxima, nearest to `from`.
std::size_t safe_node(const GridSolution& u1, const GridSolution& u2, std::size_t from) {
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t k = 0; k < u1.u.size(); ++k) {
        m1 = std::max(m1, std::abs(u1.u[k]));
        m2 = std::max(m2, std::abs(u2.u[k]));
    }
    const std::size_t n = u1.u.size();
    for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t k : {from + d, from - d}) {
            if (k == 0 || k + 1 >= n || k > n) continue;
            if (std::abs(u1.u[k]) >= 0.1 * m1 && std::abs(u2.u[k]) >= 0.1 * m2) return k;
        }
    }
    return n / 2;
}

constexpr double kQuarterPi = std::numbers::pi / 4.0;

SpecialAlpha classify_alpha(cplx alpha) {
    const double ratio = std::arg(alpha) / kQuarterPi;
    const double k = std::round(ratio);
    if (std::abs(ratio - k) * kQuarterPi > 1e-8)
        throw Error(ErrorKind::consistency,
                    "special_alpha: arg(alpha) = " + std::to_string(std::arg(alpha)) +
                        " is not a multiple of pi/4");
    const int ki = static_cast<int>(k);
    const AlphaBranch branch = (ki % 2 == 0) ? AlphaBranch::disconjugate : AlphaBranch::oscillatory;
    return {alpha, ki, branch};
}

} // namespace

cplx DiagonalFunction::z_at(double x) const { return interpolate(grid, z, x); }

cplx DiagonalFunction::integral_at(double x) const { return interpolate(grid, integral, x); }

DiagonalFunction diagonal_function(const GridSolution& u1, const GridSolution& u2, double w_tol) {
    const cplx w = wronskian_grid(u1, u2);
    if (std::abs(w - 1.0) > w_tol)
        throw Error(ErrorKind::invalid_input,
                    "diagonal_function: needs W[u1, u2] = 1, got |W - 1| = " +
                        std::to_string(std::abs(w - 1.0)));
    const Grid& grid = u1.grid;
    const std::size_t n = grid.size();
    DiagonalFunction out{grid, std::vector<cplx>(n), std::vector<cplx>(n), std::vector<cplx>(n), {}};
    for (std::size_t k = 0; k < n; ++k) {
        out.z2[k] = u1.u[k] * u2.u[k];
        if (std::abs(out.z2[k]) < 1e-12)
            throw Error(ErrorKind::diagonal_degenerate,
                        "diagonal_function: u1 u2 vanishes near x = " + std::to_string(grid.x(k)));
        cplx root = std::sqrt(out.z2[k]);
        if (k > 0 && std::abs(root - out.z[k - 1]) > std::abs(-root - out.z[k - 1])) root = -root;
        out.z[k] = root;
        out.dz[k] = (u1.du[k] * u2.u[k] + u1.u[k] * u2.du[k]) / (2.0 * root);
    }
    out.integral = running_integral(grid, out.z2);
    return out;
}

double diagonal_equation_residual(const DiagonalFunction& z, const ContinuumPotential& v) {
    const double h = z.grid.step();
    double out = 0.0;
    for (std::size_t k = 1; k + 1 < z.z.size(); ++k) {
        const cplx d2 = (z.z[k + 1] - 2.0 * z.z[k] + z.z[k - 1]) / (h * h);
        const cplx j = -d2 + v(z.grid.x(k)) * z.z[k] - 1.0 / (4.0 * z.z[k] * z.z[k] * z.z[k]);
        out = std::max(out, std::abs(j));
    }
    return out;
}

BohlBasisContinuum bohl_basis(const DiagonalFunction& z, const ContinuumPotential& v, double x0,
                              double max_diagonal_residual) {
    const double j = diagonal_equation_residual(z, v);
    if (!(j <= max_diagonal_residual))
        throw Error(ErrorKind::consistency,
                    "bohl_basis: diagonal-equation residual " + std::to_string(j) +
                        " exceeds " + std::to_string(max_diagonal_residual));
    const cplx offset = z.integral_at(x0);
    const std::size_t n = z.grid.size();
    BohlBasisContinuum out{x0,
                           {z.grid, std::vector<cplx>(n), std::vector<cplx>(n)},
                           {z.grid, std::vector<cplx>(n), std::vector<cplx>(n)},
                           {},
                           0.0,
                           0.0};
    for (std::size_t k = 0; k < n; ++k) {
        const cplx e = std::exp(z.integral[k] - offset);
        const cplx log_d = z.dz[k] / z.z[k];
        const cplx rate = 1.0 / (2.0 * z.z2[k]);
        out.plus.u[k] = z.z[k] * e;
        out.minus.u[k] = z.z[k] / e;
        out.plus.du[k] = out.plus.u[k] * (log_d + rate);
        out.minus.du[k] = out.minus.u[k] * (log_d - rate);
    }
    out.wronskian = wronskian_grid(out.minus, out.plus);
    out.residual_plus = sle_residual(out.plus, v);
    out.residual_minus = sle_residual(out.minus, v);
    return out;
}

cplx green_function(const DiagonalFunction& z, double x, double y) {
    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    const cplx span = z.integral_at(hi) - z.integral_at(lo);
    return z.z_at(x) * z.z_at(y) * std::exp(-span);
}

cplx green_derivative_jump(const DiagonalFunction& z, double y) {
    const double h = z.grid.step();
    if (!(y - h >= z.grid.a()) || !(y + h <= z.grid.b()))
        throw Error(ErrorKind::invalid_input, "green_derivative_jump: y too close to the edge");
    const cplx center = green_function(z, y, y);
    const cplx right = (green_function(z, y + h, y) - center) / h;
    const cplx left = (center - green_function(z, y - h, y)) / h;
    return right - left;
}

NonvanishingCombination nonvanishing_combination(const GridSolution& u1, const GridSolution& u2,
                                                 double x0) {
    if (!(u1.grid == u2.grid))
        throw Error(ErrorKind::invalid_input, "nonvanishing_combination: grids differ");
    const Grid& grid = u1.grid;
    if (!(x0 > grid.a() && x0 < grid.b()))
        throw Error(ErrorKind::invalid_input, "nonvanishing_combination: x0 must lie in (a, b)");
    if (!u1.is_real(1e-12) || !u2.is_real(1e-12))
        throw Error(ErrorKind::invalid_input, "nonvanishing_combination: u1, u2 must be real");
    const cplx w = wronskian_grid(u1, u2);
    if (std::abs(w) == 0.0)
        throw Error(ErrorKind::dependent_solutions, "nonvanishing_combination: u1, u2 dependent");

    const std::size_t k0 = grid.nearest(x0);
    const double a1 = u1.u[k0].real();
    const double a2 = u2.u[k0].real();
    double scale1 = 0.0;
    double scale2 = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        scale1 = std::max(scale1, std::abs(u1.u[k]));
        scale2 = std::max(scale2, std::abs(u2.u[k]));
    }
    if (std::abs(a1) <= 1e-8 * scale1 || std::abs(a2) <= 1e-8 * scale2) {
        const std::size_t hint = safe_node(u1, u2, k0);
        throw Error(ErrorKind::invalid_input,
                    "nonvanishing_combination: a basis member vanishes at x0 = " +
                        std::to_string(grid.x(k0)) + "; retry with x0 = " +
                        std::to_string(grid.x(hint)));
    }

    NonvanishingCombination out{{grid, std::vector<cplx>(grid.size()), std::vector<cplx>(grid.size())},
                                std::abs(a1 / a2), grid.x(k0), {}, 0.0, 0.0, 0.0};
    const cplx ib(0.0, out.beta);
    out.min_modulus = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        out.u.u[k] = u1.u[k].real() + ib * u2.u[k].real();
        out.u.du[k] = u1.du[k].real() + ib * u2.du[k].real();
        out.min_modulus = std::min(out.min_modulus, std::abs(out.u.u[k]));
    }
    const cplx u_x0 = out.u.u[k0];
    out.alpha = out.u.du[k0] / u_x0;
    if (out.alpha.imag() == 0.0)
        throw Error(ErrorKind::invalid_input,
                    "nonvanishing_combination: u'/u is real at x0; retry with x0 = " +
                        std::to_string(grid.x(safe_node(u1, u2, k0 + grid.size() / 7))));

    GridSolution re{grid, std::vector<cplx>(grid.size()), std::vector<cplx>(grid.size())};
    GridSolution im = re;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        re.u[k] = out.u.u[k].real();
        re.du[k] = out.u.du[k].real();
        im.u[k] = out.u.u[k].imag();
        im.du[k] = out.u.du[k].imag();
    }
    out.wronskian_im_re = wronskian_grid(im, re).real();
    out.identity_value = -out.alpha.imag() * std::norm(u_x0);
    if (!(out.min_modulus > 0.0))
        throw Error(ErrorKind::consistency, "nonvanishing_combination: combination vanishes");
    return out;
}

SpecialAlpha special_alpha(const GridSolution& u) {
    const cplx w = wronskian_grid(u, u.conj());
    double scale = 0.0;
    for (std::size_t k = 0; k < u.u.size(); ++k)
        scale = std::max(scale, std::abs(u.u[k]) * std::abs(u.du[k]));
    if (std::abs(w) <= 1e-10 * scale || w == cplx{})
        throw Error(ErrorKind::conjugate_dependence,
                    "special_alpha: u is real up to a global phase (W[u, conj u] = 0)");
    return classify_alpha(std::sqrt(1.0 / w));
}

SpecialAlpha special_alpha(const GridSolution& u1, const GridSolution& u2) {
    bool positive_product = u1.is_real(1e-12) && u2.is_real(1e-12);
    for (std::size_t k = 0; positive_product && k < u1.u.size(); ++k)
        positive_product = u1.u[k].real() * u2.u[k].real() > 0.0;
    if (positive_product) {
        double w = wronskian_grid(u1, u2).real();
        if (w == 0.0)
            throw Error(ErrorKind::dependent_solutions, "special_alpha: u1, u2 dependent");
        return classify_alpha(cplx(1.0 / std::sqrt(std::abs(w)), 0.0));
    }
    const double mid = 0.5 * (u1.grid.a() + u1.grid.b());
    return special_alpha(nonvanishing_combination(u1, u2, mid).u);
}

SpecialDiagonal special_diagonal(const GridSolution& u) {
    const SpecialAlpha alpha = special_alpha(u);
    return {alpha, diagonal_function(u, u.conj().scaled(alpha.alpha * alpha.alpha))};
}

SpecialDiagonal special_diagonal(const GridSolution& u1, const GridSolution& u2) {
    const SpecialAlpha alpha = special_alpha(u1, u2);
    if (alpha.branch == AlphaBranch::oscillatory) {
        const double mid = 0.5 * (u1.grid.a() + u1.grid.b());
        return special_diagonal(nonvanishing_combination(u1, u2, mid).u);
    }
    // Orient the pair so W[first, second] > 0.
    const double w = wronskian_grid(u1, u2).real();
    const GridSolution& first = w > 0.0 ? u1 : u2;
    const GridSolution& second = w > 0.0 ? u2 : u1;
    const cplx a2 = alpha.alpha * alpha.alpha;
    return {alpha, diagonal_function(first, second.scaled(a2))};
}

} // namespace bohl
