#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bohl/bohl_transform.hpp"

using namespace bohl;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

// e^{-x} and e^{x}/2 for V = 1, W = 1.
std::pair<GridSolution, GridSolution> unit_pair(const Grid& g) {
    const auto v = ContinuumPotential::constant(1.0);
    const double a = g.a();
    return {integrate_sle(v, g, std::exp(-a), -std::exp(-a)),
            integrate_sle(v, g, 0.5 * std::exp(a), 0.5 * std::exp(a))};
}

} // namespace

TEST(DiagonalFunction, ConstantPotential) {
    const Grid g = Grid::with_step(-2.0, 2.0, 1e-3);
    const auto [dec, grow] = unit_pair(g);
    const auto z = diagonal_function(dec, grow);
    for (std::size_t k = 0; k < g.size(); k += 97) {
        EXPECT_NEAR(z.z[k].real(), kInvSqrt2, 1e-9);
        EXPECT_NEAR(z.z[k].imag(), 0.0, 1e-12);
    }
    EXPECT_LT(diagonal_equation_residual(z, ContinuumPotential::constant(1.0)), 1e-8);
}

TEST(DiagonalFunction, RequiresUnitWronskian) {
    const Grid g = Grid::with_step(0.0, 1.0, 1e-3);
    const auto [dec, grow] = unit_pair(g);
    EXPECT_THROW((void)diagonal_function(dec, grow.scaled(2.0)), Error);
}

TEST(DiagonalFunction, ComplexPhaseForOscillatoryBasis) {
    const Grid g = Grid::with_step(0.0, 10.0, 1e-3);
    const auto v = ContinuumPotential::constant(-1.0);
    const cplx i(0.0, 1.0);
    const auto u = integrate_sle(v, g, 1.0, i);
    const auto z = diagonal_function(u, u.conj().scaled(0.5 * i));
    for (std::size_t k = 0; k < g.size(); k += 501) {
        EXPECT_NEAR(std::abs(z.z2[k] - 0.5 * i), 0.0, 1e-9);
        EXPECT_NEAR(std::arg(z.z[k]), std::numbers::pi / 4, 1e-9);
    }
    EXPECT_LT(diagonal_equation_residual(z, v), 1e-8);
}

TEST(DiagonalFunction, LinearPotentialFromPositivePair) {
    const auto v = ContinuumPotential::affine(1.0, 0.0);
    const Grid g = Grid::with_step(1.0, 5.0, 1e-3);
    const auto pair = positive_pair(v, g);
    const auto z = diagonal_function(pair.recessive, pair.dominant);
    EXPECT_LT(diagonal_equation_residual(z, v), 1e-5);
}

TEST(BohlBasis, ExponentialsForUnitPotential) {
    const Grid g = Grid::with_step(-2.0, 2.0, 1e-3);
    const auto [dec, grow] = unit_pair(g);
    const auto z = diagonal_function(dec, grow);
    const auto basis = bohl_basis(z, ContinuumPotential::constant(1.0), 0.0);
    EXPECT_NEAR(std::abs(basis.wronskian - 1.0), 0.0, 1e-9);
    const std::size_t one = g.nearest(1.0);
    EXPECT_NEAR(basis.plus.u[one].real(), 1.9221155140795583, 1e-8);
    EXPECT_NEAR(basis.minus.u[one].real(), kInvSqrt2 / std::numbers::e, 1e-8);
    EXPECT_LT(basis.residual_plus, 1e-5);
    EXPECT_LT(basis.residual_minus, 1e-5);
}

TEST(BohlBasis, RefusesNonSolutionDiagonal) {
    const Grid g = Grid::with_step(0.0, 2.0, 1e-3);
    const auto [dec, grow] = unit_pair(g);
    const auto z = diagonal_function(dec, grow);
    EXPECT_THROW((void)bohl_basis(z, ContinuumPotential::constant(3.0), 1.0), Error);
}

TEST(GreenFunction, UnitPotentialClosedForm) {
    const Grid g = Grid::with_step(-3.0, 3.0, 1e-3);
    const auto [dec, grow] = unit_pair(g);
    const auto z = diagonal_function(dec, grow);
    EXPECT_NEAR(std::abs(green_function(z, 0.0, 1.0) - 0.18393972058572117), 0.0, 1e-6);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-2.5, 2.5);
    for (int t = 0; t < 50; ++t) {
        const double x = d(rng);
        const double y = d(rng);
        EXPECT_NEAR(std::abs(green_function(z, x, y) - 0.5 * std::exp(-std::abs(x - y))), 0.0,
                    1e-6);
    }
    const cplx jump = green_derivative_jump(z, 0.3);
    EXPECT_NEAR(std::abs(jump + 1.0), 0.0, 5.0 * g.step());
}

TEST(GreenFunction, DiagonalIsZSquared) {
    const auto v = ContinuumPotential::affine(1.0, 0.0);
    const Grid g = Grid::with_step(1.0, 5.0, 1e-3);
    const auto pair = positive_pair(v, g);
    const auto z = diagonal_function(pair.recessive, pair.dominant);
    for (std::size_t k = 0; k < g.size(); k += 250)
        EXPECT_NEAR(std::abs(green_function(z, g.x(k), g.x(k)) - z.z2[k]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(green_derivative_jump(z, 3.0) + 1.0), 0.0, 5.0 * g.step());
}

TEST(NonvanishingCombination, ScaledOscillatoryInstances) {
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> kd(0.5, 3.0);
    std::uniform_real_distribution<double> xd(0.5, 3.5);
    const Grid g = Grid::with_step(0.0, 4.0, 1e-3);
    for (int t = 0; t < 20; ++t) {
        const double k = kd(rng);
        const auto v = ContinuumPotential::constant(-k * k);
        const auto c = integrate_sle(v, g, 1.0, 0.0);
        const auto s = integrate_sle(v, g, 0.0, 1.0);
        const auto nc = nonvanishing_combination(c, s, xd(rng));
        EXPECT_GT(nc.min_modulus, 0.0);
        EXPECT_NEAR(nc.wronskian_im_re, nc.identity_value, 1e-8);
        const double ru = std::abs(nc.u.u[g.nearest(nc.x0)].real());
        const double iu = std::abs(nc.u.u[g.nearest(nc.x0)].imag());
        EXPECT_NEAR(ru, iu, 1e-12);
    }
}

TEST(NonvanishingCombination, HintsRetryPoint) {
    const auto v = ContinuumPotential::constant(-1.0);
    const Grid g(0.0, 2.0 * std::numbers::pi, 6283);  // pi is node 3141
    const auto c = integrate_sle(v, g, 1.0, 0.0);
    const auto s = integrate_sle(v, g, 0.0, 1.0);
    try {
        (void)nonvanishing_combination(c, s, std::numbers::pi);
        FAIL() << "expected invalid-input error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_input);
        EXPECT_NE(std::string(e.what()).find("retry with x0"), std::string::npos);
    }
}

TEST(SpecialAlpha, Branches) {
    const Grid g = Grid::with_step(0.0, 5.0, 1e-3);
    const cplx i(0.0, 1.0);
    const auto u = integrate_sle(ContinuumPotential::constant(-1.0), g, 1.0, i);
    const auto a = special_alpha(u);
    EXPECT_EQ(a.branch, AlphaBranch::oscillatory);
    EXPECT_NEAR(std::abs(a.alpha * a.alpha - 0.5 * i), 0.0, 1e-10);

    const auto [dec, grow] = unit_pair(g);
    const auto b = special_alpha(dec, grow);
    EXPECT_EQ(b.branch, AlphaBranch::disconjugate);
    EXPECT_EQ(b.k, 0);
    EXPECT_NEAR(b.alpha.real(), 1.0, 1e-10);

    EXPECT_THROW((void)special_alpha(dec), Error);
}

TEST(SpecialAlpha, InverseQuarticPotential) {
    // u = x e^{i/x} solves -u'' - x^{-4} u = 0.
    const auto v = ContinuumPotential::power(-1.0, -4.0);
    const Grid g = Grid::with_step(1.0, 20.0, 1e-3);
    const cplx e = std::exp(cplx(0.0, 1.0));
    const auto u = integrate_sle(v, g, e, e * cplx(1.0, -1.0));
    const auto a = special_alpha(u);
    EXPECT_NEAR(std::abs(a.alpha * a.alpha - cplx(0.0, -0.5)), 0.0, 1e-10);
    EXPECT_EQ(a.branch, AlphaBranch::oscillatory);

    const auto sd = special_diagonal(u);
    for (std::size_t k = 0; k < g.size(); k += 1000)
        EXPECT_NEAR(std::abs(sd.z.z[k]), g.x(k) * kInvSqrt2, 1e-8);
}

TEST(SpecialDiagonal, DisconjugateRealBasisGivesRealZ) {
    const auto v = ContinuumPotential::affine(1.0, 0.0);
    const Grid g = Grid::with_step(1.0, 5.0, 1e-3);
    const auto pair = positive_pair(v, g);
    const auto sd = special_diagonal(pair.dominant.scaled(3.0), pair.recessive);
    for (std::size_t k = 0; k < g.size(); k += 200) {
        EXPECT_GT(sd.z.z[k].real(), 0.0);
        EXPECT_NEAR(sd.z.z[k].imag(), 0.0, 1e-14);
    }
    EXPECT_LT(diagonal_equation_residual(sd.z, v), 1e-5);
}

namespace {

// Coefficients of phi in {u1, u2} from Wronskians at each node; returns the
// largest drift of either coefficient between grid thirds and the pointwise
// expansion residual.
std::pair<double, double> expansion_drift(const GridSolution& phi, const GridSolution& u1,
                                          const GridSolution& u2) {
    const cplx w = wronskian_grid(u1, u2);
    const std::size_t n = phi.u.size();
    auto coeffs = [&](std::size_t k) {
        const cplx c1 = (phi.u[k] * u2.du[k] - u2.u[k] * phi.du[k]) / w;
        const cplx c2 = (u1.u[k] * phi.du[k] - phi.u[k] * u1.du[k]) / w;
        return std::pair{c1, c2};
    };
    const auto [a1, a2] = coeffs(n / 6);
    double drift = 0.0;
    double resid = 0.0;
    for (std::size_t k : {n / 2, 5 * n / 6}) {
        const auto [b1, b2] = coeffs(k);
        drift = std::max({drift, std::abs(b1 - a1), std::abs(b2 - a2)});
    }
    for (std::size_t k = 0; k < n; ++k)
        resid = std::max(resid, std::abs(phi.u[k] - a1 * u1.u[k] - a2 * u2.u[k]));
    return {drift, resid};
}

} // namespace

TEST(BohlBasis, EquivalentToOriginalBasis) {
    const Grid g = Grid::with_step(0.0, 3.0, 1e-3);
    const auto v1 = ContinuumPotential::constant(1.0);
    const auto [dec, grow] = unit_pair(g);
    const auto b1 = bohl_basis(diagonal_function(dec, grow), v1, 1.5);
    for (const auto* phi : {&b1.plus, &b1.minus}) {
        const auto [drift, resid] = expansion_drift(*phi, dec, grow);
        EXPECT_LT(drift, 1e-6);
        EXPECT_LT(resid, 1e-6);
    }

    const auto vm1 = ContinuumPotential::constant(-1.0);
    const auto c = integrate_sle(vm1, g, 1.0, 0.0);
    const auto s = integrate_sle(vm1, g, 0.0, 1.0);
    const auto sd = special_diagonal(nonvanishing_combination(c, s, std::numbers::pi / 4).u);
    const auto b2 = bohl_basis(sd.z, vm1, 1.5);
    EXPECT_NEAR(std::abs(b2.wronskian - 1.0), 0.0, 1e-9);
    for (const auto* phi : {&b2.plus, &b2.minus}) {
        const auto [drift, resid] = expansion_drift(*phi, c, s);
        EXPECT_LT(drift, 1e-6);
        EXPECT_LT(resid, 1e-6);
    }
}

TEST(DiagonalFunction, UnwrappedPhaseReproducesProduct) {
    const Grid g = Grid::with_step(1.0, 20.0, 1e-3);
    const cplx e = std::exp(cplx(0.0, 1.0));
    const auto u = integrate_sle(ContinuumPotential::power(-1.0, -4.0), g, e, e * cplx(1.0, -1.0));
    const auto sd = special_diagonal(u);
    for (std::size_t k = 0; k < g.size(); ++k) {
        EXPECT_NEAR(std::abs(sd.z.z[k] * sd.z.z[k] - sd.z.z2[k]), 0.0, 1e-12 * std::abs(sd.z.z2[k]));
        if (k > 0) EXPECT_LT(std::abs(sd.z.z[k] - sd.z.z[k - 1]), 0.01);
    }
}
