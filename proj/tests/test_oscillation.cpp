#include <gtest/gtest.h>

#include <cmath>

#include "bohl/oscillation.hpp"

using namespace bohl;

TEST(OscillationClassify, UnitPotentialIsReal) {
    const auto v = ContinuumPotential::constant(1.0);
    const auto pair = positive_pair(v, Grid::with_step(0.0, 10.0, 1e-3));
    const auto sd = special_diagonal(pair.recessive, pair.dominant);
    EXPECT_EQ(oscillation_classify(sd.z).classification, Oscillation::real_nonoscillatory);
}

TEST(OscillationClassify, NegativeConstantIsInfinite) {
    const auto v = ContinuumPotential::constant(-1.0);
    const Grid g = Grid::with_step(0.0, 50.0, 1e-3);
    const auto u = integrate_sle(v, g, 1.0, cplx(0.0, 1.0));
    const auto rep = oscillation_classify(special_diagonal(u).z);
    EXPECT_EQ(rep.classification, Oscillation::infinite_phase);
    EXPECT_NEAR(rep.total_phase, 50.0, 1e-6);
}

TEST(OscillationClassify, InverseQuarticIsFinite) {
    const auto v = ContinuumPotential::power(-1.0, -4.0);
    const Grid g = Grid::with_step(1.0, 50.0, 1e-3);
    const cplx e = std::exp(cplx(0.0, 1.0));
    const auto u = integrate_sle(v, g, e, e * cplx(1.0, -1.0));
    const auto rep = oscillation_classify(special_diagonal(u).z);
    EXPECT_EQ(rep.classification, Oscillation::finite_phase);
    EXPECT_NEAR(rep.total_phase, 0.98, 0.01);
}

TEST(OscillationClassify, NamesAreKebabCase) {
    EXPECT_EQ(to_string(Oscillation::finite_phase), "finite-phase");
    EXPECT_EQ(to_string(Oscillation::real_nonoscillatory), "real-nonoscillatory");
}

TEST(RabResidual, ClosedForms) {
    const Grid g1 = Grid::with_step(1.0, 50.0, 1e-3);
    std::vector<double> w1(g1.size());
    for (std::size_t k = 0; k < g1.size(); ++k) w1[k] = g1.x(k) / std::sqrt(2.0);
    EXPECT_LT(rab_residual(g1, w1, ContinuumPotential::power(-1.0, -4.0)).residual, 1e-6);

    const Grid g2 = Grid::with_step(0.0, 10.0, 1e-3);
    std::vector<double> w2(g2.size(), 1.0 / std::sqrt(2.0));
    EXPECT_LT(rab_residual(g2, w2, ContinuumPotential::constant(-1.0)).residual, 1e-10);
}

TEST(RabResidual, DetectsWrongAmplitude) {
    const Grid g = Grid::with_step(0.0, 10.0, 1e-3);
    std::vector<double> w(g.size(), 0.8);
    EXPECT_GT(rab_residual(g, w, ContinuumPotential::constant(-1.0)).residual, 0.1);
}
