// One line per acceptance criterion; exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bohl/agmon.hpp"
#include "bohl/bohl_transform.hpp"
#include "bohl/continuum_darboux.hpp"
#include "bohl/lattice.hpp"
#include "bohl/lattice_darboux.hpp"
#include "bohl/oracles.hpp"
#include "bohl/oscillation.hpp"

using namespace bohl;

namespace {

struct Outcome {
    bool evaluated = false;
    bool ok = false;
    std::string what;
};

Outcome outcomes[11];

void report(int id, bool ok, const std::string& what) { outcomes[id] = {true, ok, what}; }

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

struct Instance {
    LatticePotential v;
    GreenMatrix g;
    DiagonalSequence z;
};

std::vector<Instance> random_instances() {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> dist(0.5, 5.0);
    std::vector<Instance> out;
    for (int t = 0; t < 100; ++t) {
        std::vector<double> vals(60);
        for (double& x : vals) x = dist(rng);
        LatticePotential v(LatticeWindow(0, 59), vals);
        const PositiveBasis b = positive_basis(v);
        GreenMatrix g = build_green_matrix(b.minus, b.plus);
        DiagonalSequence z = diagonal_sequence(g);
        out.push_back({std::move(v), std::move(g), std::move(z)});
    }
    return out;
}

// Green matrix of the decaying/growing pair r^{-n}, r^{n} for V = c.
GreenMatrix exponential_green(double c, long hi) {
    const double r = (2.0 + c + std::sqrt(c * (c + 4.0))) / 2.0;
    const LatticeWindow w(0, hi);
    LatticeSolution dec(w, cplx{});
    LatticeSolution inc(w, cplx{});
    for (long n = 0; n <= hi; ++n) {
        dec[n] = std::pow(r, -static_cast<double>(n));
        inc[n] = std::pow(r, static_cast<double>(n));
    }
    return build_green_matrix(dec, inc);
}

void criteria_1_to_3_and_5(const std::vector<Instance>& inst) {
    double round_trip = 0.0;
    double gtov = 0.0;
    double product = 0.0;
    double oracle = 0.0;
    double darboux = 0.0;
    double first_order = 0.0;
    for (const Instance& in : inst) {
        const RealSequence vz = potential_from_diagonal(in.z);
        for (long n = 1; n < 59; ++n) round_trip = std::max(round_trip, std::abs(vz[n] - in.v[n]));
        gtov = std::max(gtov, max_abs_finite(gtov_residual(in.g, in.v).values()));

        const SFactorSequence s = s_factor(in.z);
        const GreenMatrix o = oracles::green_by_inversion(in.v);
        for (long m = 0; m <= 59; ++m)
            for (long n = 0; n <= 59; ++n) {
                product = std::max(product, std::abs(green_product(in.z, s, m, n) - in.g(m, n)));
                if (m > 0 && m < 59 && n > 0 && n < 59)
                    oracle = std::max(oracle, std::abs(in.g(m, n) - o(m, n)));
            }

        for (long k = 0; k <= 59; ++k) {
            ComplexSequence e(in.v.window(), cplx{});
            e[k] = 1.0;
            darboux = std::max(darboux, darboux_discrete_residual(in.z, in.v, e));
        }
        first_order = std::max(first_order, first_order_residual(darboux_discrete_q(in.z),
                                                                 bohl_reconstruct(in.z, 0).plus));
    }
    report(1, round_trip < 1e-8, "discrete round-trip: max |V_z - V| = " + num(round_trip) + " < 1e-8");

    double closed = 0.0;
    for (const auto& [c, expected] : {std::pair{1.0, 0.4472135954999579}, {2.0, 0.2886751345948129}}) {
        const GreenMatrix g = exponential_green(c, 20);
        for (long n = 0; n <= 20; ++n) closed = std::max(closed, std::abs(g(n, n) - expected));
        gtov = std::max(gtov, max_abs_finite(gtov_residual(g, constant_potential({0, 20}, c)).values()));
    }
    report(2, gtov < 1e-8 && closed < 1e-12,
           "GtoV residual " + num(gtov) + " < 1e-8; closed forms c=1,2 off by " + num(closed) +
               " < 1e-12");
    report(3, product < 1e-9 && oracle < 1e-8,
           "Green product " + num(product) + " < 1e-9; oracle inversion " + num(oracle) + " < 1e-8");
    report(5, darboux < 1e-9 && first_order < 1e-10,
           "discrete Darboux on unit vectors " + num(darboux) + " < 1e-9; first-order " +
               num(first_order) + " < 1e-10");
}

void criterion_4() {
    const auto v = constant_potential({0, 20}, 2.0);
    const AgmonReport rep = agmon_bound_report(v, exponential_green(2.0, 20), 1.0);
    bool bounds = rep.all_pass() && std::abs(rep.k_a - 1.8685171) < 1e-7;
    for (const AgmonBoundRecord& r : rep.records)
        bounds = bounds && std::abs(r.g_nn - 0.2886751) < 1e-7 && std::abs(r.g_lower - 0.25) < 1e-15 &&
                 std::abs(r.g_upper - 0.4671293) < 1e-7;
    double dist = 0.0;
    for (const auto& [c, ln_r] : {std::pair{1.0, 0.9624236501192069}, {2.0, 1.3169578969248166},
                                  {5.0, 1.9248473002384139}}) {
        const auto vc = constant_potential({0, 30}, c);
        for (long m = 0; m < 30; ++m)
            dist = std::max(dist, std::abs(agmon_distance(vc, m, m + 1, AgmonVariant::b, 0.5 * c).value - ln_r));
    }
    report(4, bounds && dist < 1e-9,
           "Agmon bounds V=2, C=1: 0.25 <= G_nn <= 0.4671293, K_A = 1.8685171; variant b per step "
           "off ln r by " + num(dist) + " < 1e-9");
}

DiagonalFunction unit_diagonal(const Grid& g) {
    const auto v = ContinuumPotential::constant(1.0);
    const double a = g.a();
    return diagonal_function(integrate_sle(v, g, std::exp(-a), -std::exp(-a)),
                             integrate_sle(v, g, 0.5 * std::exp(a), 0.5 * std::exp(a)));
}

DiagonalFunction linear_diagonal(const Grid& g) {
    const PositivePair p = positive_pair(ContinuumPotential::affine(1.0, 0.0), g);
    return diagonal_function(p.recessive, p.dominant);
}

void criterion_6() {
    const Grid g1 = Grid::with_step(-3.0, 3.0, 1e-3);
    const DiagonalFunction z1 = unit_diagonal(g1);
    const double j1 = diagonal_equation_residual(z1, ContinuumPotential::constant(1.0));
    double zdev = 0.0;
    for (const cplx& z : z1.z) zdev = std::max(zdev, std::abs(z - 0.7071068));
    const Grid g2 = Grid::with_step(1.0, 5.0, 1e-3);
    const double j2 = diagonal_equation_residual(linear_diagonal(g2), ContinuumPotential::affine(1.0, 0.0));

    double green = 0.0;
    for (double x = -2.5; x <= 2.5; x += 0.25)
        for (double y = -2.5; y <= 2.5; y += 0.3)
            green = std::max(green, std::abs(green_function(z1, x, y) - 0.5 * std::exp(-std::abs(x - y))));
    double jump = 0.0;
    for (double y : {-1.0, 0.0, 0.7}) jump = std::max(jump, std::abs(green_derivative_jump(z1, y) + 1.0));

    report(6, j1 < 1e-8 && zdev < 1e-7 && j2 < 1e-5 && green < 1e-6 && jump <= 5.0 * g1.step(),
           "J[Z] V=1 " + num(j1) + " < 1e-8 (Z = 0.7071068), V=x " + num(j2) +
               " < 1e-5; Green " + num(green) + " < 1e-6; jump -1 within " + num(jump) + " <= 5h");
}

void criterion_7() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> kd(0.5, 3.0);
    std::uniform_real_distribution<double> xd(0.3, 3.7);
    const Grid g = Grid::with_step(0.0, 4.0, 1e-3);
    double min_mod = 1e300;
    double identity = 0.0;
    for (int t = 0; t < 20; ++t) {
        const double k = kd(rng);
        const auto v = ContinuumPotential::constant(-k * k);
        const auto nc = nonvanishing_combination(integrate_sle(v, g, 1.0, 0.0),
                                                 integrate_sle(v, g, 0.0, 1.0), xd(rng));
        min_mod = std::min(min_mod, nc.min_modulus);
        identity = std::max(identity, std::abs(nc.wronskian_im_re - nc.identity_value));
    }
    report(7, min_mod > 0.0 && identity < 1e-8,
           "nonvanishing combinations: min |u| = " + num(min_mod) + " > 0; W[Im u, Re u] identity " +
               num(identity) + " < 1e-8");
}

void criterion_8() {
    const auto v1 = ContinuumPotential::constant(1.0);
    const PositivePair p = positive_pair(v1, Grid::with_step(0.0, 10.0, 1e-3));
    const auto c1 = oscillation_classify(special_diagonal(p.recessive, p.dominant).z).classification;

    const Grid gm = Grid::with_step(0.0, 50.0, 1e-3);
    const auto um = integrate_sle(ContinuumPotential::constant(-1.0), gm, 1.0, cplx(0.0, 1.0));
    const auto c2 = oscillation_classify(special_diagonal(um).z).classification;

    const Grid gq = Grid::with_step(1.0, 50.0, 1e-3);
    const cplx e = std::exp(cplx(0.0, 1.0));
    const auto uq = integrate_sle(ContinuumPotential::power(-1.0, -4.0), gq, e, e * cplx(1.0, -1.0));
    const auto r3 = oscillation_classify(special_diagonal(uq).z);

    report(8, c1 == Oscillation::real_nonoscillatory && c2 == Oscillation::infinite_phase &&
                  r3.classification == Oscillation::finite_phase && std::abs(r3.total_phase - 0.98) <= 0.01,
           "classifier: V=1 " + std::string(to_string(c1)) + ", V=-1 " + std::string(to_string(c2)) +
               ", V=-x^-4 " + std::string(to_string(r3.classification)) + " with phase " +
               num(r3.total_phase));
}

void criterion_9() {
    const Grid g1 = Grid::with_step(1.0, 50.0, 1e-3);
    std::vector<double> w1(g1.size());
    for (std::size_t k = 0; k < g1.size(); ++k) w1[k] = g1.x(k) / std::numbers::sqrt2;
    const double r1 = rab_residual(g1, w1, ContinuumPotential::power(-1.0, -4.0)).residual;
    const Grid g2 = Grid::with_step(0.0, 10.0, 1e-3);
    const double r2 = rab_residual(g2, std::vector<double>(g2.size(), 1.0 / std::numbers::sqrt2),
                                   ContinuumPotential::constant(-1.0)).residual;
    report(9, r1 < 1e-6 && r2 < 1e-10,
           "Rab residual: w = x/sqrt2 " + num(r1) + " < 1e-6; w = 1/sqrt2 " + num(r2) + " < 1e-10");
}

void criterion_10() {
    const Grid g1 = Grid::with_step(-4.0, 4.0, 1e-3);
    const double r1 = darboux_factorization_residual(unit_diagonal(g1), ContinuumPotential::constant(1.0),
                                                     bump_function(g1, 0.0, 3.0)).max();
    const Grid g2 = Grid::with_step(1.0, 5.0, 1e-3);
    const double r2 = darboux_factorization_residual(linear_diagonal(g2), ContinuumPotential::affine(1.0, 0.0),
                                                     bump_function(g2, 3.0, 1.99)).max();
    report(10, r1 < 1e-4 && r2 < 1e-3,
           "continuum Darboux on bumps at h = 1e-3: V=1 " + num(r1) + " < 1e-4; V=x " + num(r2) +
               " < 1e-3");
}

template <class F>
void guarded(std::initializer_list<int> ids, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        for (int id : ids) report(id, false, std::string("threw: ") + e.what());
    }
}

} // namespace

int main() {
    guarded({1, 2, 3, 5}, [] { criteria_1_to_3_and_5(random_instances()); });
    guarded({4}, criterion_4);
    guarded({6}, criterion_6);
    guarded({7}, criterion_7);
    guarded({8}, criterion_8);
    guarded({9}, criterion_9);
    guarded({10}, criterion_10);
    int failures = 0;
    for (int id = 1; id <= 10; ++id) {
        const Outcome& o = outcomes[id];
        const bool ok = o.evaluated && o.ok;
        std::printf("criterion %2d %s  %s\n", id, ok ? "PASS" : "FAIL",
                    o.evaluated ? o.what.c_str() : "not evaluated");
        if (!ok) ++failures;
    }
    std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria FAIL");
    return failures == 0 ? 0 : 1;
}
