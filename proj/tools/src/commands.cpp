#include "bohl_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bohl/agmon.hpp"
#include "bohl/bohl_transform.hpp"
#include "bohl/continuum_darboux.hpp"
#include "bohl/lattice.hpp"
#include "bohl/lattice_darboux.hpp"
#include "bohl/oracles.hpp"
#include "bohl/oscillation.hpp"

namespace bohl::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Checker {
public:
    Checker(Report& r, const Options& o) : report_(r), override_(o.tolerance) {}
    void operator()(std::string name, double residual, double tolerance) {
        report_.check(std::move(name), residual, override_.value_or(tolerance));
    }

private:
    Report& report_;
    std::optional<double> override_;
};

template <class Seq>
std::vector<double> real_column(const Seq& s) {
    std::vector<double> out;
    for (const auto& x : s.values()) out.push_back(std::real(x));
    return out;
}

std::vector<double> real_part(const std::vector<cplx>& v) {
    std::vector<double> out;
    for (const cplx& x : v) out.push_back(x.real());
    return out;
}

std::vector<double> imag_part(const std::vector<cplx>& v) {
    std::vector<double> out;
    for (const cplx& x : v) out.push_back(x.imag());
    return out;
}

// Stride that keeps O(N^2) sweeps near 100 x 100 evaluations.
long sweep_stride(const LatticeWindow& w) {
    return std::max<long>(1, static_cast<long>(w.size()) / 100);
}

struct LatticePipeline {
    LatticePotential v;
    PositiveBasis basis;
    GreenMatrix g;
    DiagonalSequence z;
};

LatticePipeline lattice_pipeline(const PotentialSpec& spec) {
    LatticePotential v = spec.lattice();
    PositiveBasis basis = positive_basis(v);
    GreenMatrix g = build_green_matrix(basis.minus, basis.plus);
    DiagonalSequence z = diagonal_sequence(g);
    return {std::move(v), std::move(basis), std::move(g), std::move(z)};
}

double agmon_cutoff(const PotentialSpec& spec, const LatticePotential& v) {
    if (spec.c) return *spec.c;
    const double vmin = v.min();
    if (!(vmin > 0.0))
        throw Error(ErrorKind::hypothesis_not_met,
                    "Agmon bounds need V > 0 on the window (min V = " + format_number(vmin) + ")");
    return 0.5 * vmin;
}

long checked_index(std::optional<long> value, long fallback, const LatticeWindow& w,
                   const char* field) {
    const long n = value.value_or(fallback);
    if (!w.contains(n))
        throw Error(ErrorKind::invalid_input,
                    std::string("spec: ") + field + ": index " + std::to_string(n) +
                        " outside the window");
    return n;
}

Report discrete_reconstruct(const PotentialSpec& spec, const Options& opt) {
    Report r;
    Checker check(r, opt);
    const auto p = lattice_pipeline(spec);
    const LatticeWindow& w = p.v.window();
    const long anchor = checked_index(spec.anchor, w.lo(), w, "anchor");
    const SFactorSequence s = s_factor(p.z);
    const BohlBasisDiscrete phi = bohl_reconstruct(p.z, anchor);
    const RealSequence vz = potential_from_diagonal(p.z);

    check("basis-wronskian", std::abs(wronskian_discrete(p.basis.minus, p.basis.plus) - 1.0), 1e-10);

    double round_trip = 0.0;
    for (long n = w.lo() + 1; n < w.hi(); ++n)
        round_trip = std::max(round_trip, std::abs(vz[n] - p.v[n]));
    check("potential-round-trip", round_trip, 1e-8);

    double product = 0.0;
    const long stride = sweep_stride(w);
    for (long m = w.lo(); m <= w.hi(); m += stride)
        for (long n = w.lo(); n <= w.hi(); n += stride)
            product = std::max(product, std::abs(green_product(p.z, s, m, n) - p.g(m, n)));
    check("green-product", product, 1e-9);

    check("bohl-basis-recurrence",
          std::max(lattice_residual(p.v, phi.plus), lattice_residual(p.v, phi.minus)), 1e-9);
    check("bohl-basis-wronskian", std::abs(wronskian_discrete(phi.minus, phi.plus) - 1.0), 1e-9);

    r.add("n_lo", w.lo());
    r.add("n_hi", w.hi());
    r.add("anchor", anchor);
    r.add("v_min", p.v.min());
    const std::vector<double> zs = real_column(p.z.z);
    r.add("z_min", *std::min_element(zs.begin(), zs.end()));
    r.add("z_positive", p.z.positive);

    std::vector<double> idx;
    for (long n = w.lo(); n <= w.hi(); ++n) idx.push_back(static_cast<double>(n));
    r.columns = {{"n", idx},
                 {"V", {p.v.values().begin(), p.v.values().end()}},
                 {"z", zs},
                 {"S", real_column(s.s)},
                 {"phi_plus", real_column(phi.plus)},
                 {"phi_minus", real_column(phi.minus)},
                 {"V_from_z", {vz.values().begin(), vz.values().end()}}};
    return r;
}

Report discrete_verify(const PotentialSpec& spec, const Options& opt) {
    const LatticePotential v0 = spec.lattice();
    if (!(v0.min() > 0.0))
        throw Error(ErrorKind::hypothesis_not_met,
                    "discrete verify needs V > 0 on the window (min V = " + format_number(v0.min()) +
                        ")");
    Report r;
    Checker check(r, opt);
    const auto p = lattice_pipeline(spec);
    const LatticeWindow& w = p.v.window();
    const double c = agmon_cutoff(spec, p.v);

    check("gtov-residual", max_abs_finite(gtov_residual(p.g, p.v).values()), 1e-8);

    const GreenMatrix oracle = oracles::green_by_inversion(p.v);
    double diff = 0.0;
    for (long m = w.lo(); m <= w.hi(); ++m)
        for (long n = w.lo(); n <= w.hi(); ++n) diff = std::max(diff, std::abs(p.g(m, n) - oracle(m, n)));
    check("green-oracle", diff, 1e-8);

    const AgmonReport bounds = agmon_bound_report(p.v, p.g, c);
    double g_excess = 0.0;
    double s_excess = 0.0;
    for (const AgmonBoundRecord& b : bounds.records) {
        g_excess = std::max({g_excess, b.g_lower - b.g_nn, b.g_nn - b.g_upper});
        s_excess = std::max({s_excess, b.s_lower - b.s_n, b.s_n - b.s_upper});
    }
    check("agmon-green-bounds", g_excess, 0.0);
    check("agmon-s-bounds", s_excess, 0.0);

    double darboux = 0.0;
    const long stride = sweep_stride(w);
    for (long k = w.lo(); k <= w.hi(); k += stride) {
        ComplexSequence e(w, cplx{});
        e[k] = 1.0;
        darboux = std::max(darboux, darboux_discrete_residual(p.z, p.v, e));
    }
    check("darboux-factorization", darboux, 1e-9);

    const ComplexSequence q = darboux_discrete_q(p.z);
    const BohlBasisDiscrete phi = bohl_reconstruct(p.z, w.lo());
    check("darboux-first-order", first_order_residual(q, phi.plus), 1e-10);

    r.add("C", c);
    r.add("K_A", bounds.k_a);
    r.add("K_A_simple", agmon_constant_simple(c));

    std::vector<double> idx, g_nn, lo, hi, sn, slo, shi;
    for (const AgmonBoundRecord& b : bounds.records) {
        idx.push_back(static_cast<double>(b.n));
        g_nn.push_back(b.g_nn);
        lo.push_back(b.g_lower);
        hi.push_back(b.g_upper);
        sn.push_back(b.s_n);
        slo.push_back(b.s_lower);
        shi.push_back(b.s_upper);
    }
    r.columns = {{"n", idx},       {"G_nn", g_nn}, {"G_lower", lo},  {"G_upper", hi},
                 {"S", sn},        {"S_lower", slo}, {"S_upper", shi}};
    return r;
}

Report discrete_agmon(const PotentialSpec& spec, const Options& opt) {
    Report r;
    Checker check(r, opt);
    const auto p = lattice_pipeline(spec);
    const LatticeWindow& w = p.v.window();
    const double c = agmon_cutoff(spec, p.v);
    const long m = checked_index(spec.m, w.lo(), w, "m");
    const long n = checked_index(spec.n, w.hi(), w, "n");
    if (n < m) throw Error(ErrorKind::invalid_input, "spec: n: must be >= m");

    const double k_a = agmon_constant(c);
    const AgmonDistance da = agmon_distance(p.v, m, n, AgmonVariant::a, c);
    const AgmonDistance db = agmon_distance(p.v, m, n, AgmonVariant::b, c);
    const BohlBasisDiscrete phi = bohl_reconstruct(p.z, m);

    // exp(d_a(m, k)) phi^-_k <= sqrt(K_A) phi^-_m, tested in logarithms.
    double excess = 0.0;
    std::vector<double> idx, cum_a, cum_b, log_phi;
    for (long k = m; k <= n; ++k) {
        const double dak = agmon_distance(p.v, m, k, AgmonVariant::a, c).value;
        const double dbk = agmon_distance(p.v, m, k, AgmonVariant::b, c).value;
        const double lp = std::log(phi.minus[k].real());
        excess = std::max(excess, lp - std::log(phi.minus[m].real()) + dak - 0.5 * std::log(k_a));
        idx.push_back(static_cast<double>(k));
        cum_a.push_back(dak);
        cum_b.push_back(dbk);
        log_phi.push_back(lp);
    }
    check("variant-a-decay-bound", excess, 1e-9);

    r.add("C", c);
    r.add("K_A", k_a);
    r.add("K_A_simple", agmon_constant_simple(c));
    r.add("m", m);
    r.add("n", n);
    r.add("distance_a", da.value);
    r.add("distance_b", db.value);
    r.add("observed_decay", std::log(phi.minus[m].real() / phi.minus[n].real()));
    r.add("summability_warning", db.summability_warning);
    r.add("decay_exponent", db.decay_exponent);
    r.columns = {{"n", idx}, {"distance_a", cum_a}, {"distance_b", cum_b}, {"log_phi_minus", log_phi}};
    return r;
}

struct ContinuumSetup {
    Grid grid;
    DiagonalFunction z;
    std::string branch;
    std::optional<SpecialAlpha> alpha;
};

ContinuumSetup continuum_setup(const PotentialSpec& spec, const ContinuumPotential& v) {
    const Grid grid = spec.grid();
    if (!spec.seed && v.min_on(grid) > 0.0) {
        const PositivePair pair = positive_pair(v, grid);
        return {grid, diagonal_function(pair.recessive, pair.dominant), "positive-pair", {}};
    }
    const Seed seed = spec.seed.value_or(Seed{1.0, cplx(0.0, 1.0)});
    const GridSolution u = integrate_sle(v, grid, seed.u, seed.du);
    SpecialDiagonal sd = special_diagonal(u);
    return {grid, std::move(sd.z), "special-alpha", sd.alpha};
}

// Centered differences applied to solutions: error ~ h^2 u''''/12 ~ h^2 V^2 u.
double stencil_tolerance(const Grid& g, const ContinuumPotential& v) {
    double vmax = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) vmax = std::max(vmax, std::abs(v(g.x(k))));
    const double h = g.step();
    return std::max(1e-6, h * h * (1.0 + vmax) * (1.0 + vmax));
}

void add_setup(Report& r, const ContinuumSetup& s) {
    r.add("a", s.grid.a());
    r.add("b", s.grid.b());
    r.add("h", s.grid.step());
    r.add("points", static_cast<long>(s.grid.size()));
    r.add("branch", s.branch);
    if (s.alpha) {
        r.add("alpha", std::vector<double>{s.alpha->alpha.real(), s.alpha->alpha.imag()});
        r.add("alpha_arg_quarter_pi", static_cast<long>(s.alpha->k));
    }
}

double resolve_x0(const PotentialSpec& spec, const Grid& g) {
    const double x0 = spec.x0.value_or(0.5 * (g.a() + g.b()));
    if (!g.contains(x0))
        throw Error(ErrorKind::invalid_input, "spec: x0: outside the interval");
    return x0;
}

Report continuum_analyze(const PotentialSpec& spec, const Options& opt) {
    Report r;
    Checker check(r, opt);
    const ContinuumPotential v = spec.continuum();
    const ContinuumSetup s = continuum_setup(spec, v);
    const double tol = stencil_tolerance(s.grid, v);
    const double x0 = resolve_x0(spec, s.grid);

    check("diagonal-equation", diagonal_equation_residual(s.z, v), tol);
    const BohlBasisContinuum basis = bohl_basis(s.z, v, x0, kInf);
    check("bohl-wronskian", std::abs(basis.wronskian - 1.0), 1e-8);
    check("bohl-solutions", std::max(basis.residual_plus, basis.residual_minus), tol);

    double diag = 0.0;
    const std::size_t stride = std::max<std::size_t>(1, s.grid.size() / 200);
    for (std::size_t k = 0; k < s.grid.size(); k += stride)
        diag = std::max(diag, std::abs(green_function(s.z, s.grid.x(k), s.grid.x(k)) - s.z.z2[k]) /
                                  std::max(1.0, std::abs(s.z.z2[k])));
    check("green-diagonal", diag, 1e-12);

    const double y = s.grid.x(s.grid.nearest(x0 > s.grid.a() && x0 < s.grid.b()
                                                 ? x0
                                                 : 0.5 * (s.grid.a() + s.grid.b())));
    const cplx jump = green_derivative_jump(s.z, y);
    check("green-jump", std::abs(jump + 1.0), 5.0 * s.grid.step());

    add_setup(r, s);
    r.add("x0", x0);
    r.add("green_jump", std::vector<double>{jump.real(), jump.imag()});
    r.add("z_at_a", std::vector<double>{s.z.z.front().real(), s.z.z.front().imag()});
    r.add("z_at_b", std::vector<double>{s.z.z.back().real(), s.z.z.back().imag()});

    std::vector<double> xs, vs;
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        xs.push_back(s.grid.x(k));
        vs.push_back(v(s.grid.x(k)));
    }
    r.columns = {{"x", xs},
                 {"V", vs},
                 {"Z_re", real_part(s.z.z)},
                 {"Z_im", imag_part(s.z.z)},
                 {"phi_plus_re", real_part(basis.plus.u)},
                 {"phi_minus_re", real_part(basis.minus.u)}};
    return r;
}

Report continuum_classify(const PotentialSpec& spec, const Options& opt) {
    Report r;
    Checker check(r, opt);
    const ContinuumPotential v = spec.continuum();
    const ContinuumSetup s = continuum_setup(spec, v);
    check("diagonal-equation", diagonal_equation_residual(s.z, v), stencil_tolerance(s.grid, v));
    const OscillationReport osc = oscillation_classify(s.z);
    check("classification-determined", osc.classification == Oscillation::indeterminate ? 1.0 : 0.0,
          0.0);

    add_setup(r, s);
    r.add("classification", std::string(to_string(osc.classification)));
    r.add("total_phase", osc.total_phase);
    r.add("tail_increments", osc.increments);
    r.add("tail_ratios", osc.ratios);

    std::vector<double> xs, rate, phase;
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        xs.push_back(s.grid.x(k));
        rate.push_back(1.0 / (2.0 * std::norm(s.z.z[k])));
        phase.push_back(std::abs(s.z.integral[k].imag()) > std::abs(s.z.integral[k].real())
                            ? s.z.integral[k].imag()
                            : s.z.integral[k].real());
    }
    r.columns = {{"x", xs}, {"inv_2absZ2", rate}, {"integral", phase}};
    return r;
}

Report continuum_darboux(const PotentialSpec& spec, const Options& opt) {
    Report r;
    Checker check(r, opt);
    const ContinuumPotential v = spec.continuum();
    const ContinuumSetup s = continuum_setup(spec, v);
    const Grid& g = s.grid;
    const double center = spec.bump.center.value_or(0.5 * (g.a() + g.b()));
    const double half = spec.bump.half_width.value_or(
        0.5 * (g.b() - g.a()) - static_cast<double>(kDarbouxPadding + 1) * g.step());
    if (!(half > 0.0)) throw Error(ErrorKind::invalid_input, "spec: bump.half_width: must be positive");
    const std::vector<cplx> f = bump_function(g, center, half);

    check("diagonal-equation", diagonal_equation_residual(s.z, v), stencil_tolerance(g, v));
    const DarbouxResidual res = darboux_factorization_residual(s.z, v, f);
    check("factorization-plus", res.plus, 1e-3);
    check("factorization-minus", res.minus, 1e-3);

    const BohlBasisContinuum basis = bohl_basis(s.z, v, resolve_x0(spec, g), kInf);
    const auto dp = darboux_apply(s.z, Sign::plus, basis.plus.u);
    const auto dm = darboux_apply(s.z, Sign::minus, basis.minus.u);
    double ann = 0.0;
    for (std::size_t k = 1; k + 1 < g.size(); ++k)
        ann = std::max({ann, std::abs(dp[k]) / std::abs(basis.plus.u[k]),
                        std::abs(dm[k]) / std::abs(basis.minus.u[k])});
    check("annihilation", ann, 1e-5);

    add_setup(r, s);
    r.add("bump_center", center);
    r.add("bump_half_width", half);

    std::vector<double> xs;
    for (std::size_t k = 0; k < g.size(); ++k) xs.push_back(g.x(k));
    const auto fp = darboux_apply(s.z, Sign::plus, f);
    const auto fm = darboux_apply(s.z, Sign::minus, f);
    r.columns = {{"x", xs},
                 {"f", real_part(f)},
                 {"Dplus_f_re", real_part(fp)},
                 {"Dminus_f_re", real_part(fm)}};
    return r;
}

} // namespace

Report run_command(const std::string& domain, const std::string& subcommand,
                   const PotentialSpec& spec, const Options& options) {
    Report r;
    if (domain == "discrete") {
        if (subcommand == "reconstruct") r = discrete_reconstruct(spec, options);
        else if (subcommand == "verify") r = discrete_verify(spec, options);
        else if (subcommand == "agmon") r = discrete_agmon(spec, options);
        else throw Error(ErrorKind::invalid_input, "unknown discrete subcommand '" + subcommand + "'");
    } else if (domain == "continuum") {
        if (subcommand == "analyze") r = continuum_analyze(spec, options);
        else if (subcommand == "classify") r = continuum_classify(spec, options);
        else if (subcommand == "darboux") r = continuum_darboux(spec, options);
        else throw Error(ErrorKind::invalid_input, "unknown continuum subcommand '" + subcommand + "'");
    } else {
        throw Error(ErrorKind::invalid_input, "unknown domain '" + domain + "'");
    }
    r.command = domain + " " + subcommand;
    r.spec_echo = spec.echo;
    return r;
}

int exit_code(const Report& report) noexcept { return report.pass() ? 0 : 1; }

} // namespace bohl::cli
