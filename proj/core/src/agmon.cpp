#include "bohl/agmon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bohl {

namespace {

void require_cutoff(double c) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw Error(ErrorKind::invalid_input, "Agmon cutoff C must be a positive number");
}

// Least-squares slope of ln t_k against ln k over the nonzero terms.
double fitted_decay_exponent(const LatticePotential& v) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (long k = v.lo(); k < v.hi(); ++k) {
        const double t = std::abs(static_cast<double>(k)) * std::abs(v[k + 1] - v[k]);
        if (t > 0.0 && k != 0) {
            xs.push_back(std::log(std::abs(static_cast<double>(k))));
            ys.push_back(std::log(t));
        }
    }
    if (xs.size() < 3) return kNaN;
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) return kNaN;
    return -(n * sxy - sx * sy) / denom;
}

} // namespace

double agmon_constant(double c) {
    require_cutoff(c);
    const double t = 2.0 / (c * (c + 2.0));
    const double k = std::sqrt(1.0 + t * t) + t;
    if (!(k > 1.0) || !(k < agmon_constant_simple(c)))
        throw Error(ErrorKind::consistency, "agmon_constant: 1 < K_A < sqrt(1 + 4/C^2) violated");
    return k;
}

double agmon_constant_simple(double c) {
    require_cutoff(c);
    return std::sqrt(1.0 + 4.0 / (c * c));
}

bool AgmonReport::all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const AgmonBoundRecord& r) { return r.g_ok && r.s_ok; });
}

AgmonReport agmon_bound_report(const LatticePotential& v, const GreenMatrix& g, double c) {
    if (!(v.window() == g.window()))
        throw Error(ErrorKind::invalid_input, "agmon_bound_report: windows differ");
    require_cutoff(c);
    v.require_above(c, "agmon_bound_report");
    const double k_a = agmon_constant(c);
    const ComplexSequence d = g.diagonal();
    for (long n = d.lo(); n <= d.hi(); ++n)
        if (!(d[n].real() > 0.0) || std::abs(d[n].imag()) > 1e-14 * d[n].real())
            throw Error(ErrorKind::hypothesis_not_met,
                        "agmon_bound_report: needs a positive Green matrix");

    AgmonReport report{c, k_a, {}};
    for (long n = v.lo() + 1; n < v.hi(); ++n) {
        AgmonBoundRecord r{};
        r.n = n;
        r.g_nn = d[n].real();
        r.g_lower = 1.0 / (v[n] + 2.0);
        r.g_upper = k_a / (v[n] + 2.0);
        r.g_ok = r.g_lower <= r.g_nn && r.g_nn <= r.g_upper;

        const double p = r.g_nn * d[n - 1].real();
        r.s_n = (1.0 + std::sqrt(1.0 + 4.0 * p)) / (2.0 * std::sqrt(p));
        const double big_p = (v[n] + 2.0) * (v[n - 1] + 2.0);
        const double core = std::sqrt(big_p) + std::sqrt(4.0 + big_p);
        r.s_lower = core / (2.0 * k_a);
        r.s_upper = core / 2.0;
        r.s_ok = r.s_lower <= r.s_n && r.s_n <= r.s_upper;
        report.records.push_back(r);
    }
    return report;
}

AgmonDistance agmon_distance(const LatticePotential& v, long m, long n, AgmonVariant variant,
                             double c) {
    const LatticeWindow& win = v.window();
    if (!win.contains(m) || !win.contains(n))
        throw Error(ErrorKind::invalid_input, "agmon_distance: m or n outside window");
    if (n < m) throw Error(ErrorKind::invalid_input, "agmon_distance: requires n >= m");
    require_cutoff(c);
    v.require_above(c, "agmon_distance");

    AgmonDistance out{0.0};
    if (variant == AgmonVariant::a) {
        const double log_k = std::log(agmon_constant(c));
        for (long l = m + 1; l <= n; ++l) out.value += std::log(v[l] + 2.0) - log_k;
    } else {
        for (long l = m + 1; l <= n; ++l)
            out.value += std::log((v[l] + 2.0 + std::sqrt(v[l] * (v[l] + 4.0))) / 2.0);
        out.decay_exponent = fitted_decay_exponent(v);
        out.summability_warning = std::isfinite(out.decay_exponent) && out.decay_exponent < 1.05;
    }
    return out;
}

} // namespace bohl
