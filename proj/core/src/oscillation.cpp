#include "bohl/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <span>

namespace bohl {

std::string_view to_string(Oscillation c) noexcept {
    switch (c) {
    case Oscillation::real_nonoscillatory: return "real-nonoscillatory";
    case Oscillation::finite_phase: return "finite-phase";
    case Oscillation::infinite_phase: return "infinite-phase";
    case Oscillation::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

namespace {

// Running trapezoid integral of q on the grid, evaluated by linear
// interpolation at x.
double running_at(const Grid& grid, const std::vector<double>& running, double x) {
    const double t = std::clamp((x - grid.a()) / grid.step(), 0.0,
                                static_cast<double>(grid.size() - 1));
    const auto i = std::min(static_cast<std::size_t>(t), grid.size() - 2);
    const double frac = t - static_cast<double>(i);
    return (1.0 - frac) * running[i] + frac * running[i + 1];
}

} // namespace

OscillationReport oscillation_classify(const DiagonalFunction& z) {
    return oscillation_classify(z, {z.grid.a(), z.grid.b()});
}

OscillationReport oscillation_classify(const DiagonalFunction& z, Interval tail,
                                       const OscillationOptions& options) {
    const Grid& grid = z.grid;
    if (!(tail.a >= grid.a() && tail.b <= grid.b() && tail.b > tail.a))
        throw Error(ErrorKind::invalid_input, "oscillation_classify: tail must lie inside the grid");
    if (options.segments < options.late_ratios + 1 || options.late_ratios < 1)
        throw Error(ErrorKind::invalid_input, "oscillation_classify: too few segments");

    double z2_max = 0.0;
    double imag_max = 0.0;
    std::vector<double> q(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        z2_max = std::max(z2_max, std::abs(z.z2[k]));
        imag_max = std::max(imag_max, std::abs(z.z2[k].imag()));
        q[k] = 1.0 / (2.0 * std::abs(z.z2[k]));
    }
    std::vector<double> running(grid.size(), 0.0);
    for (std::size_t k = 1; k < grid.size(); ++k)
        running[k] = running[k - 1] + 0.5 * grid.step() * (q[k - 1] + q[k]);

    OscillationReport report{Oscillation::indeterminate, running.back(), {}, {}};
    if (imag_max <= options.real_tol * z2_max) {
        report.classification = Oscillation::real_nonoscillatory;
        return report;
    }

    const int segs = options.segments;
    const double unit = (tail.b - tail.a) / (std::exp2(segs) - 1.0);
    double left = tail.a;
    for (int j = 0; j < segs; ++j) {
        const double right = j + 1 == segs ? tail.b : left + unit * std::exp2(j);
        report.increments.push_back(running_at(grid, running, right) -
                                    running_at(grid, running, left));
        left = right;
    }
    for (std::size_t j = 0; j + 1 < report.increments.size(); ++j)
        report.ratios.push_back(report.increments[j + 1] / report.increments[j]);

    const auto late = std::span(report.ratios).last(static_cast<std::size_t>(options.late_ratios));
    const double last = report.increments.back();
    const bool shrinking = std::all_of(late.begin(), late.end(),
                                       [&](double r) { return r <= options.finite_ratio; });
    const bool growing = std::all_of(late.begin(), late.end(),
                                     [&](double r) { return r >= options.infinite_ratio; });
    if (last < options.increment_cutoff || shrinking)
        report.classification = Oscillation::finite_phase;
    else if (growing)
        report.classification = Oscillation::infinite_phase;
    return report;
}

RabReport rab_residual(const Grid& grid, const std::vector<double>& w, const ContinuumPotential& v) {
    if (w.size() != grid.size())
        throw Error(ErrorKind::invalid_input, "rab_residual: length does not match grid");
    for (double x : w)
        if (!(x > 0.0)) throw Error(ErrorKind::invalid_input, "rab_residual: w must stay positive");
    const double h = grid.step();
    RabReport out{0.0, 0.0};
    for (std::size_t k = 1; k + 1 < w.size(); ++k) {
        const double d2 = (w[k + 1] - 2.0 * w[k] + w[k - 1]) / (h * h);
        const double r = -d2 + v(grid.x(k)) * w[k] + 1.0 / (4.0 * w[k] * w[k] * w[k]);
        out.residual = std::max(out.residual, std::abs(r));
    }
    double mass = 0.0;
    for (double x : w) mass += x * x;
    out.l2_mass = std::sqrt(mass * h);
    return out;
}

} // namespace bohl
