#pragma once

// Oscillation test through integrability of 1/G(x,x) on tails, and the
// residual of the nonlinear equation -w'' + V w = -1/(4 w^3).

#include <string_view>
#include <vector>

#include "bohl/bohl_transform.hpp"

namespace bohl {

enum class Oscillation { real_nonoscillatory, finite_phase, infinite_phase, indeterminate };

[[nodiscard]] std::string_view to_string(Oscillation c) noexcept;

struct Interval {
    double a;
    double b;
};

struct OscillationReport {
    Oscillation classification;
    double total_phase;              // trapezoid ∫ 1/(2|Z|^2) over the whole grid
    std::vector<double> increments;  // phase gained on each doubling segment of the tail
    std::vector<double> ratios;      // increments[j+1] / increments[j]
};

struct OscillationOptions {
    int segments = 6;                 // doubling segments across the tail
    double increment_cutoff = 1e-6;   // last increment below this: converged
    double finite_ratio = 0.75;       // every late ratio <= this: converging
    double infinite_ratio = 1.5;      // every late ratio >= this: diverging
    int late_ratios = 3;
    double real_tol = 1e-10;          // |Im Z^2| <= real_tol max|Z^2|: real case
};

/// Classifies Z (normally from special_diagonal). The tail [a, b] is split
/// into segments whose lengths double; a converging phase integral shows
/// increments shrinking geometrically, a diverging one growing increments.
/// Borderline growth (ratios near 1) is reported as indeterminate.
[[nodiscard]] OscillationReport oscillation_classify(const DiagonalFunction& z, Interval tail,
                                                     const OscillationOptions& options = {});
[[nodiscard]] OscillationReport oscillation_classify(const DiagonalFunction& z);

struct RabReport {
    double residual;  // max over interior nodes of |-w'' + V w + 1/(4 w^3)|
    double l2_mass;   // sqrt(h sum w^2), an indicator only
};

[[nodiscard]] RabReport rab_residual(const Grid& grid, const std::vector<double>& w,
                                     const ContinuumPotential& v);

} // namespace bohl
