#pragma once

// Comparison of the Green diagonal with 1/(V_n + 2) and the Agmon-type
// lattice distances that bound the decay of the subdominant solution.

#include <vector>

#include "bohl/lattice.hpp"

namespace bohl {

/// K_A = sqrt(1 + (2/(C(C+2)))^2) + 2/(C(C+2)), for C > 0.
[[nodiscard]] double agmon_constant(double c);

/// The cruder constant sqrt(1 + 4/C^2); always larger than agmon_constant(C).
[[nodiscard]] double agmon_constant_simple(double c);

struct AgmonBoundRecord {
    long n;
    double g_nn;
    double g_lower;   // 1/(V_n + 2)
    double g_upper;   // K_A/(V_n + 2)
    bool g_ok;
    double s_n;
    double s_lower;   // (sqrt(P) + sqrt(4 + P)) / (2 K_A), P = (V_n+2)(V_{n-1}+2)
    double s_upper;   // (sqrt(P) + sqrt(4 + P)) / 2
    bool s_ok;
};

struct AgmonReport {
    double c;
    double k_a;
    std::vector<AgmonBoundRecord> records;  // interior indices, ascending

    [[nodiscard]] bool all_pass() const;
};

/// Checks both two-sided bounds at every interior index. The liminf
/// hypothesis is taken as min over the window: every V_n must exceed C > 0.
[[nodiscard]] AgmonReport agmon_bound_report(const LatticePotential& v, const GreenMatrix& g,
                                             double c);

enum class AgmonVariant { a, b };

struct AgmonDistance {
    double value;
    // Variant b only: heuristic check that n |V_{n+1} - V_n| looks summable.
    // The terms are fitted to k^{-p} on a log-log scale; p < 1.05 warns.
    bool summability_warning = false;
    double decay_exponent = kNaN;
};

/// Variant a: sum_{l=m+1}^{n} (ln(V_l + 2) - ln K_A).
/// Variant b: sum_{l=m+1}^{n} ln((V_l + 2 + sqrt(V_l (V_l + 4))) / 2).
[[nodiscard]] AgmonDistance agmon_distance(const LatticePotential& v, long m, long n,
                                           AgmonVariant variant, double c);

} // namespace bohl
