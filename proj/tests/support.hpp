#pragma once

// Shared generators for the property-style tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bohl/lattice.hpp"

namespace bohl::testing {

inline LatticePotential random_potential(std::mt19937_64& rng, long lo, long hi, double vmin,
                                         double vmax) {
    std::uniform_real_distribution<double> dist(vmin, vmax);
    LatticeWindow w(lo, hi);
    std::vector<double> v(w.size());
    for (double& x : v) x = dist(rng);
    return LatticePotential(w, std::move(v));
}

inline ComplexSequence unit_vector(const LatticeWindow& w, long k) {
    ComplexSequence e(w, cplx{});
    e[k] = 1.0;
    return e;
}

// Growth ratio r of u_n = r^n for the constant potential c > 0.
inline double growth_ratio(double c) { return (2.0 + c + std::sqrt(c * (c + 4.0))) / 2.0; }

} // namespace bohl::testing
