#pragma once

// Potential specifications read from JSON spec files.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bohl/continuum.hpp"
#include "bohl/lattice.hpp"

namespace bohl::cli {

enum class PotentialKind { constant, affine, power, samples };

struct Seed {
    cplx u;
    cplx du;
};

struct Bump {
    std::optional<double> center;
    std::optional<double> half_width;
};

struct PotentialSpec {
    PotentialKind kind;
    double value = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    double scale = 1.0;
    double exponent = 1.0;
    std::vector<double> values;

    std::optional<std::pair<long, long>> window;
    std::optional<std::pair<double, double>> interval;
    double h = 1e-3;

    std::optional<double> c;
    std::optional<long> anchor;
    std::optional<long> m;
    std::optional<long> n;
    std::optional<double> x0;
    std::optional<Seed> seed;
    Bump bump;

    std::string echo;  // the document re-serialized in its original key order

    /// Errors name the missing field; a samples array must match the window.
    [[nodiscard]] LatticePotential lattice() const;
    [[nodiscard]] ContinuumPotential continuum() const;
    [[nodiscard]] Grid grid() const;
};

/// Throws Error(invalid_input) with a field path on any problem. A relative
/// "path" for samples is resolved against base_dir.
[[nodiscard]] PotentialSpec parse_spec(std::string_view text,
                                       const std::filesystem::path& base_dir = {});

[[nodiscard]] PotentialSpec load_spec(const std::filesystem::path& file);

} // namespace bohl::cli
