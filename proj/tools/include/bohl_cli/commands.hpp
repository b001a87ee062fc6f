#pragma once

#include <optional>
#include <string>

#include "bohl_cli/report.hpp"
#include "bohl_cli/spec.hpp"

namespace bohl::cli {

struct Options {
    std::optional<double> tolerance;  // replaces every check tolerance
};

/// domain is "discrete" or "continuum". Throws Error on invalid input or
/// unmet hypotheses; check failures are recorded in the report.
[[nodiscard]] Report run_command(const std::string& domain, const std::string& subcommand,
                                 const PotentialSpec& spec, const Options& options);

/// 0 when every check passes, 1 otherwise.
[[nodiscard]] int exit_code(const Report& report) noexcept;

} // namespace bohl::cli
