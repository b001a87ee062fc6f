#pragma once

// Verification reports: ordered checks plus derived quantities, rendered as
// text or JSON with every number at 9 significant digits.

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bohl::cli {

struct Check {
    std::string name;
    double residual;
    double tolerance;
    /// NaN residuals fail.
    [[nodiscard]] bool pass() const noexcept { return residual <= tolerance; }
};

using Value = std::variant<double, long, bool, std::string, std::vector<double>>;

struct Column {
    std::string name;
    std::vector<double> values;
};

struct Report {
    std::string command;
    std::string spec_echo;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, Value>> derived;
    std::vector<Column> columns;  // for --dump

    void check(std::string name, double residual, double tolerance);
    void add(std::string name, Value v);
    [[nodiscard]] bool pass() const noexcept;

    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] std::string to_json() const;
    /// Whitespace-separated columns with a '#' header line.
    void write_dump(const std::filesystem::path& file) const;
};

/// printf %.9g; non-finite values print as nan / inf / -inf.
[[nodiscard]] std::string format_number(double x);

} // namespace bohl::cli
