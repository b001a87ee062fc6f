#include "bohl_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "bohl/error.hpp"

namespace bohl::cli {

namespace {

using Json = nlohmann::ordered_json;

Json json_number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return std::stod(format_number(x));
}

Json json_value(const Value& v) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                return json_number(x);
            } else if constexpr (std::is_same_v<T, std::vector<double>>) {
                Json arr = Json::array();
                for (double d : x) arr.push_back(json_number(d));
                return arr;
            } else {
                return x;
            }
        },
        v);
}

std::string text_value(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(x);
            } else if constexpr (std::is_same_v<T, long>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return x;
            } else {
                std::string out = "[";
                for (std::size_t i = 0; i < x.size(); ++i)
                    out += (i ? " " : "") + format_number(x[i]);
                return out + "]";
            }
        },
        v);
}

} // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

void Report::check(std::string name, double residual, double tolerance) {
    checks.push_back({std::move(name), residual, tolerance});
}

void Report::add(std::string name, Value v) { derived.emplace_back(std::move(name), std::move(v)); }

bool Report::pass() const noexcept {
    for (const Check& c : checks)
        if (!c.pass()) return false;
    return true;
}

std::string Report::to_text() const {
    std::string out = "command: " + command + "\n";
    for (const Check& c : checks)
        out += "check " + c.name + " " + (c.pass() ? "pass" : "FAIL") +
               " residual=" + format_number(c.residual) +
               " tolerance=" + format_number(c.tolerance) + "\n";
    for (const auto& [name, v] : derived) out += name + ": " + text_value(v) + "\n";
    out += std::string("status: ") + (pass() ? "pass" : "fail") + "\n";
    return out;
}

std::string Report::to_json() const {
    Json doc;
    doc["command"] = command;
    doc["spec"] = spec_echo.empty() ? Json(nullptr) : Json::parse(spec_echo);
    doc["status"] = pass() ? "pass" : "fail";
    Json arr = Json::array();
    for (const Check& c : checks)
        arr.push_back({{"name", c.name},
                       {"status", c.pass() ? "pass" : "fail"},
                       {"residual", json_number(c.residual)},
                       {"tolerance", json_number(c.tolerance)}});
    doc["checks"] = arr;
    Json d = Json::object();
    for (const auto& [name, v] : derived) d[name] = json_value(v);
    doc["derived"] = d;
    return doc.dump(2) + "\n";
}

void Report::write_dump(const std::filesystem::path& file) const {
    std::ofstream out(file);
    if (!out) throw Error(ErrorKind::invalid_input, "cannot write dump file " + file.string());
    out << "#";
    for (const Column& c : columns) out << ' ' << c.name;
    out << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().values.size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << (c ? " " : "") << format_number(columns[c].values[r]);
        out << '\n';
    }
}

} // namespace bohl::cli
