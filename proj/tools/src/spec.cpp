#include "bohl_cli/spec.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bohl::cli {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::invalid_input, "spec: " + path + ": " + what);
}

double number(const Json& doc, const std::string& key) {
    const auto it = doc.find(key);
    if (it == doc.end()) fail(key, "missing field");
    if (!it->is_number()) fail(key, "expected a number");
    const double x = it->get<double>();
    if (!std::isfinite(x)) fail(key, "must be finite");
    return x;
}

long integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
}

cplx complex_pair(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path, "expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<double> read_samples(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail("path", "cannot open " + file.string());
    std::vector<double> out;
    double x = 0.0;
    while (in >> x) out.push_back(x);
    if (!in.eof()) fail("path", "non-numeric entry in " + file.string());
    return out;
}

const std::set<std::string> kKnown = {"kind",  "value",    "slope",  "intercept", "scale",
                                      "exponent", "values", "path",   "window",    "interval",
                                      "h",     "C",        "anchor", "m",         "n",
                                      "x0",    "seed",     "bump"};

} // namespace

PotentialSpec parse_spec(std::string_view text, const std::filesystem::path& base_dir) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail("<document>", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("<document>", "expected an object");
    for (const auto& [key, _] : doc.items())
        if (!kKnown.contains(key)) fail(key, "unknown field");

    PotentialSpec spec{};
    const auto kind_it = doc.find("kind");
    if (kind_it == doc.end()) fail("kind", "missing field");
    if (!kind_it->is_string()) fail("kind", "expected a string");
    const std::string kind = kind_it->get<std::string>();
    if (kind == "constant") {
        spec.kind = PotentialKind::constant;
        spec.value = number(doc, "value");
    } else if (kind == "affine") {
        spec.kind = PotentialKind::affine;
        spec.slope = number(doc, "slope");
        spec.intercept = number(doc, "intercept");
    } else if (kind == "power") {
        spec.kind = PotentialKind::power;
        spec.scale = number(doc, "scale");
        spec.exponent = number(doc, "exponent");
    } else if (kind == "samples") {
        spec.kind = PotentialKind::samples;
        const bool inline_values = doc.contains("values");
        if (inline_values == doc.contains("path")) fail("values", "give exactly one of values or path");
        if (inline_values) {
            const Json& arr = doc["values"];
            if (!arr.is_array()) fail("values", "expected an array");
            for (std::size_t i = 0; i < arr.size(); ++i) {
                if (!arr[i].is_number()) fail("values[" + std::to_string(i) + "]", "expected a number");
                spec.values.push_back(arr[i].get<double>());
            }
        } else {
            if (!doc["path"].is_string()) fail("path", "expected a string");
            std::filesystem::path p = doc["path"].get<std::string>();
            if (p.is_relative()) p = base_dir / p;
            spec.values = read_samples(p);
        }
        for (std::size_t i = 0; i < spec.values.size(); ++i)
            if (!std::isfinite(spec.values[i])) fail("values[" + std::to_string(i) + "]", "must be finite");
    } else {
        fail("kind", "unknown kind '" + kind + "'");
    }

    if (doc.contains("window")) {
        const Json& w = doc["window"];
        if (!w.is_array() || w.size() != 2) fail("window", "expected [n_lo, n_hi]");
        const long lo = integer(w[0], "window[0]");
        const long hi = integer(w[1], "window[1]");
        if (hi < lo + 2) fail("window", "needs n_hi >= n_lo + 2");
        spec.window = {lo, hi};
    }
    if (doc.contains("interval")) {
        const Json& iv = doc["interval"];
        if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
            fail("interval", "expected [a, b]");
        const double a = iv[0].get<double>();
        const double b = iv[1].get<double>();
        if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) fail("interval", "needs finite a < b");
        spec.interval = {a, b};
    }
    if (doc.contains("h")) {
        spec.h = number(doc, "h");
        if (!(spec.h > 0.0)) fail("h", "must be positive");
    }
    if (doc.contains("C")) {
        spec.c = number(doc, "C");
        if (!(*spec.c > 0.0)) fail("C", "must be positive");
    }
    if (doc.contains("anchor")) spec.anchor = integer(doc["anchor"], "anchor");
    if (doc.contains("m")) spec.m = integer(doc["m"], "m");
    if (doc.contains("n")) spec.n = integer(doc["n"], "n");
    if (doc.contains("x0")) spec.x0 = number(doc, "x0");
    if (doc.contains("seed")) {
        const Json& s = doc["seed"];
        if (!s.is_object() || !s.contains("u") || !s.contains("du"))
            fail("seed", "expected {\"u\": [re, im], \"du\": [re, im]}");
        spec.seed = Seed{complex_pair(s["u"], "seed.u"), complex_pair(s["du"], "seed.du")};
    }
    if (doc.contains("bump")) {
        const Json& b = doc["bump"];
        if (!b.is_object()) fail("bump", "expected an object");
        if (b.contains("center")) spec.bump.center = number(b, "center");
        if (b.contains("half_width")) spec.bump.half_width = number(b, "half_width");
    }
    spec.echo = doc.dump();
    return spec;
}

PotentialSpec load_spec(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorKind::invalid_input, "cannot open spec file " + file.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_spec(text.str(), file.parent_path());
}

LatticePotential PotentialSpec::lattice() const {
    if (!window) fail("window", "missing field (required for discrete commands)");
    const LatticeWindow w(window->first, window->second);
    std::vector<double> v(w.size());
    switch (kind) {
    case PotentialKind::constant:
        std::fill(v.begin(), v.end(), value);
        break;
    case PotentialKind::affine:
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = slope * static_cast<double>(w.lo() + static_cast<long>(i)) + intercept;
        break;
    case PotentialKind::power:
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = scale * std::pow(static_cast<double>(w.lo() + static_cast<long>(i)), exponent);
        break;
    case PotentialKind::samples:
        if (values.size() != w.size())
            fail("values", "length " + std::to_string(values.size()) + " does not match window of " +
                               std::to_string(w.size()) + " points");
        v = values;
        break;
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i]))
            fail("window", "potential is not finite at n = " +
                               std::to_string(w.lo() + static_cast<long>(i)));
    return LatticePotential(w, std::move(v));
}

ContinuumPotential PotentialSpec::continuum() const {
    switch (kind) {
    case PotentialKind::constant:
        return ContinuumPotential::constant(value);
    case PotentialKind::affine:
        return ContinuumPotential::affine(slope, intercept);
    case PotentialKind::power:
        if (interval && interval->first <= 0.0 && std::floor(exponent) != exponent)
            fail("interval", "non-integer power needs x > 0");
        if (interval && exponent < 0.0 && interval->first <= 0.0 && interval->second >= 0.0)
            fail("interval", "negative power is singular at x = 0");
        return ContinuumPotential::power(scale, exponent);
    case PotentialKind::samples:
        if (!interval) fail("interval", "missing field (required for continuum commands)");
        return ContinuumPotential::samples(interval->first, interval->second, values);
    }
    fail("kind", "unreachable");
}

Grid PotentialSpec::grid() const {
    if (!interval) fail("interval", "missing field (required for continuum commands)");
    return Grid::with_step(interval->first, interval->second, h);
}

} // namespace bohl::cli
