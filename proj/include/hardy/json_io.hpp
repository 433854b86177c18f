#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

#include "hardy/corona.hpp"
#include "hardy/exhaustion.hpp"
#include "hardy/interpolation.hpp"
#include "hardy/weights.hpp"

namespace hardy {

using nlohmann::json;

/// Schema violations carry a stable error code in the message prefix.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& code, const std::string& what)
        : std::runtime_error(code + ": " + what) {}
};

namespace detail {

inline Complex complex_from_json(const json& j, const char* where) {
    if (j.is_number()) return Complex{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return Complex{j[0].get<double>(), j[1].get<double>()};
    }
    if (j.is_object() && j.contains("re") && j.contains("im")) {
        return Complex{j["re"].get<double>(), j["im"].get<double>()};
    }
    throw SchemaError("E_COMPLEX", std::string(where) + ": expected number, [re, im] or {re, im}");
}

inline json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace detail

// ---- Weight: { "n": int, "samples": [float], "normalized": bool } ----

inline json weight_to_json(const Weight& w) {
    return json{{"n", w.grid.n}, {"samples", w.samples}, {"normalized", w.normalized}};
}

inline Weight weight_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("samples")) {
        throw SchemaError("E_WEIGHT", "weight object needs fields n and samples");
    }
    int n = j.at("n").get<int>();
    CircleGrid g;
    try {
        g = make_grid(n);
    } catch (const std::invalid_argument& e) {
        throw SchemaError("E_WEIGHT", e.what());
    }
    std::vector<double> samples = j.at("samples").get<std::vector<double>>();
    if (static_cast<int>(samples.size()) != n) {
        throw SchemaError("E_WEIGHT", "samples length does not match n");
    }
    bool normalized = j.value("normalized", false);
    try {
        return validate_and_normalize(g, std::move(samples), normalized);
    } catch (const std::invalid_argument& e) {
        throw SchemaError("E_WEIGHT", e.what());
    }
}

// ---- Exhaustion: { "rings": [{r, density, cap}], "atoms": [{re, im, mass}] } ----

inline json exhaustion_to_json(const Exhaustion& e) {
    json rings = json::array();
    for (const Ring& ring : e.measure.rings) {
        json r{{"r", ring.radius}, {"density", ring.density}};
        r["cap"] = ring.cap ? json(*ring.cap) : json(nullptr);
        rings.push_back(std::move(r));
    }
    json atoms = json::array();
    for (const Atom& a : e.measure.atoms) {
        atoms.push_back(json{{"re", a.center.real()}, {"im", a.center.imag()}, {"mass", a.mass}});
    }
    return json{{"rings", std::move(rings)}, {"atoms", std::move(atoms)}};
}

inline Exhaustion exhaustion_from_json(const json& j, const CircleGrid& g) {
    if (!j.is_object()) throw SchemaError("E_EXHAUSTION", "expected an object");
    std::vector<Ring> rings;
    if (j.contains("rings")) {
        for (const json& r : j.at("rings")) {
            Ring ring;
            ring.radius = r.at("r").get<double>();
            ring.density = r.at("density").get<std::vector<double>>();
            if (static_cast<int>(ring.density.size()) != g.n) {
                throw SchemaError("E_EXHAUSTION", "ring density length does not match the grid");
            }
            if (r.contains("cap") && !r.at("cap").is_null()) ring.cap = r.at("cap").get<double>();
            rings.push_back(std::move(ring));
        }
    }
    std::vector<Atom> atoms;
    if (j.contains("atoms")) {
        for (const json& a : j.at("atoms")) {
            atoms.push_back(Atom{Complex{a.at("re").get<double>(), a.at("im").get<double>()},
                                 a.at("mass").get<double>()});
        }
    }
    try {
        return Exhaustion{make_disk_measure(g, std::move(rings), std::move(atoms))};
    } catch (const std::invalid_argument& e) {
        throw SchemaError("E_EXHAUSTION", e.what());
    }
}

// ---- Problem: { "points": [{re, im}], "targets": [{re, im}] } ----

inline json problem_to_json(const InterpolationProblem& p) {
    json points = json::array(), targets = json::array();
    for (const Complex& z : p.sequence.points) points.push_back(detail::complex_to_json(z));
    for (const Complex& s : p.targets) targets.push_back(detail::complex_to_json(s));
    return json{{"points", std::move(points)}, {"targets", std::move(targets)}};
}

inline InterpolationProblem problem_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("targets")) {
        throw SchemaError("E_PROBLEM", "problem object needs fields points and targets");
    }
    std::vector<Complex> points, targets;
    for (const json& p : j.at("points")) points.push_back(detail::complex_from_json(p, "points"));
    for (const json& t : j.at("targets")) targets.push_back(detail::complex_from_json(t, "targets"));
    try {
        return make_problem(make_point_sequence(std::move(points)), std::move(targets));
    } catch (const std::invalid_argument& e) {
        throw SchemaError("E_PROBLEM", e.what());
    }
}

// ---- Analytic function: { "coeffs": [complex] } ----

inline PowerSeries power_series_from_json(const json& j) {
    const json* arr = nullptr;
    if (j.is_array()) arr = &j;
    else if (j.is_object() && j.contains("coeffs")) arr = &j.at("coeffs");
    if (!arr) throw SchemaError("E_SERIES", "expected a coefficient array or {coeffs: [...]}");
    std::vector<Complex> c;
    for (const json& v : *arr) c.push_back(detail::complex_from_json(v, "coeffs"));
    if (c.empty()) throw SchemaError("E_SERIES", "empty coefficient list");
    return PowerSeries(std::move(c));
}

inline json power_series_to_json(const PowerSeries& p) {
    json coeffs = json::array();
    for (const Complex& v : p.c) coeffs.push_back(detail::complex_to_json(v));
    return json{{"coeffs", std::move(coeffs)}};
}

// ---- Boundary data: { "samples": [complex] } or { "modes": [{m, re, im}] } ----

inline BoundarySamples boundary_data_from_json(const json& j, const CircleGrid& g) {
    if (j.is_object() && j.contains("samples")) {
        const json& arr = j.at("samples");
        if (static_cast<int>(arr.size()) != g.n) {
            throw SchemaError("E_BOUNDARY", "samples length does not match the grid");
        }
        BoundarySamples s{g, std::vector<Complex>(g.n)};
        for (int k = 0; k < g.n; ++k) s.values[k] = detail::complex_from_json(arr[k], "samples");
        return s;
    }
    if (j.is_object() && j.contains("modes")) {
        BoundarySamples s{g, std::vector<Complex>(g.n, Complex{0.0, 0.0})};
        for (const json& m : j.at("modes")) {
            int mode = m.at("m").get<int>();
            if (std::abs(mode) > g.n / 2) throw SchemaError("E_BOUNDARY", "mode index beyond the grid band");
            Complex c{m.value("re", 0.0), m.value("im", 0.0)};
            for (int k = 0; k < g.n; ++k) s.values[k] += c * std::polar(1.0, mode * g.angle(k));
        }
        return s;
    }
    throw SchemaError("E_BOUNDARY", "expected {samples: [...]} or {modes: [...]}");
}

// ---- Corona input: { "f1": [coeffs], "f2": [coeffs], "weight": Weight | "classical" } ----

struct CoronaInput {
    PowerSeries f1;
    PowerSeries f2;
    std::optional<Weight> weight;  // absent means the classical flat weight
};

inline CoronaInput corona_input_from_json(const json& j) {
    if (!j.is_object() || !j.contains("f1") || !j.contains("f2")) {
        throw SchemaError("E_CORONA", "corona object needs fields f1 and f2");
    }
    CoronaInput input;
    input.f1 = power_series_from_json(j.at("f1"));
    input.f2 = power_series_from_json(j.at("f2"));
    if (j.contains("weight") && !j.at("weight").is_null()) {
        const json& w = j.at("weight");
        if (w.is_string()) {
            if (w.get<std::string>() != "classical") {
                throw SchemaError("E_CORONA", "weight must be a Weight object or \"classical\"");
            }
        } else {
            input.weight = weight_from_json(w);
        }
    }
    return input;
}

}  // namespace hardy
