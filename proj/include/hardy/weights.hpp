#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hardy/fourier.hpp"
#include "hardy/util.hpp"

namespace hardy {

/// Strictly positive boundary density alpha on the circle grid. The lower
/// bound and total mass are recorded at construction; every downstream
/// estimate reads them from here instead of assuming them.
struct Weight {
    CircleGrid grid;
    std::vector<double> samples;
    double lower_bound = 0.0;
    double mass = 0.0;
    bool normalized = false;
};

inline Weight validate_and_normalize(const CircleGrid& grid, std::vector<double> raw, bool rescale_to_mass_one) {
    if (static_cast<int>(raw.size()) != grid.n) {
        throw std::invalid_argument("validate_and_normalize: sample count does not match grid");
    }
    double lo = raw[0];
    for (double v : raw) {
        if (!(v > 0.0)) throw std::invalid_argument("validate_and_normalize: weight samples must be strictly positive");
        lo = std::min(lo, v);
    }
    double mass = circle_integral_real(grid, raw);
    if (rescale_to_mass_one) {
        for (double& v : raw) v /= mass;
        lo /= mass;
        mass = 1.0;
    }
    return Weight{grid, std::move(raw), lo, mass, rescale_to_mass_one};
}

inline Weight validate_and_normalize(const BoundarySamples& raw, bool rescale_to_mass_one) {
    std::vector<double> vals(raw.values.size());
    for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = raw.values[k].real();
    return validate_and_normalize(raw.grid, std::move(vals), rescale_to_mass_one);
}

inline Weight constant_weight(const CircleGrid& grid, double value = 1.0) {
    return validate_and_normalize(grid, std::vector<double>(grid.n, value), false);
}

inline BoundarySamples weight_samples(const Weight& w) {
    BoundarySamples s{w.grid, std::vector<Complex>(w.grid.n)};
    for (int k = 0; k < w.grid.n; ++k) s.values[k] = Complex{w.samples[k], 0.0};
    return s;
}

/// Zero-free function a with |a| = alpha on the boundary, held through the
/// series of log a. a(0) = exp(c_0) > 0 fixes the unimodular freedom.
struct OuterFunction {
    PowerSeries log_series;
    Weight weight;

    Complex eval(Complex z) const { return std::exp(log_series.eval(z)); }
    Complex deriv(Complex z) const { return std::exp(log_series.eval(z)) * log_series.deriv(z); }
    double value_at_origin() const { return std::exp(log_series.c.empty() ? 0.0 : log_series.c[0].real()); }
};

inline OuterFunction outer_function(const Weight& w, int degree = -1) {
    if (degree < 0) degree = w.grid.n / 2 - 1;
    BoundarySamples log_alpha{w.grid, std::vector<Complex>(w.grid.n)};
    for (int k = 0; k < w.grid.n; ++k) log_alpha.values[k] = Complex{std::log(w.samples[k]), 0.0};
    return OuterFunction{herglotz_extend(log_alpha, degree), w};
}

/// a^e as exp(e log a); single-valued because log a is carried explicitly.
inline Complex outer_power(const OuterFunction& a, double exponent, Complex z) {
    return std::exp(exponent * a.log_series.eval(z));
}

inline BoundarySamples outer_power_boundary(const OuterFunction& a, double exponent) {
    BoundarySamples logs = boundary_trace(a.log_series, a.weight.grid);
    for (auto& v : logs.values) v = std::exp(exponent * v);
    return logs;
}

/// Power-series coefficients of a^e, recovered from its boundary trace.
/// The trace of a zero-free exponential is analytic, so the negative modes
/// measure nothing but truncation noise; they are reported for monitoring.
inline PowerSeries outer_power_series(const OuterFunction& a, double exponent, double* negative_residual = nullptr) {
    BoundarySamples b = outer_power_boundary(a, exponent);
    return analytic_coefficients(b, a.weight.grid.n / 2 - 1, negative_residual);
}

inline double outer_modulus_error(const OuterFunction& a) {
    BoundarySamples b = outer_power_boundary(a, 1.0);
    double worst = 0.0;
    for (int k = 0; k < a.weight.grid.n; ++k) {
        worst = std::max(worst, std::abs(std::abs(b.values[k]) - a.weight.samples[k]));
    }
    return worst;
}

/// Deterministic family of smooth mass-one weights with floor c. Each raw
/// weight is c + |Q|^2 for a random polynomial Q of degree at most d, which
/// is a trigonometric polynomial of degree <= d staying above its floor.
inline std::vector<Weight> random_weight_family(const CircleGrid& grid, int count, int roughness,
                                                double floor_c, std::uint64_t seed) {
    if (!(floor_c > 0.0)) throw std::invalid_argument("random_weight_family: floor must be positive");
    if (roughness >= grid.n / 2) throw std::invalid_argument("random_weight_family: roughness exceeds grid band");
    Rng rng(seed);
    std::vector<Weight> family;
    family.reserve(count);
    for (int i = 0; i < count; ++i) {
        PowerSeries q;
        q.c.resize(static_cast<std::size_t>(roughness) + 1);
        for (auto& ck : q.c) ck = rng.uniform_complex(1.0) / double(q.c.size());
        std::vector<double> vals(grid.n);
        for (int k = 0; k < grid.n; ++k) {
            vals[k] = floor_c + std::norm(q.eval(grid.node(k)));
        }
        family.push_back(validate_and_normalize(grid, std::move(vals), true));
    }
    return family;
}

}  // namespace hardy
