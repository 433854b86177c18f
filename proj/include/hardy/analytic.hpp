#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hardy/util.hpp"

namespace hardy {

/// Finite power series sum c[k] z^k, evaluable on the closed disk.
struct PowerSeries {
    std::vector<Complex> c;

    PowerSeries() = default;
    explicit PowerSeries(std::vector<Complex> coeffs) : c(std::move(coeffs)) {}

    static PowerSeries constant(Complex v) { return PowerSeries({v}); }
    static PowerSeries zero() { return PowerSeries({Complex{0.0, 0.0}}); }

    int degree() const { return static_cast<int>(c.size()) - 1; }

    Complex eval(Complex z) const {
        Complex acc{0.0, 0.0};
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
        return acc;
    }

    Complex deriv(Complex z) const {
        Complex acc{0.0, 0.0};
        for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
        return acc;
    }

    PowerSeries derivative() const {
        if (c.size() <= 1) return zero();
        std::vector<Complex> d(c.size() - 1);
        for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
        return PowerSeries(std::move(d));
    }

    /// Sum of |c_k|, a sup bound for |f| on the closed disk.
    double coeff_norm() const {
        double s = 0.0;
        for (const auto& v : c) s += std::abs(v);
        return s;
    }

    PowerSeries scaled(Complex a) const {
        PowerSeries out = *this;
        for (auto& v : out.c) v *= a;
        return out;
    }
};

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out;
    out.c.resize(std::max(a.c.size(), b.c.size()), Complex{0.0, 0.0});
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) out.c[k] += b.c[k];
    return out;
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    return a + b.scaled({-1.0, 0.0});
}

/// Product truncated to degree max_degree.
inline PowerSeries truncated_product(const PowerSeries& a, const PowerSeries& b, int max_degree) {
    std::vector<Complex> out(static_cast<std::size_t>(max_degree) + 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (static_cast<int>(i) > max_degree) break;
        for (std::size_t j = 0; j < b.c.size() && static_cast<int>(i + j) <= max_degree; ++j) {
            out[i + j] += a.c[i] * b.c[j];
        }
    }
    return PowerSeries(std::move(out));
}

/// Finite Blaschke product times an optional zero-free factor exp(outer_log).
/// Zeros must lie strictly inside the disk; |value| = 1 on the circle when
/// outer_log is absent and |unimodular| = 1.
struct BlaschkeRational {
    std::vector<Complex> zeros;
    Complex unimodular{1.0, 0.0};
    std::optional<PowerSeries> outer_log;

    Complex eval(Complex z) const {
        Complex acc = unimodular;
        for (const Complex& w : zeros) acc *= (z - w) / (1.0 - std::conj(w) * z);
        if (outer_log) acc *= std::exp(outer_log->eval(z));
        return acc;
    }

    // d/dz of (z-w)/(1-conj(w) z) is (1-|w|^2)/(1-conj(w) z)^2; the product
    // rule form stays finite at the zeros, unlike the log-derivative.
    Complex deriv(Complex z) const {
        Complex prod = unimodular;
        std::vector<Complex> factors(zeros.size());
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            const Complex& w = zeros[j];
            factors[j] = (z - w) / (1.0 - std::conj(w) * z);
        }
        Complex outer{1.0, 0.0};
        Complex outer_d{0.0, 0.0};
        if (outer_log) {
            outer = std::exp(outer_log->eval(z));
            outer_d = outer * outer_log->deriv(z);
        }
        Complex sum{0.0, 0.0};
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            const Complex& w = zeros[j];
            Complex denom = 1.0 - std::conj(w) * z;
            Complex dj = (1.0 - std::norm(w)) / (denom * denom);
            Complex rest = prod;
            for (std::size_t k = 0; k < zeros.size(); ++k) {
                if (k != j) rest *= factors[k];
            }
            sum += dj * rest;
        }
        Complex full = prod;
        for (const auto& f : factors) full *= f;
        if (outer_log) return sum * outer + full * outer_d;
        return sum;
    }
};

/// Holomorphic function on the disk with an explicit derivative. Closed
/// representations are kept when available; solver outputs that are neither
/// polynomials nor Blaschke-rational carry their own evaluator pair.
class AnalyticFn {
public:
    struct Evaluator {
        std::function<Complex(Complex)> f;
        std::function<Complex(Complex)> df;
        std::string label;
    };

    AnalyticFn() : repr_(PowerSeries::zero()) {}
    AnalyticFn(PowerSeries ps) : repr_(std::move(ps)) {}
    AnalyticFn(BlaschkeRational b) : repr_(std::move(b)) {}
    AnalyticFn(Evaluator e) : repr_(std::move(e)) {}

    Complex operator()(Complex z) const {
        return std::visit([&](const auto& r) { return call(r, z); }, repr_);
    }

    Complex deriv(Complex z) const {
        return std::visit([&](const auto& r) { return call_deriv(r, z); }, repr_);
    }

    bool is_power_series() const { return std::holds_alternative<PowerSeries>(repr_); }

    const PowerSeries& as_power_series() const {
        if (!is_power_series()) throw std::logic_error("AnalyticFn: not stored as a power series");
        return std::get<PowerSeries>(repr_);
    }

    bool is_blaschke() const { return std::holds_alternative<BlaschkeRational>(repr_); }

    const BlaschkeRational& as_blaschke() const {
        if (!is_blaschke()) throw std::logic_error("AnalyticFn: not stored as a Blaschke product");
        return std::get<BlaschkeRational>(repr_);
    }

private:
    static Complex call(const PowerSeries& p, Complex z) { return p.eval(z); }
    static Complex call(const BlaschkeRational& b, Complex z) { return b.eval(z); }
    static Complex call(const Evaluator& e, Complex z) { return e.f(z); }
    static Complex call_deriv(const PowerSeries& p, Complex z) { return p.deriv(z); }
    static Complex call_deriv(const BlaschkeRational& b, Complex z) { return b.deriv(z); }
    static Complex call_deriv(const Evaluator& e, Complex z) { return e.df(z); }

    std::variant<PowerSeries, BlaschkeRational, Evaluator> repr_;
};

}  // namespace hardy
