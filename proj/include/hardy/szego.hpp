#pragma once

#include <cmath>

#include "hardy/weights.hpp"

namespace hardy {

/// Reproducing kernel of the weighted H^2: the classical Szego kernel
/// twisted by a^{-1/2} in each argument. Point evaluations against it
/// recover f(zeta) under the weighted inner product.
class WeightedSzegoKernel {
public:
    explicit WeightedSzegoKernel(const Weight& w) : outer_(outer_function(w)) {}
    explicit WeightedSzegoKernel(OuterFunction outer) : outer_(std::move(outer)) {}

    Complex operator()(Complex z, Complex zeta) const {
        Complex az = outer_power(outer_, 0.5, z);
        Complex azeta = outer_power(outer_, 0.5, zeta);
        return 1.0 / ((1.0 - std::conj(zeta) * z) * az * std::conj(azeta));
    }

    /// d/dz of the kernel in its first argument.
    Complex deriv_z(Complex z, Complex zeta) const {
        Complex denom = 1.0 - std::conj(zeta) * z;
        Complex base = (*this)(z, zeta);
        return base * (std::conj(zeta) / denom - 0.5 * outer_.log_series.deriv(z));
    }

    const OuterFunction& outer() const { return outer_; }

private:
    OuterFunction outer_;
};

}  // namespace hardy
