#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hardy/fourier.hpp"
#include "hardy/weights.hpp"

namespace hardy {

inline double conjugate_exponent(double p) {
    if (!(p > 1.0)) throw std::invalid_argument("conjugate_exponent: need p > 1");
    return p / (p - 1.0);
}

/// Multiplication by a^{1/p}: the isometry from the weighted boundary space
/// onto the unweighted one.
inline BoundarySamples apply_Ap(const BoundarySamples& f, const OuterFunction& a, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("apply_Ap: exponent must be positive");
    if (f.grid.n != a.weight.grid.n) throw std::invalid_argument("apply_Ap: grid mismatch");
    BoundarySamples factor = outer_power_boundary(a, 1.0 / p);
    BoundarySamples out = f;
    for (int k = 0; k < f.grid.n; ++k) out.values[k] *= factor.values[k];
    return out;
}

inline BoundarySamples apply_Ap(const BoundarySamples& f, const Weight& w, double p) {
    return apply_Ap(f, outer_function(w), p);
}

struct DistanceResult {
    double distance = 0.0;
    PowerSeries best_approximant;     // the nearest function of the weighted H^2
    BoundarySamples residual;         // phi - best approximant on the grid
    double projection_norm = 0.0;     // norm of the analytic part of a^{1/2} phi
    double embedded_norm = 0.0;       // norm of a^{1/2} phi
    double approximant_tail = 0.0;    // coefficient-decay report for the truncation
    double p = 2.0;                   // the solved exponent and its conjugate
    double q = 2.0;
};

/// Distance from boundary data to the weighted H^2, via the isometry and
/// the analytic projection: distance = ||(I - P_+)(a^{1/2} phi)||, and the
/// minimizer is a^{-1/2} P_+(a^{1/2} phi).
inline DistanceResult dist_h2(const BoundarySamples& phi, const Weight& w) {
    OuterFunction a = outer_function(w);
    BoundarySamples embedded = apply_Ap(phi, a, 2.0);
    FourierSeries spec = to_fourier(embedded);
    FourierSeries plus = riesz_project(spec);

    double dist2 = 0.0;
    for (int m = -1; m > -w.grid.n / 2; --m) dist2 += std::norm(spec.coeff(m));

    DistanceResult out;
    out.distance = std::sqrt(dist2);
    out.embedded_norm = l2_norm(spec);
    out.projection_norm = l2_norm(plus);

    // Pull the projection back through the multiplier a^{-1/2}, which is a
    // bounded analytic function because the weight stays above its floor.
    PowerSeries inv_sqrt = outer_power_series(a, -0.5);
    BoundarySamples plus_samples = to_samples(plus, w.grid);
    PowerSeries analytic_part = analytic_coefficients(plus_samples, w.grid.n / 2 - 1);
    PowerSeries approx = truncated_product(inv_sqrt, analytic_part, w.grid.n / 2 - 1);

    int tail_lo = std::max(1, w.grid.n / 2 - 32);
    double tail = 0.0;
    for (std::size_t k = tail_lo; k < approx.c.size(); ++k) tail += std::abs(approx.c[k]);
    out.approximant_tail = tail;

    out.best_approximant = approx;
    out.residual = phi;
    BoundarySamples approx_trace = boundary_trace(approx, w.grid);
    for (int k = 0; k < w.grid.n; ++k) out.residual.values[k] -= approx_trace.values[k];
    return out;
}

/// Dual certificate pairing: the circle integral of phi a e^{i theta} g.
/// Any g of unit dual norm turns its modulus into a lower bound on the
/// distance, because the pairing annihilates the analytic subspace.
inline Complex dual_pairing(const BoundarySamples& phi, const AnalyticFn& g, const Weight& w) {
    OuterFunction a = outer_function(w);
    BoundarySamples av = outer_power_boundary(a, 1.0);
    Complex acc{0.0, 0.0};
    for (int k = 0; k < w.grid.n; ++k) {
        Complex z = w.grid.node(k);
        acc += phi.values[k] * av.values[k] * z * g(z);
    }
    return acc / static_cast<double>(w.grid.n);
}

}  // namespace hardy
