#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "hardy/analytic.hpp"
#include "hardy/exhaustion.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

/// Boundary norm (integral of |f|^p against the weight)^(1/p).
inline double boundary_norm(const AnalyticFn& f, const Weight& w, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("boundary_norm: exponent must be positive");
    double acc = 0.0;
    for (int k = 0; k < w.grid.n; ++k) {
        acc += std::pow(std::abs(f(w.grid.node(k))), p) * w.samples[k];
    }
    return std::pow(acc / static_cast<double>(w.grid.n), 1.0 / p);
}

namespace detail {

/// Potential table of an exhaustion on a disk quadrature, built once per
/// (measure, quadrature) pair. Ring potentials are synthesized per radius
/// with one inverse FFT; caps are applied ring by ring.
inline std::shared_ptr<const std::vector<double>> potential_table(const Exhaustion& e, const DiskQuadrature& q) {
    static std::mutex guard;
    static std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const std::vector<double>>> table;
    {
        std::lock_guard<std::mutex> lock(guard);
        auto it = table.find({e.measure.id, q.id});
        if (it != table.end()) return it->second;
    }

    const int n_rad = q.radial_count();
    const int n_ang = q.angular.n;
    auto values = std::make_shared<std::vector<double>>(static_cast<std::size_t>(n_rad) * n_ang, 0.0);

    parallel_for(n_rad, [&](std::size_t i) {
        const double s = q.radius[i];
        std::vector<double> row(n_ang, 0.0);
        for (const Ring& ring : e.measure.rings) {
            const double r = ring.radius;
            const double hi = std::max(s, r);
            const double qq = std::min(s, r) / hi;
            const double ww = r * s;
            const int half = q.angular.n / 2;
            FourierSeries spec;
            spec.c.assign(n_ang, Complex{0.0, 0.0});
            spec.set_coeff(0, Complex{ring.mass * std::log(hi), 0.0});
            double qm = 1.0, wm = 1.0;
            for (int m = 1; m < half; ++m) {
                qm *= qq;
                wm *= ww;
                Complex cm = -0.5 * (qm - wm) / static_cast<double>(m) * ring.density_hat.coeff(m);
                spec.set_coeff(m, cm);
                spec.set_coeff(-m, std::conj(cm));
                if (qm < 1e-32) break;
            }
            spec.set_coeff(half, -(std::pow(qq, half) - std::pow(ww, half)) / half * ring.density_hat.coeff(half));
            BoundarySamples synth = to_samples(spec, q.angular);
            if (ring.cap) {
                for (int k = 0; k < n_ang; ++k) row[k] += std::max(synth.values[k].real(), *ring.cap);
            } else {
                for (int k = 0; k < n_ang; ++k) row[k] += synth.values[k].real();
            }
        }
        for (const Atom& atom : e.measure.atoms) {
            for (int k = 0; k < n_ang; ++k) {
                row[k] += atom_potential(atom, q.node(static_cast<int>(i), k));
            }
        }
        std::copy(row.begin(), row.end(), values->begin() + static_cast<std::size_t>(i) * n_ang);
    });

    std::lock_guard<std::mutex> lock(guard);
    auto [it, inserted] = table.emplace(std::make_pair(e.measure.id, q.id), values);
    return it->second;
}

/// Default quadrature adapted to an exhaustion: radial breaks at every ring
/// radius (the potential has a kink there) and geometric grading toward each
/// atom radius, where the potential is logarithmic.
inline std::shared_ptr<const DiskQuadrature> quadrature_for(const Exhaustion& e, int n_radial = 200,
                                                            int n_angular = 512) {
    static std::mutex guard;
    static std::map<std::tuple<std::uint64_t, int, int>, std::shared_ptr<const DiskQuadrature>> table;
    {
        std::lock_guard<std::mutex> lock(guard);
        auto it = table.find({e.measure.id, n_radial, n_angular});
        if (it != table.end()) return it->second;
    }
    std::vector<double> breaks;
    for (const Ring& ring : e.measure.rings) breaks.push_back(ring.radius);
    for (const Atom& atom : e.measure.atoms) {
        auto ladder = graded_breaks(std::abs(atom.center));
        breaks.insert(breaks.end(), ladder.begin(), ladder.end());
    }
    auto q = std::make_shared<const DiskQuadrature>(make_disk_quadrature(n_radial, n_angular, std::move(breaks)));
    std::lock_guard<std::mutex> lock(guard);
    auto [it, inserted] = table.emplace(std::make_tuple(e.measure.id, n_radial, n_angular), q);
    return it->second;
}

}  // namespace detail

struct AreaNormDetail {
    double value = 0.0;
    double measure_term = 0.0;    // integral of |f|^p against the Riesz measure
    double potential_term = 0.0;  // integral of u against the normalized laplacian of |f|^p
    double excluded_weight = 0.0; // quadrature mass skipped by the p < 2 zero guard
    long excluded_nodes = 0;
};

/// Integral of |f|^p against the Riesz measure of the exhaustion: rings are
/// integrated exactly in angle on the circle grid, atoms evaluated directly.
inline double riesz_measure_integral(const AnalyticFn& f, const DiskMeasure& m, double p) {
    double acc = 0.0;
    for (const Ring& ring : m.rings) {
        double sum = 0.0;
        for (int k = 0; k < m.grid.n; ++k) {
            Complex z = std::polar(ring.radius, m.grid.angle(k));
            sum += std::pow(std::abs(f(z)), p) * ring.density[k];
        }
        acc += sum / static_cast<double>(m.grid.n);
    }
    for (const Atom& atom : m.atoms) acc += atom.mass * std::pow(std::abs(f(atom.center)), p);
    return acc;
}

/// Area-formula norm: (measure term - potential term)^(1/p), with the
/// normalized laplacian of |f|^p equal to p^2 |f|^{p-2} |f'|^2 dA / (2 pi).
inline AreaNormDetail area_norm_detailed(const AnalyticFn& f, const Exhaustion& e, double p,
                                         const DiskQuadrature& q) {
    if (!(p >= 1.0)) throw std::invalid_argument("area_norm: exponent must be at least 1");
    AreaNormDetail out;
    out.measure_term = riesz_measure_integral(f, e.measure, p);

    auto u_table = detail::potential_table(e, q);
    const int n_rad = q.radial_count();
    const int n_ang = q.angular.n;
    const bool guard_zeros = p < 2.0;
    double t2 = 0.0;
    for (int i = 0; i < n_rad; ++i) {
        double row = 0.0;
        for (int k = 0; k < n_ang; ++k) {
            Complex z = q.node(i, k);
            double af = std::abs(f(z));
            if (guard_zeros && af < 1e-12) {
                out.excluded_weight += q.area_weight(i);
                ++out.excluded_nodes;
                continue;
            }
            double density = std::pow(af, p - 2.0) * std::norm(f.deriv(z));
            row += (*u_table)[static_cast<std::size_t>(i) * n_ang + k] * density;
        }
        t2 += row * q.area_weight(i);
    }
    out.potential_term = p * p * t2;
    out.value = std::pow(std::max(0.0, out.measure_term - out.potential_term), 1.0 / p);
    return out;
}

inline double area_norm(const AnalyticFn& f, const Exhaustion& e, double p) {
    auto q = detail::quadrature_for(e);
    return area_norm_detailed(f, e, p, *q).value;
}

/// (p^2) integral of |u| |f|^{p-2} |f'|^2 dA / (2 pi): the derivative energy
/// bounded by the p-th power of the boundary norm.
inline double derivative_energy(const AnalyticFn& f, const Exhaustion& e, double p) {
    auto q = detail::quadrature_for(e);
    AreaNormDetail d = area_norm_detailed(f, e, p, *q);
    return -d.potential_term;
}

/// Means of |f|^p against the sweep measures at the given levels. The
/// sequence is nondecreasing for any subharmonic integrand.
inline std::vector<double> radial_mean_monotonicity(const AnalyticFn& f, const Exhaustion& e, double p,
                                                    const std::vector<double>& levels) {
    std::vector<double> out;
    out.reserve(levels.size());
    const CircleGrid& g = e.measure.grid;
    for (double level : levels) {
        SweepMeasure sweep = radial_sweep_measure(e, level);
        double mean = 0.0;
        for (int k = 0; k < g.n; ++k) {
            mean += std::pow(std::abs(f(std::polar(sweep.rho, g.angle(k)))), p);
        }
        out.push_back(sweep.mass * mean / static_cast<double>(g.n));
    }
    return out;
}

struct CarlesonIdentityReport {
    double measure_integral = 0.0;
    double boundary_integral = 0.0;
    double ratio = 0.0;
};

/// The Riesz measure of an exhaustion embeds H^p with constant one against
/// its own boundary weight; the report carries the measured ratio.
inline CarlesonIdentityReport carleson_identity_check(const AnalyticFn& f, const Exhaustion& e, double p) {
    CarlesonIdentityReport rep;
    rep.measure_integral = riesz_measure_integral(f, e.measure, p);
    Weight alpha = boundary_weight(e.measure);
    rep.boundary_integral = std::pow(boundary_norm(f, alpha, p), p);
    rep.ratio = rep.boundary_integral > 0.0 ? rep.measure_integral / rep.boundary_integral : 0.0;
    return rep;
}

}  // namespace hardy
