#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "hardy/exhaustion.hpp"
#include "hardy/norms.hpp"
#include "hardy/szego.hpp"

namespace hardy {

struct BoxConstantResult {
    double constant = 0.0;
    double theta = 0.0;  // witness box center
    double h = 0.0;      // witness box size
};

/// Scan of m(Q)/h over Carleson boxes Q(theta0, h). The h ladder is
/// pi * 2^{-k} for k = 1..levels, joined by the measure's own scales
/// (1 - radius for every component) so point masses are caught by a box
/// of exactly their depth. A scan is a certified lower bound, not a sup.
inline BoxConstantResult box_constant(const DiskMeasure& m, int levels = 12) {
    const CircleGrid& g = m.grid;
    std::vector<double> h_list;
    for (int k = 1; k <= levels; ++k) h_list.push_back(kPi * std::ldexp(1.0, -k));
    for (const Ring& ring : m.rings) {
        if (ring.radius < 1.0) h_list.push_back(std::min(kPi / 2.0, 1.0 - ring.radius));
    }
    for (const Atom& atom : m.atoms) {
        double depth = 1.0 - std::abs(atom.center);
        if (depth < 1.0) h_list.push_back(std::min(kPi / 2.0, depth));
    }

    std::vector<double> centers;
    centers.reserve(g.n + m.atoms.size());
    for (int k = 0; k < g.n; ++k) centers.push_back(g.angle(k));
    for (const Atom& atom : m.atoms) {
        double t = std::arg(atom.center);
        centers.push_back(t < 0.0 ? t + kTwoPi : t);
    }

    // Angular prefix sums of each ring density against d(lambda).
    std::vector<std::vector<double>> prefix(m.rings.size());
    for (std::size_t i = 0; i < m.rings.size(); ++i) {
        prefix[i].resize(g.n + 1, 0.0);
        for (int k = 0; k < g.n; ++k) {
            prefix[i][k + 1] = prefix[i][k] + m.rings[i].density[k] / static_cast<double>(g.n);
        }
    }
    auto ring_window = [&](std::size_t i, double lo, double hi) {
        // mass of ring i with angle in [lo, hi] (hi - lo < 2 pi), node-resolved
        auto wrap_sum = [&](double a, double b) {
            int ka = static_cast<int>(std::ceil(a * g.n / kTwoPi - 1e-12));
            int kb = static_cast<int>(std::floor(b * g.n / kTwoPi + 1e-12));
            if (kb < ka) return 0.0;
            ka = std::max(ka, 0);
            kb = std::min(kb, g.n - 1);
            return prefix[i][kb + 1] - prefix[i][ka];
        };
        if (lo < 0.0) return wrap_sum(lo + kTwoPi, kTwoPi - 1e-15) + wrap_sum(0.0, hi);
        if (hi >= kTwoPi) return wrap_sum(lo, kTwoPi - 1e-15) + wrap_sum(0.0, hi - kTwoPi);
        return wrap_sum(lo, hi);
    };

    BoxConstantResult best;
    for (double h : h_list) {
        double floor_r = 1.0 - h;
        for (double t0 : centers) {
            double mass = 0.0;
            for (std::size_t i = 0; i < m.rings.size(); ++i) {
                if (m.rings[i].radius >= floor_r) mass += ring_window(i, t0 - h, t0 + h);
            }
            for (const Atom& atom : m.atoms) {
                double r = std::abs(atom.center);
                if (r < floor_r) continue;
                if (r == 0.0) {
                    mass += atom.mass;
                    continue;
                }
                double dt = std::remainder(std::arg(atom.center) - t0, kTwoPi);
                if (std::abs(dt) <= h + 1e-15) mass += atom.mass;
            }
            double c = mass / h;
            if (c > best.constant) best = BoxConstantResult{c, t0, h};
        }
    }
    return best;
}

struct EmbeddingConstantResult {
    double constant = 0.0;
    Complex witness{0.0, 0.0};
};

/// Embedding ratio sup over weighted-kernel test functions centered at the
/// given points: integral of |k_w|^p against the measure over the p-th
/// power of its boundary norm. Kernels are extremal in the classical
/// unweighted case; in general this is a certified lower bound.
inline EmbeddingConstantResult embedding_constant(const DiskMeasure& m, const Weight& w, double p,
                                                  const std::vector<Complex>& centers) {
    EmbeddingConstantResult out;
    if (centers.empty()) return out;
    WeightedSzegoKernel kernel(w);
    for (Complex c : centers) {
        AnalyticFn f(AnalyticFn::Evaluator{
            [kernel, c](Complex z) { return kernel(z, c); },
            [kernel, c](Complex z) { return kernel.deriv_z(z, c); },
            "szego-kernel-test"});
        double numer = riesz_measure_integral(f, m, p);
        double denom = std::pow(boundary_norm(f, w, p), p);
        if (denom <= 0.0) continue;
        double ratio = numer / denom;
        if (ratio > out.constant) out = EmbeddingConstantResult{ratio, c};
    }
    return out;
}

}  // namespace hardy
