#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hardy/fourier.hpp"
#include "hardy/util.hpp"

namespace hardy {

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre rule by Newton iteration on the Legendre recurrence.
inline GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

namespace detail {
inline std::uint64_t next_quadrature_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}
}  // namespace detail

/// Tensor rule on the disk: composite Gauss-Legendre in radius (split at
/// the given break radii) times the uniform angular grid. Node (i, k) has
/// weight radius[i] * radial_weight[i] / n_angular against dA / (2 pi).
struct DiskQuadrature {
    CircleGrid angular;
    std::vector<double> radius;
    std::vector<double> radial_weight;  // for integration in dr over (0,1)
    std::uint64_t id = 0;

    int radial_count() const { return static_cast<int>(radius.size()); }

    double area_weight(int i) const {
        return radius[i] * radial_weight[i] / static_cast<double>(angular.n);
    }

    Complex node(int i, int k) const { return std::polar(radius[i], angular.angle(k)); }
};

inline DiskQuadrature make_disk_quadrature(int n_radial, int n_angular, std::vector<double> breaks = {}) {
    if (n_radial < 8) throw std::invalid_argument("make_disk_quadrature: radial resolution too small");
    CircleGrid ang = make_grid(n_angular);

    std::sort(breaks.begin(), breaks.end());
    std::vector<double> cuts{0.0};
    for (double b : breaks) {
        if (b <= 1e-14 || b >= 1.0 - 1e-14) continue;
        if (b - cuts.back() > 1e-12) cuts.push_back(b);
    }
    cuts.push_back(1.0);

    double total_score = 0.0;
    std::vector<double> score(cuts.size() - 1);
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        score[s] = std::sqrt(cuts[s + 1] - cuts[s]);
        total_score += score[s];
    }

    DiskQuadrature q;
    q.angular = ang;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        int ns = std::max(6, static_cast<int>(std::lround(n_radial * score[s] / total_score)));
        GaussRule g = gauss_legendre(ns);
        double a = cuts[s], b = cuts[s + 1];
        for (int i = 0; i < ns; ++i) {
            q.radius.push_back(a + (b - a) * 0.5 * (g.nodes[i] + 1.0));
            q.radial_weight.push_back(0.5 * (b - a) * g.weights[i]);
        }
    }
    q.id = detail::next_quadrature_id();

    // Construction-time sanity: moments of r up to degree 5 and the total
    // disk measure must come out exact.
    for (int k = 0; k <= 5; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < q.radius.size(); ++i) acc += q.radial_weight[i] * std::pow(q.radius[i], k);
        if (std::abs(acc - 1.0 / (k + 1)) > 1e-12) {
            throw std::logic_error("make_disk_quadrature: radial rule failed its moment check");
        }
    }
    return q;
}

/// Geometric refinement ladder around a logarithmic singularity of the
/// radial integrand. radius == 0 grades toward the origin.
inline std::vector<double> graded_breaks(double radius) {
    std::vector<double> out;
    if (radius <= 0.0) {
        for (int k = 13; k >= 1; --k) out.push_back(std::ldexp(1.0, -k));
        return out;
    }
    out.push_back(radius);
    for (int k = 2; k <= 12; ++k) {
        double step = std::ldexp(1.0, -k);
        double lo = radius * (1.0 - step);
        double hi = radius * (1.0 + step);
        if (lo > 0.0) out.push_back(lo);
        if (hi < 1.0) out.push_back(hi);
    }
    return out;
}

}  // namespace hardy
