#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardy/carleson.hpp"
#include "hardy/duality.hpp"
#include "hardy/norms.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

/// Roots of a polynomial by the companion matrix. Trailing near-zero
/// leading coefficients are stripped first.
inline std::vector<Complex> polynomial_roots(const PowerSeries& p) {
    std::vector<Complex> c = p.c;
    double scale = 0.0;
    for (const Complex& v : c) scale = std::max(scale, std::abs(v));
    while (c.size() > 1 && std::abs(c.back()) < 1e-14 * scale) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg < 1) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(companion);
    std::vector<Complex> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = eig.eigenvalues()(i);
    return roots;
}

/// Corona data: two polynomials bounded by one on the closed disk whose
/// moduli stay jointly above a certified delta. The certificate is a grid
/// minimum minus a Lipschitz covering margin, never the raw grid minimum.
struct CoronaData {
    PowerSeries f1;
    PowerSeries f2;
    double delta = 0.0;       // certified lower bound for |f1|^2 + |f2|^2
    double grid_min = 0.0;    // raw scan minimum
    double margin = 0.0;      // modulus-of-continuity allowance subtracted
    PowerSeries df1;
    PowerSeries df2;
    PowerSeries ddf1;
    PowerSeries ddf2;

    double joint_modulus(Complex z) const { return std::norm(f1.eval(z)) + std::norm(f2.eval(z)); }
};

inline CoronaData make_corona_data(PowerSeries f1, PowerSeries f2, const CircleGrid& boundary,
                                   int scan_radii = 512, int scan_angles = 2048) {
    for (int k = 0; k < boundary.n; ++k) {
        Complex z = boundary.node(k);
        if (std::abs(f1.eval(z)) > 1.0 + 1e-12 || std::abs(f2.eval(z)) > 1.0 + 1e-12) {
            throw std::invalid_argument("make_corona_data: data must lie in the unit ball of H^infinity");
        }
    }
    const double ring_margin = 0.05;
    for (const PowerSeries* f : {&f1, &f2}) {
        for (const Complex& root : polynomial_roots(*f)) {
            double r = std::abs(root);
            if (r >= 1.0 - 1e-12 && r <= 1.0 + ring_margin) {
                throw std::invalid_argument("make_corona_data: zero too close to the unit circle");
            }
        }
    }

    CoronaData d;
    d.f1 = std::move(f1);
    d.f2 = std::move(f2);
    d.df1 = d.f1.derivative();
    d.df2 = d.f2.derivative();
    d.ddf1 = d.df1.derivative();
    d.ddf2 = d.df2.derivative();

    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= scan_radii; ++i) {
        double r = static_cast<double>(i) / scan_radii;
        for (int k = 0; k < scan_angles; ++k) {
            double s = d.joint_modulus(std::polar(r, kTwoPi * k / scan_angles));
            lo = std::min(lo, s);
        }
    }
    double lip = 2.0 * (d.f1.coeff_norm() * d.df1.coeff_norm() + d.f2.coeff_norm() * d.df2.coeff_norm());
    double cover = std::sqrt(std::pow(0.5 / scan_radii, 2) + std::pow(kPi / scan_angles, 2));
    d.grid_min = lo;
    d.margin = lip * cover;
    d.delta = lo - d.margin;
    if (!(d.delta > 0.0)) {
        throw std::invalid_argument("make_corona_data: no certified positive lower bound for |f1|^2 + |f2|^2");
    }
    return d;
}

/// Smooth pointwise solution: phi_j = conj(f_j) / (|f1|^2 + |f2|^2), so
/// f1 phi1 + f2 phi2 = 1 holds exactly.
inline Complex corona_phi1(const CoronaData& d, Complex z) {
    return std::conj(d.f1.eval(z)) / d.joint_modulus(z);
}

inline Complex corona_phi2(const CoronaData& d, Complex z) {
    return std::conj(d.f2.eval(z)) / d.joint_modulus(z);
}

/// dbar of the correction equation: psi = conj(f1 f2' - f2 f1') / S^2,
/// obtained by differentiating phi_2 = conj(f2)/S in the anti-holomorphic
/// direction. Both defining expressions collapse to this closed form.
inline Complex corona_psi(const CoronaData& d, Complex z) {
    Complex w = d.f1.eval(z) * d.df2.eval(z) - d.f2.eval(z) * d.df1.eval(z);
    double s = d.joint_modulus(z);
    return std::conj(w) / (s * s);
}

struct SmoothSolution {
    std::vector<Complex> phi1;
    std::vector<Complex> phi2;
};

inline SmoothSolution smooth_solution(const CoronaData& d, const DiskQuadrature& q) {
    const int nr = q.radial_count();
    const int na = q.angular.n;
    SmoothSolution out;
    out.phi1.resize(static_cast<std::size_t>(nr) * na);
    out.phi2.resize(static_cast<std::size_t>(nr) * na);
    parallel_for(nr, [&](std::size_t i) {
        for (int k = 0; k < na; ++k) {
            Complex z = q.node(static_cast<int>(i), k);
            std::size_t idx = i * na + k;
            out.phi1[idx] = corona_phi1(d, z);
            out.phi2[idx] = corona_phi2(d, z);
        }
    });
    return out;
}

inline std::vector<Complex> dbar_data(const CoronaData& d, const DiskQuadrature& q) {
    const int nr = q.radial_count();
    const int na = q.angular.n;
    std::vector<Complex> psi(static_cast<std::size_t>(nr) * na);
    parallel_for(nr, [&](std::size_t i) {
        for (int k = 0; k < na; ++k) psi[i * na + k] = corona_psi(d, q.node(static_cast<int>(i), k));
    });
    return psi;
}

/// Value and Wirtinger derivatives of a smooth density at a point.
struct LocalJet {
    Complex value{0.0, 0.0};
    Complex d_z{0.0, 0.0};
    Complex d_zbar{0.0, 0.0};
};

/// Solid Cauchy transform -(1/pi) integral of psi(zeta)/(zeta - z) over the
/// disk, the convention under which dbar of the transform is psi.
///
/// The kernel's singularity is removed by subtracting the first-order local
/// model of psi at z under a radial cutoff bump centered there. The bump
/// integrates the kernel and its conj(zeta - z) moment to zero by symmetry,
/// and the (zeta - z) moment has the closed form used below, so the
/// subtraction changes nothing in exact arithmetic while the quadrature
/// only ever sees an integrand vanishing linearly at z.
class CauchyTransform {
public:
    CauchyTransform(std::shared_ptr<const DiskQuadrature> quad, std::vector<Complex> psi_nodes,
                    std::function<LocalJet(Complex)> psi_jet)
        : quad_(std::move(quad)), psi_(std::move(psi_nodes)), jet_(std::move(psi_jet)) {
        double h = 0.0;
        const auto& q = *quad_;
        for (int i = 1; i < q.radial_count(); ++i) h = std::max(h, q.radius[i] - q.radius[i - 1]);
        h = std::max(h, kTwoPi / q.angular.n);
        cell_scale_ = h;
        cutoff_radius_ = 16.0 * h;
        nodes_.resize(psi_.size());
        for (int i = 0; i < q.radial_count(); ++i) {
            for (int k = 0; k < q.angular.n; ++k) {
                nodes_[static_cast<std::size_t>(i) * q.angular.n + k] = q.node(i, k);
            }
        }
    }

    /// Convenience constructor for densities given without derivatives; the
    /// subtraction then uses the zeroth-order model only.
    CauchyTransform(std::shared_ptr<const DiskQuadrature> quad, std::vector<Complex> psi_nodes,
                    std::function<Complex(Complex)> psi_at)
        : CauchyTransform(std::move(quad), std::move(psi_nodes),
                          std::function<LocalJet(Complex)>(
                              [f = std::move(psi_at)](Complex z) { return LocalJet{f(z), {0.0, 0.0}, {0.0, 0.0}}; })) {}

    Complex operator()(Complex z) const {
        const auto& q = *quad_;
        const int nr = q.radial_count();
        const int na = q.angular.n;
        const double rho = std::min(cutoff_radius_, 0.9 * (1.0 - std::abs(z)));
        const bool subtract = rho > 2.0 * cell_scale_;
        LocalJet jet;
        if (subtract) jet = jet_(z);
        Complex acc{0.0, 0.0};
        for (int i = 0; i < nr; ++i) {
            // nodes with |radius - |z|| > rho cannot be inside the bump
            double ring_gap = std::abs(q.radius[i] - std::abs(z));
            double wt = q.area_weight(i) * kTwoPi;
            Complex row{0.0, 0.0};
            const Complex* nodes = nodes_.data() + static_cast<std::size_t>(i) * na;
            const Complex* psi = psi_.data() + static_cast<std::size_t>(i) * na;
            if (!subtract || ring_gap > rho) {
                for (int k = 0; k < na; ++k) {
                    Complex dz = nodes[k] - z;
                    double n2 = std::norm(dz);
                    if (n2 < 1e-26) continue;
                    row += psi[k] * std::conj(dz) / n2;
                }
            } else {
                for (int k = 0; k < na; ++k) {
                    Complex dz = nodes[k] - z;
                    double n2 = std::norm(dz);
                    if (n2 < 1e-26) continue;
                    Complex model = jet.value + jet.d_z * dz + jet.d_zbar * std::conj(dz);
                    row += (psi[k] - model * bump(std::sqrt(n2) / rho)) * std::conj(dz) / n2;
                }
            }
            acc += wt * row;
        }
        // (zeta - z)/(zeta - z) integrates the bare bump: 2 pi rho^2 * 2/7
        // for the quintic profile below.
        if (subtract) acc += jet.d_z * (kTwoPi * 2.0 / 7.0) * rho * rho;
        return -acc / kPi;
    }

    const DiskQuadrature& quadrature() const { return *quad_; }

private:
    // C^2 cutoff: identically 1 below t = 1/2, identically 0 above t = 1.
    static double bump(double t) {
        if (t <= 0.5) return 1.0;
        if (t >= 1.0) return 0.0;
        double s = (t - 0.5) * 2.0;
        return 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
    }

    std::shared_ptr<const DiskQuadrature> quad_;
    std::vector<Complex> psi_;
    std::function<LocalJet(Complex)> jet_;
    std::vector<Complex> nodes_;
    double cell_scale_ = 0.0;
    double cutoff_radius_ = 0.0;
};

/// psi with its Wirtinger derivatives: with W = f1 f2' - f2 f1' and
/// S = |f1|^2 + |f2|^2,
///   d/dz    psi = -2 conj(W) dS / S^3,          dS = f1' conj(f1) + f2' conj(f2)
///   d/dzbar psi = conj(W')/S^2 - 2 conj(W) conj(dS) / S^3,  W' = f1 f2'' - f2 f1''.
inline LocalJet corona_psi_jet(const CoronaData& d, Complex z) {
    Complex v1 = d.f1.eval(z), v2 = d.f2.eval(z);
    Complex g1 = d.df1.eval(z), g2 = d.df2.eval(z);
    Complex h1 = d.ddf1.eval(z), h2 = d.ddf2.eval(z);
    Complex w = v1 * g2 - v2 * g1;
    Complex wp = v1 * h2 - v2 * h1;
    Complex ds = g1 * std::conj(v1) + g2 * std::conj(v2);
    double s = std::norm(v1) + std::norm(v2);
    double s2 = s * s;
    double s3 = s2 * s;
    LocalJet jet;
    jet.value = std::conj(w) / s2;
    jet.d_z = -2.0 * std::conj(w) * ds / s3;
    jet.d_zbar = std::conj(wp) / s2 - 2.0 * std::conj(w) * std::conj(ds) / s3;
    return jet;
}

struct CoronaSolution {
    BoundarySamples g1_boundary;
    BoundarySamples g2_boundary;
    std::function<Complex(Complex)> g1_at;
    std::function<Complex(Complex)> g2_at;
    std::function<Complex(Complex)> v_at;
    double distance = 0.0;  // weighted-H^2 distance of the transform's trace
    double k_delta = 0.0;   // pointwise bound 2/sqrt(delta) for |phi1| + |phi2|
    double norm_g1 = 0.0;
    double norm_g2 = 0.0;
    double budget = 0.0;  // k_delta + distance
    PowerSeries correction;
    // Measured box-scan constant of |psi| dA. Reported as data; no claim is
    // made about its dependence on delta.
    double psi_box_constant = 0.0;
};

/// Full corona pipeline: smooth solution, dbar data, Cauchy transform,
/// holomorphic correction of the transform through the weighted projection,
/// and assembly g1 = phi1 + f2 v, g2 = phi2 - f1 v.
inline CoronaSolution corona_solve(const CoronaData& d, const Weight& w, int n_radial = 200,
                                   int n_angular = 512) {
    auto quad = std::make_shared<const DiskQuadrature>(make_disk_quadrature(n_radial, n_angular));
    std::vector<Complex> psi = dbar_data(d, *quad);

    // Box scan of |psi| dA, assembled as one density ring per radial node.
    double psi_box = 0.0;
    double psi_sup = 0.0;
    for (const Complex& v : psi) psi_sup = std::max(psi_sup, std::abs(v));
    if (psi_sup > 1e-15) {
        std::vector<Ring> rows;
        rows.reserve(quad->radial_count());
        for (int i = 0; i < quad->radial_count(); ++i) {
            Ring row;
            row.radius = quad->radius[i];
            row.density.resize(quad->angular.n);
            double scale = quad->radius[i] * quad->radial_weight[i] * kTwoPi;
            double row_max = 0.0;
            for (int k = 0; k < quad->angular.n; ++k) {
                row.density[k] = scale * std::abs(psi[static_cast<std::size_t>(i) * quad->angular.n + k]);
                row_max = std::max(row_max, row.density[k]);
            }
            if (row_max > 0.0) rows.push_back(std::move(row));
        }
        psi_box = box_constant(make_disk_measure(quad->angular, std::move(rows), {})).constant;
    }

    auto transform = std::make_shared<const CauchyTransform>(
        quad, std::move(psi),
        std::function<LocalJet(Complex)>([d](Complex z) { return corona_psi_jet(d, z); }));

    const CircleGrid& g = w.grid;
    BoundarySamples trace{g, std::vector<Complex>(g.n)};
    parallel_for(g.n, [&](std::size_t k) { trace.values[k] = (*transform)(g.node(static_cast<int>(k))); });

    DistanceResult dist = dist_h2(trace, w);
    PowerSeries correction = dist.best_approximant;

    CoronaSolution sol;
    sol.distance = dist.distance;
    sol.k_delta = 2.0 / std::sqrt(d.delta);
    sol.psi_box_constant = psi_box;
    sol.correction = correction;
    sol.v_at = [transform, correction](Complex z) { return (*transform)(z) - correction.eval(z); };
    CoronaData data = d;
    sol.g1_at = [data, v = sol.v_at](Complex z) { return corona_phi1(data, z) + data.f2.eval(z) * v(z); };
    sol.g2_at = [data, v = sol.v_at](Complex z) { return corona_phi2(data, z) - data.f1.eval(z) * v(z); };

    // On the grid, v is exactly the projection residual, so its weighted
    // L^2 norm reproduces the distance.
    sol.g1_boundary = BoundarySamples{g, std::vector<Complex>(g.n)};
    sol.g2_boundary = BoundarySamples{g, std::vector<Complex>(g.n)};
    for (int k = 0; k < g.n; ++k) {
        Complex z = g.node(k);
        Complex v = dist.residual.values[k];
        sol.g1_boundary.values[k] = corona_phi1(d, z) + d.f2.eval(z) * v;
        sol.g2_boundary.values[k] = corona_phi2(d, z) - d.f1.eval(z) * v;
    }
    auto weighted_l2 = [&](const BoundarySamples& s) {
        double acc = 0.0;
        for (int k = 0; k < g.n; ++k) acc += std::norm(s.values[k]) * w.samples[k];
        return std::sqrt(acc / g.n);
    };
    sol.norm_g1 = weighted_l2(sol.g1_boundary);
    sol.norm_g2 = weighted_l2(sol.g2_boundary);
    sol.budget = sol.k_delta + sol.distance;
    return sol;
}

struct CoronaReport {
    double bezout_interior = 0.0;
    double bezout_boundary = 0.0;
    double dbar_rel_g1 = 0.0;
    double dbar_rel_g2 = 0.0;
    double sup_g1 = 0.0;
    double sup_g2 = 0.0;
    double norm_g1 = 0.0;
    double norm_g2 = 0.0;
    double budget = 0.0;
    bool norms_within_budget = false;
};

/// Finite-difference Wirtinger derivatives (d/dzbar, d/dz).
inline std::pair<Complex, Complex> wirtinger_fd(const std::function<Complex(Complex)>& f, Complex z, double h) {
    Complex fxp = f(z + h), fxm = f(z - h);
    Complex fyp = f(z + h * kI), fym = f(z - h * kI);
    Complex dx = (fxp - fxm) / (2.0 * h);
    Complex dy = (fyp - fym) / (2.0 * h);
    return {0.5 * (dx + kI * dy), 0.5 * (dx - kI * dy)};
}

inline CoronaReport verify_corona(const CoronaSolution& sol, const CoronaData& d, int interior_radii = 64,
                                  int interior_angles = 256, double fd_step = 2e-3) {
    CoronaReport rep;
    rep.norm_g1 = sol.norm_g1;
    rep.norm_g2 = sol.norm_g2;
    rep.budget = sol.budget;

    std::vector<double> bezout_rows(interior_radii, 0.0);
    std::vector<double> sup1_rows(interior_radii, 0.0), sup2_rows(interior_radii, 0.0);
    parallel_for(interior_radii, [&](std::size_t i) {
        double r = (static_cast<double>(i) + 0.5) / interior_radii * 0.95;
        double worst = 0.0, s1 = 0.0, s2 = 0.0;
        for (int k = 0; k < interior_angles; ++k) {
            Complex z = std::polar(r, kTwoPi * k / interior_angles);
            Complex v = sol.v_at(z);
            Complex g1 = corona_phi1(d, z) + d.f2.eval(z) * v;
            Complex g2 = corona_phi2(d, z) - d.f1.eval(z) * v;
            worst = std::max(worst, std::abs(d.f1.eval(z) * g1 + d.f2.eval(z) * g2 - 1.0));
            s1 = std::max(s1, std::abs(g1));
            s2 = std::max(s2, std::abs(g2));
        }
        bezout_rows[i] = worst;
        sup1_rows[i] = s1;
        sup2_rows[i] = s2;
    });
    for (int i = 0; i < interior_radii; ++i) {
        rep.bezout_interior = std::max(rep.bezout_interior, bezout_rows[i]);
        rep.sup_g1 = std::max(rep.sup_g1, sup1_rows[i]);
        rep.sup_g2 = std::max(rep.sup_g2, sup2_rows[i]);
    }

    const CircleGrid& g = sol.g1_boundary.grid;
    for (int k = 0; k < g.n; ++k) {
        Complex z = g.node(k);
        Complex val = d.f1.eval(z) * sol.g1_boundary.values[k] + d.f2.eval(z) * sol.g2_boundary.values[k];
        rep.bezout_boundary = std::max(rep.bezout_boundary, std::abs(val - 1.0));
    }

    // dbar residual relative to the holomorphic derivative scale, on a
    // small interior sample away from the rim. For solutions that are
    // nearly constant the derivative scale degenerates, so the function's
    // own sup serves as a floor.
    int nfd_r = 6, nfd_a = 16;
    double worst1 = 0.0, worst2 = 0.0, scale1 = 0.0, scale2 = 0.0;
    std::vector<double> w1(nfd_r, 0.0), w2(nfd_r, 0.0), s1(nfd_r, 0.0), s2(nfd_r, 0.0);
    parallel_for(nfd_r, [&](std::size_t i) {
        double r = 0.1 + 0.6 * static_cast<double>(i) / (nfd_r - 1);
        for (int k = 0; k < nfd_a; ++k) {
            Complex z = std::polar(r, kTwoPi * (k + 0.3) / nfd_a);
            auto [db1, dz1] = wirtinger_fd(sol.g1_at, z, fd_step);
            auto [db2, dz2] = wirtinger_fd(sol.g2_at, z, fd_step);
            w1[i] = std::max(w1[i], std::abs(db1));
            w2[i] = std::max(w2[i], std::abs(db2));
            s1[i] = std::max({s1[i], std::abs(dz1), std::abs(sol.g1_at(z))});
            s2[i] = std::max({s2[i], std::abs(dz2), std::abs(sol.g2_at(z))});
        }
    });
    for (int i = 0; i < nfd_r; ++i) {
        worst1 = std::max(worst1, w1[i]);
        worst2 = std::max(worst2, w2[i]);
        scale1 = std::max(scale1, s1[i]);
        scale2 = std::max(scale2, s2[i]);
    }
    // Common scale: the pair identity keeps max_j |g_j| away from zero, so
    // a component that happens to vanish is still rated against the pair.
    double scale = std::max({scale1, scale2, 1e-12});
    rep.dbar_rel_g1 = worst1 / scale;
    rep.dbar_rel_g2 = worst2 / scale;
    rep.norms_within_budget = sol.norm_g1 <= sol.budget + 1e-6 && sol.norm_g2 <= sol.budget + 1e-6;
    return rep;
}

}  // namespace hardy
