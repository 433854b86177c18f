#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/carleson.hpp"
#include "hardy/duality.hpp"
#include "hardy/szego.hpp"

namespace hardy {

struct PointSequence {
    std::vector<Complex> points;
};

inline PointSequence make_point_sequence(std::vector<Complex> points) {
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (std::abs(points[j]) >= 1.0) {
            throw std::invalid_argument("make_point_sequence: points must lie in the open disk");
        }
        for (std::size_t k = 0; k < j; ++k) {
            if (points[j] == points[k]) throw std::invalid_argument("make_point_sequence: duplicate point");
        }
    }
    return PointSequence{std::move(points)};
}

struct InterpolationProblem {
    PointSequence sequence;
    std::vector<Complex> targets;
    double sup_target = 0.0;
};

inline InterpolationProblem make_problem(PointSequence seq, std::vector<Complex> targets) {
    if (seq.points.size() != targets.size()) {
        throw std::invalid_argument("make_problem: node and target counts differ");
    }
    double sup = 0.0;
    for (const Complex& s : targets) sup = std::max(sup, std::abs(s));
    return InterpolationProblem{std::move(seq), std::move(targets), sup};
}

inline Complex pseudo_hyperbolic_factor(Complex z, Complex w) {
    return (z - w) / (1.0 - std::conj(w) * z);
}

/// Uniform separation: the worst pseudo-hyperbolic product over omitted
/// points. Equals one for a singleton (empty product).
inline double sparsity_delta(const PointSequence& seq) {
    const auto& z = seq.points;
    double delta = 1.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
        double prod = 1.0;
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (j == k) continue;
            double factor = std::abs(pseudo_hyperbolic_factor(z[j], z[k]));
            if (factor < 1e-15) throw std::invalid_argument("sparsity_delta: coincident points give delta = 0");
            prod *= factor;
        }
        delta = std::min(delta, prod);
    }
    return delta;
}

/// Blaschke product over the sequence, optionally omitting one index.
inline AnalyticFn blaschke(const PointSequence& seq, int exclude = -1) {
    if (exclude >= static_cast<int>(seq.points.size())) {
        throw std::invalid_argument("blaschke: exclusion index out of range");
    }
    BlaschkeRational b;
    for (std::size_t j = 0; j < seq.points.size(); ++j) {
        if (static_cast<int>(j) == exclude) continue;
        b.zeros.push_back(seq.points[j]);
    }
    return AnalyticFn(std::move(b));
}

struct CandidatePhi {
    BoundarySamples samples;
    std::vector<Complex> coefficients;  // C_j = s_j / B_j(z_j)
};

/// The rational candidate phi = sum C_j (1 - conj(z_j) z)/(z - z_j), whose
/// product with the full Blaschke product interpolates the targets.
inline CandidatePhi candidate_phi(const InterpolationProblem& prob, const CircleGrid& grid) {
    const auto& z = prob.sequence.points;
    const std::size_t n = z.size();
    std::vector<Complex> coeff(n);
    for (std::size_t j = 0; j < n; ++j) {
        AnalyticFn bj = blaschke(prob.sequence, static_cast<int>(j));
        coeff[j] = prob.targets[j] / bj(z[j]);
    }
    BoundarySamples samples{grid, std::vector<Complex>(grid.n, Complex{0.0, 0.0})};
    for (int k = 0; k < grid.n; ++k) {
        Complex zz = grid.node(k);
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            acc += coeff[j] * (1.0 - std::conj(z[j]) * zz) / (zz - z[j]);
        }
        samples.values[k] = acc;
    }
    return CandidatePhi{std::move(samples), std::move(coeff)};
}

struct MinNormResult {
    AnalyticFn interpolant;
    double norm = 0.0;
    double gram_condition = 0.0;
    std::vector<Complex> coefficients;
};

/// Minimal weighted-H^2 norm interpolant as a kernel combination: solve the
/// Gram system G c = s with G_{jk} = k(z_j, z_k); the norm is sqrt(c* s).
inline MinNormResult min_norm_interpolant(const InterpolationProblem& prob, const Weight& w) {
    const auto& z = prob.sequence.points;
    const int n = static_cast<int>(z.size());
    if (n == 0) throw std::invalid_argument("min_norm_interpolant: empty problem");
    WeightedSzegoKernel kernel(w);

    Eigen::MatrixXcd gram(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) gram(j, k) = kernel(z[j], z[k]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (gram + gram.adjoint()));
    double lo = eig.eigenvalues().minCoeff();
    double hi = eig.eigenvalues().maxCoeff();
    double condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (!(lo > 0.0) || condition > 1e12) {
        throw std::runtime_error("min_norm_interpolant: Gram matrix too ill-conditioned (condition " +
                                 std::to_string(condition) + ")");
    }
    Eigen::VectorXcd rhs(n);
    for (int j = 0; j < n; ++j) rhs(j) = prob.targets[j];
    Eigen::VectorXcd c = gram.ldlt().solve(rhs);

    double norm2 = (c.adjoint() * rhs)(0, 0).real();
    std::vector<Complex> coeff(c.data(), c.data() + n);
    std::vector<Complex> nodes = z;

    AnalyticFn f(AnalyticFn::Evaluator{
        [kernel, coeff, nodes](Complex zz) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < nodes.size(); ++k) acc += coeff[k] * kernel(zz, nodes[k]);
            return acc;
        },
        [kernel, coeff, nodes](Complex zz) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < nodes.size(); ++k) acc += coeff[k] * kernel.deriv_z(zz, nodes[k]);
            return acc;
        },
        "min-norm-interpolant"});
    return MinNormResult{std::move(f), std::sqrt(std::max(0.0, norm2)), condition, std::move(coeff)};
}

namespace detail {
inline bool pick_matrix_psd(const std::vector<Complex>& z, const std::vector<Complex>& s, double radius) {
    const int n = static_cast<int>(z.size());
    Eigen::MatrixXcd pick(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            pick(j, k) = (radius * radius - s[j] * std::conj(s[k])) / (1.0 - z[j] * std::conj(z[k]));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (pick + pick.adjoint()));
    double scale = std::max(1.0, std::abs(eig.eigenvalues().maxCoeff()));
    return eig.eigenvalues().minCoeff() >= -1e-12 * scale;
}
}  // namespace detail

/// Minimal sup norm over bounded analytic interpolants, located by
/// bisection on positive semidefiniteness of the Pick matrix.
inline double pick_min_norm(const InterpolationProblem& prob, double tol = 1e-8) {
    const auto& z = prob.sequence.points;
    const auto& s = prob.targets;
    if (z.empty()) return 0.0;
    double delta = sparsity_delta(prob.sequence);

    double lo = 0.0;
    for (const Complex& v : s) lo = std::max(lo, std::abs(v));
    if (lo == 0.0) return 0.0;
    if (detail::pick_matrix_psd(z, s, lo)) return lo;

    double hi = std::max(lo * (1.0 + tol), prob.sup_target / delta);
    int guard = 0;
    while (!detail::pick_matrix_psd(z, s, hi)) {
        hi *= 2.0;
        if (++guard > 60) throw std::runtime_error("pick_min_norm: failed to bracket the minimal norm");
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (detail::pick_matrix_psd(z, s, mid)) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

struct BridgeReport {
    double delta = 0.0;
    double pick_norm = 0.0;
    double carleson_constant = 0.0;  // embedding constant of the node measure
    double c_prime = 0.0;            // carleson_constant^2 / delta
    double sup_target = 0.0;
    double sup_min_norm = 0.0;
    double gap_ratio = 0.0;  // sup over weights of min norm, over the Pick norm
    std::vector<double> min_norms;
    bool ball_inclusion_ok = false;
    bool sparse_bound_ok = false;
};

/// Node measure nu = sum (1 - |z_j|^2) delta_{z_j} of a sequence.
inline DiskMeasure node_measure(const PointSequence& seq, const CircleGrid& grid) {
    std::vector<Atom> atoms;
    atoms.reserve(seq.points.size());
    for (const Complex& z : seq.points) atoms.push_back(Atom{z, 1.0 - std::norm(z)});
    return make_disk_measure(grid, {}, std::move(atoms));
}

/// Sweep of minimal weighted-H^2 norms over a family of unit-mass weights,
/// compared against the bounded-interpolation norm and the sparse-sequence
/// bound (embedding constant squared over delta).
inline BridgeReport bridge_report(const InterpolationProblem& prob, const std::vector<Weight>& family,
                                  const CircleGrid& grid) {
    BridgeReport rep;
    rep.delta = sparsity_delta(prob.sequence);
    rep.pick_norm = pick_min_norm(prob);
    rep.sup_target = prob.sup_target;

    DiskMeasure nu = node_measure(prob.sequence, grid);
    std::vector<Complex> centers = prob.sequence.points;
    centers.push_back(Complex{0.0, 0.0});
    for (const Complex& z : prob.sequence.points) centers.push_back(0.5 * z);
    Weight flat = constant_weight(grid);
    rep.carleson_constant = embedding_constant(nu, flat, 2.0, centers).constant;
    rep.c_prime = rep.carleson_constant * rep.carleson_constant / rep.delta;

    rep.min_norms.resize(family.size());
    std::vector<char> feasible(family.size(), 1);
    parallel_for(family.size(), [&](std::size_t i) {
        if (std::abs(family[i].mass - 1.0) > 1e-9) {
            feasible[i] = 0;
            return;
        }
        rep.min_norms[i] = min_norm_interpolant(prob, family[i]).norm;
    });
    for (char ok : feasible) {
        if (!ok) throw std::invalid_argument("bridge_report: family weights must have unit mass");
    }

    rep.sup_min_norm = 0.0;
    for (double v : rep.min_norms) rep.sup_min_norm = std::max(rep.sup_min_norm, v);
    rep.gap_ratio = rep.pick_norm > 0.0 ? rep.sup_min_norm / rep.pick_norm : 0.0;
    rep.ball_inclusion_ok = rep.sup_min_norm <= rep.pick_norm + 1e-6;
    rep.sparse_bound_ok = rep.sup_min_norm <= rep.c_prime * rep.sup_target + 1e-9;
    return rep;
}

}  // namespace hardy
