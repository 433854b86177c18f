#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hardy/interpolation.hpp"
#include "hardy/norms.hpp"
#include "helpers.hpp"

using namespace hardy;
using namespace hardy::testing;

namespace {

PointSequence dyadic_points(int count) {
    std::vector<Complex> pts;
    for (int j = 1; j <= count; ++j) pts.push_back(Complex{1.0 - std::ldexp(1.0, -j), 0.0});
    return make_point_sequence(std::move(pts));
}

}  // namespace

TEST_CASE("sparsity_delta") {
    CHECK(sparsity_delta(make_point_sequence({Complex{0.2, 0.1}})) == doctest::Approx(1.0));

    PointSequence two = make_point_sequence({Complex{0.0, 0.0}, Complex{0.5, 0.0}});
    CHECK(sparsity_delta(two) == doctest::Approx(0.5).epsilon(1e-14));

    PointSequence dy = dyadic_points(8);
    double delta = sparsity_delta(dy);
    CHECK(delta > 0.0);
    CHECK(delta < 1.0);

    CHECK_THROWS_AS(make_point_sequence({Complex{0.3, 0.0}, Complex{0.3, 0.0}}), std::invalid_argument);
    PointSequence nearly{{Complex{0.3, 0.0}, Complex{0.3 + 1e-16, 0.0}}};
    CHECK_THROWS_AS(sparsity_delta(nearly), std::invalid_argument);
}

TEST_CASE("blaschke products") {
    PointSequence zero = make_point_sequence({Complex{0.0, 0.0}});
    AnalyticFn b0 = blaschke(zero);
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        Complex z = rng.in_disk(0.99);
        CHECK(std::abs(b0(z) - z) < 1e-15);
    }

    std::vector<Complex> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(rng.in_disk(0.9));
    PointSequence seq = make_point_sequence(pts);
    AnalyticFn b = blaschke(seq);
    for (int k = 0; k < 64; ++k) {
        Complex z = std::polar(1.0, kTwoPi * k / 64.0);
        CHECK(std::abs(std::abs(b(z)) - 1.0) < 1e-12);
    }
    for (int i = 0; i < 30; ++i) {
        CHECK(std::abs(b(rng.in_disk(0.99))) < 1.0);
    }

    double delta = sparsity_delta(seq);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        AnalyticFn bk = blaschke(seq, static_cast<int>(k));
        CHECK(std::abs(bk(pts[k])) >= delta - 1e-12);
    }

    CHECK_THROWS_AS(blaschke(seq, 6), std::invalid_argument);
}

TEST_CASE("candidate_phi") {
    CircleGrid g = make_grid(256);

    InterpolationProblem single = make_problem(make_point_sequence({Complex{0.0, 0.0}}), {Complex{1.0, 0.0}});
    CandidatePhi cp = candidate_phi(single, g);
    CHECK(std::abs(cp.coefficients[0] - 1.0) < 1e-14);
    for (int k = 0; k < g.n; ++k) {
        CHECK(std::abs(cp.samples.values[k] - 1.0 / g.node(k)) < 1e-13);
    }

    Rng rng(11);
    std::vector<Complex> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(rng.in_disk(0.8));
    PointSequence seq = make_point_sequence(pts);
    std::vector<Complex> targets;
    for (int i = 0; i < 5; ++i) targets.push_back(rng.on_circle());
    InterpolationProblem prob = make_problem(seq, targets);
    CandidatePhi c = candidate_phi(prob, g);

    double delta = sparsity_delta(seq);
    for (const Complex& cj : c.coefficients) CHECK(std::abs(cj) <= prob.sup_target / delta + 1e-12);

    // phi times the full product interpolates: phi B = sum C_k B_k.
    for (std::size_t j = 0; j < pts.size(); ++j) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < pts.size(); ++k) {
            acc += c.coefficients[k] * blaschke(seq, static_cast<int>(k))(pts[j]);
        }
        CHECK(std::abs(acc - targets[j]) < 1e-12);
    }

    InterpolationProblem zero = make_problem(seq, std::vector<Complex>(5, Complex{0.0, 0.0}));
    CandidatePhi cz = candidate_phi(zero, g);
    for (const auto& v : cz.samples.values) CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("weighted_szego_kernel") {
    CircleGrid g = make_grid(512);
    Weight flat = constant_weight(g);
    WeightedSzegoKernel k0(flat);
    Rng rng(21);
    for (int i = 0; i < 10; ++i) {
        Complex z = rng.in_disk(0.9), zeta = rng.in_disk(0.9);
        CHECK(std::abs(k0(z, zeta) - 1.0 / (1.0 - std::conj(zeta) * z)) < 1e-12);
    }
    CHECK(std::abs(k0(Complex{0, 0}, Complex{0, 0}) - 1.0) < 1e-13);

    std::vector<double> raw(g.n);
    for (int k = 0; k < g.n; ++k) raw[k] = (5.0 + 4.0 * std::cos(g.angle(k))) / 5.0;
    Weight w = validate_and_normalize(g, raw, false);
    WeightedSzegoKernel kw(w);
    CHECK(std::abs(kw(Complex{0, 0}, Complex{0, 0}) - 1.25) < 1e-9);

    // Hermitian symmetry.
    for (int i = 0; i < 10; ++i) {
        Complex z = rng.in_disk(0.9), zeta = rng.in_disk(0.9);
        CHECK(std::abs(kw(z, zeta) - std::conj(kw(zeta, z))) < 1e-12);
    }

    // Reproducing property through the boundary quadrature.
    PowerSeries f;
    f.c = {Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}};  // z^2
    for (int i = 0; i < 5; ++i) {
        Complex zeta = rng.in_disk(0.8);
        Complex acc{0.0, 0.0};
        for (int k = 0; k < g.n; ++k) {
            Complex z = g.node(k);
            acc += f.eval(z) * std::conj(kw(z, zeta)) * w.samples[k];
        }
        acc /= static_cast<double>(g.n);
        CHECK(std::abs(acc - f.eval(zeta)) < 1e-8);
    }
}

TEST_CASE("min_norm_interpolant closed forms") {
    CircleGrid g = make_grid(512);
    Weight flat = constant_weight(g);

    InterpolationProblem single = make_problem(make_point_sequence({Complex{0.0, 0.0}}), {Complex{1.0, 0.0}});
    MinNormResult r1 = min_norm_interpolant(single, flat);
    CHECK(r1.norm == doctest::Approx(1.0).epsilon(1e-12));
    Rng rng(5);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(r1.interpolant(rng.in_disk(0.9)) - 1.0) < 1e-10);

    // Two nodes {0, r}, targets {0, s}: eliminating the Gram system by hand
    // gives norm = |s| sqrt(1 - r^2) / r.
    double r = 0.6;
    Complex s{0.3, 0.4};
    InterpolationProblem two =
        make_problem(make_point_sequence({Complex{0.0, 0.0}, Complex{r, 0.0}}), {Complex{0.0, 0.0}, s});
    MinNormResult r2 = min_norm_interpolant(two, flat);
    CHECK(r2.norm == doctest::Approx(std::abs(s) * std::sqrt(1.0 - r * r) / r).epsilon(1e-10));
    CHECK(std::abs(r2.interpolant(Complex{0.0, 0.0})) < 1e-9);
    CHECK(std::abs(r2.interpolant(Complex{r, 0.0}) - s) < 1e-8);

    // Ill-conditioned Gram: two nearly coincident nodes.
    InterpolationProblem close = make_problem(
        make_point_sequence({Complex{0.5, 0.0}, Complex{0.5 + 1e-12, 0.0}}), {Complex{1.0, 0.0}, Complex{1.0, 0.0}});
    CHECK_THROWS_AS(min_norm_interpolant(close, flat), std::runtime_error);
}

TEST_CASE("min norm solves meet constraints and shrink when constraints drop") {
    CircleGrid g = make_grid(512);
    Rng rng(31);
    auto weights = random_weight_family(g, 3, 4, 0.3, 606);
    for (const Weight& w : weights) {
        std::vector<Complex> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(rng.in_disk(0.85));
        std::vector<Complex> targets;
        for (int i = 0; i < 6; ++i) targets.push_back(rng.uniform_complex(1.0));
        InterpolationProblem prob = make_problem(make_point_sequence(pts), targets);
        MinNormResult full = min_norm_interpolant(prob, w);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            CHECK(std::abs(full.interpolant(pts[j]) - targets[j]) < 1e-8);
        }
        // drop the last constraint
        std::vector<Complex> pts2(pts.begin(), pts.end() - 1);
        std::vector<Complex> targets2(targets.begin(), targets.end() - 1);
        MinNormResult reduced = min_norm_interpolant(make_problem(make_point_sequence(pts2), targets2), w);
        CHECK(reduced.norm <= full.norm + 1e-10);
    }
}

TEST_CASE("min norm equals the distance realized by the candidate coset") {
    CircleGrid g = make_grid(4096);
    Weight flat = constant_weight(g);
    Rng rng(47);

    PointSequence seq = dyadic_points(5);
    std::vector<Complex> targets;
    for (int i = 0; i < 5; ++i) targets.push_back(rng.on_circle());
    InterpolationProblem prob = make_problem(seq, targets);

    MinNormResult mn = min_norm_interpolant(prob, flat);
    CandidatePhi cp = candidate_phi(prob, g);
    DistanceResult d = dist_h2(cp.samples, flat);
    CHECK(relative_gap(mn.norm, d.distance) < 1e-6);
}

TEST_CASE("pick_min_norm closed forms") {
    InterpolationProblem single = make_problem(make_point_sequence({Complex{0.0, 0.0}}), {Complex{0.5, 0.0}});
    CHECK(pick_min_norm(single) == doctest::Approx(0.5).epsilon(1e-8));

    // f(0) = 0 forces |f(r)| <= R r by the Schwarz lemma, so R* = |s|/r.
    double r = 0.4;
    Complex s{0.2, -0.1};
    InterpolationProblem two =
        make_problem(make_point_sequence({Complex{0.0, 0.0}, Complex{r, 0.0}}), {Complex{0.0, 0.0}, s});
    CHECK(pick_min_norm(two) == doctest::Approx(std::abs(s) / r).epsilon(1e-7));

    // Targets sampled from a unit-modulus Blaschke product are
    // interpolated by that product, so the minimal norm is at most one.
    Rng rng(8);
    std::vector<Complex> aux;
    for (int i = 0; i < 4; ++i) aux.push_back(rng.in_disk(0.7));
    AnalyticFn b = blaschke(make_point_sequence(aux));
    PointSequence nodes = dyadic_points(5);
    std::vector<Complex> targets;
    for (const Complex& z : nodes.points) targets.push_back(b(z));
    CHECK(pick_min_norm(make_problem(nodes, targets)) <= 1.0 + 1e-8);
}

TEST_CASE("bridge report: ball inclusion and the sparse bound") {
    CircleGrid g = make_grid(1024);
    Rng rng(2027);

    PointSequence nodes = dyadic_points(6);
    std::vector<Complex> targets;
    for (int i = 0; i < 6; ++i) targets.push_back(rng.on_circle());
    InterpolationProblem prob = make_problem(nodes, targets);

    // family certified inside E_1 by passing through a ring exhaustion
    auto raw_family = random_weight_family(g, 20, 8, 0.1, 424242);
    std::vector<Weight> family;
    family.reserve(raw_family.size() + 1);
    family.push_back(constant_weight(g));
    for (const Weight& w : raw_family) {
        family.push_back(boundary_weight(ring_exhaustion(w, 0.95).measure));
    }

    BridgeReport rep = bridge_report(prob, family, g);
    CHECK(rep.delta > 0.0);
    CHECK(rep.pick_norm >= prob.sup_target - 1e-9);
    CHECK(rep.ball_inclusion_ok);
    CHECK(rep.sparse_bound_ok);
    CHECK(rep.gap_ratio <= 1.0 + 1e-9);
    for (double v : rep.min_norms) {
        CHECK(v <= rep.pick_norm + 1e-8);
        CHECK(v <= rep.c_prime * rep.sup_target + 1e-9);
    }

    // a richer family can only push the sup up
    std::vector<Weight> smaller(family.begin(), family.begin() + 5);
    BridgeReport rep_small = bridge_report(prob, smaller, g);
    CHECK(rep_small.sup_min_norm <= rep.sup_min_norm + 1e-12);

    // classical-only family keeps the same inclusion
    BridgeReport rep_flat = bridge_report(prob, {constant_weight(g)}, g);
    CHECK(rep_flat.sup_min_norm <= rep_flat.pick_norm + 1e-6);
}

TEST_CASE("averaged-weight comparison for pairs") {
    CircleGrid g = make_grid(512);
    Rng rng(606);
    auto pair = random_weight_family(g, 2, 5, 0.2, 11);
    std::vector<double> mixed(g.n);
    for (int k = 0; k < g.n; ++k) mixed[k] = 0.5 * (pair[0].samples[k] + pair[1].samples[k]);
    Weight u = validate_and_normalize(g, mixed, false);

    for (int trial = 0; trial < 10; ++trial) {
        AnalyticFn f(random_poly(rng, 7));
        double nu = boundary_norm(f, u, 2.0);
        for (const Weight& v : pair) {
            double nv = boundary_norm(f, v, 2.0);
            CHECK(nv * nv <= 2.0 * nu * nu + 1e-10);
        }
    }
}
