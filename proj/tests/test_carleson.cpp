#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hardy/carleson.hpp"
#include "hardy/interpolation.hpp"
#include "helpers.hpp"

using namespace hardy;
using namespace hardy::testing;

TEST_CASE("box scan of the central atom") {
    CircleGrid g = make_grid(256);
    DiskMeasure m = unit_atom_measure(g);
    // No box shallower than h = 1 reaches the origin, so the scan tops out
    // at the widest level h = pi/2 with ratio mass/h = 2/pi.
    BoxConstantResult b = box_constant(m);
    CHECK(b.constant == doctest::Approx(2.0 / kPi).epsilon(1e-12));
    CHECK(b.h == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("box scan catches a near-boundary atom at its own depth") {
    CircleGrid g = make_grid(256);
    DiskMeasure m = make_disk_measure(g, {}, {Atom{Complex{0.9, 0.0}, 0.1}});
    BoxConstantResult b = box_constant(m);
    CHECK(b.constant == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(b.h == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(b.theta == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("box scan of a dyadic node sequence is finite and witnessed") {
    CircleGrid g = make_grid(512);
    std::vector<Complex> pts;
    for (int j = 1; j <= 8; ++j) pts.push_back(Complex{1.0 - std::ldexp(1.0, -j), 0.0});
    DiskMeasure nu = node_measure(make_point_sequence(pts), g);
    BoxConstantResult b = box_constant(nu);
    CHECK(b.constant > 0.0);
    CHECK(b.constant < 10.0);
    CHECK(b.h > 0.0);
}

TEST_CASE("embedding constant of the central atom peaks at the origin") {
    CircleGrid g = make_grid(512);
    DiskMeasure m = unit_atom_measure(g);
    Weight flat = constant_weight(g);
    std::vector<Complex> centers{{0.0, 0.0}, {0.3, 0.1}, {-0.5, 0.2}, {0.0, 0.7}};
    EmbeddingConstantResult e = embedding_constant(m, flat, 2.0, centers);
    CHECK(e.constant == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(e.witness) < 1e-12);

    CHECK(embedding_constant(m, flat, 2.0, {}).constant == 0.0);
}

TEST_CASE("riesz measures embed with constant one against their boundary weight") {
    CircleGrid g = make_grid(1024);
    Rng rng(17);
    std::vector<Complex> centers;
    for (int i = 0; i < 12; ++i) centers.push_back(rng.in_disk(0.9));

    for (int trial = 0; trial < 6; ++trial) {
        Exhaustion e = trial % 2 == 0
                           ? ring_exhaustion(random_weight_family(g, 1, 6, 0.2, 700 + trial)[0], 0.6 + 0.05 * trial)
                           : random_stack_exhaustion(g, 800 + trial);
        Weight alpha = boundary_weight(e.measure);
        EmbeddingConstantResult res = embedding_constant(e.measure, alpha, 2.0, centers);
        CHECK(res.constant <= 1.0 + 1e-9);
        CHECK(res.constant > 0.0);
    }
}

TEST_CASE("doubling the measure doubles both constants") {
    CircleGrid g = make_grid(256);
    Ring ring;
    ring.radius = 0.8;
    ring.density.assign(g.n, 0.0);
    for (int k = 0; k < g.n; ++k) ring.density[k] = 0.5 + 0.3 * std::cos(g.angle(k));
    DiskMeasure m = make_disk_measure(g, {ring}, {Atom{Complex{0.2, 0.5}, 0.4}});

    Ring ring2 = ring;
    for (double& v : ring2.density) v *= 2.0;
    DiskMeasure m2 = make_disk_measure(g, {ring2}, {Atom{Complex{0.2, 0.5}, 0.8}});

    BoxConstantResult b1 = box_constant(m), b2 = box_constant(m2);
    CHECK(b2.constant == doctest::Approx(2.0 * b1.constant).epsilon(1e-12));

    Weight flat = constant_weight(g);
    std::vector<Complex> centers{{0.0, 0.0}, {0.2, 0.5}, {0.6, -0.1}};
    double e1 = embedding_constant(m, flat, 2.0, centers).constant;
    double e2 = embedding_constant(m2, flat, 2.0, centers).constant;
    CHECK(e2 == doctest::Approx(2.0 * e1).epsilon(1e-12));
}

TEST_CASE("embedding stays within the recorded multiple of the box constant") {
    CircleGrid g = make_grid(512);
    Rng rng(23);
    Weight flat = constant_weight(g);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Complex> pts;
        int count = 3 + static_cast<int>(rng.next_u64() % 4);
        for (int i = 0; i < count; ++i) pts.push_back(rng.in_disk(0.95));
        DiskMeasure nu = node_measure(make_point_sequence(pts), g);
        std::vector<Complex> centers = pts;
        centers.push_back(Complex{0.0, 0.0});
        double emb = embedding_constant(nu, flat, 2.0, centers).constant;
        double box = box_constant(nu).constant;
        // corpus-recorded comparability bound for kernel tests vs box scans
        CHECK(emb <= 8.0 * box);
        CHECK(emb > 0.0);
    }
}
