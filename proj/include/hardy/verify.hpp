#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "hardy/carleson.hpp"
#include "hardy/corona.hpp"
#include "hardy/duality.hpp"
#include "hardy/interpolation.hpp"
#include "hardy/norms.hpp"

namespace hardy {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyConfig {
    int grid_n = 1024;
    int disk_radial = 200;
    int disk_angular = 512;
    std::uint64_t seed = 7;
    double tol_scale = 1.0;  // < 1 tightens every tolerance (for negative controls)
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<CheckResult> checks;
    bool all_pass = true;
    double seconds = 0.0;
};

namespace detail {

struct Suite {
    VerifyReport& report;
    double tol_scale;

    void record(const std::string& name, double measured, double tolerance) {
        CheckResult r{name, measured, tolerance * tol_scale, false};
        r.pass = measured <= r.tolerance;
        report.all_pass = report.all_pass && r.pass;
        report.checks.push_back(std::move(r));
    }
};

inline PowerSeries suite_random_poly(Rng& rng, int degree, double box = 1.0) {
    PowerSeries p;
    p.c.resize(static_cast<std::size_t>(degree) + 1);
    for (auto& v : p.c) v = rng.uniform_complex(box);
    return p;
}

inline PowerSeries suite_zero_free_poly(Rng& rng, int degree) {
    PowerSeries p = PowerSeries::constant(Complex{1.0, 0.0});
    for (int k = 0; k < degree; ++k) {
        PowerSeries factor;
        factor.c = {Complex{1.0, 0.0}, rng.in_disk(0.6)};
        p = truncated_product(p, factor, degree);
    }
    return p;
}

inline BoundarySamples suite_band_limited(Rng& rng, const CircleGrid& g, int max_mode, double box = 0.7) {
    std::vector<Complex> modes(2 * max_mode + 1);
    for (auto& v : modes) v = rng.uniform_complex(box);
    BoundarySamples s{g, std::vector<Complex>(g.n)};
    for (int k = 0; k < g.n; ++k) {
        Complex acc{0.0, 0.0};
        for (int m = -max_mode; m <= max_mode; ++m) acc += modes[m + max_mode] * std::polar(1.0, m * g.angle(k));
        s.values[k] = acc;
    }
    return s;
}

inline Exhaustion suite_stack(const CircleGrid& g, std::uint64_t seed) {
    auto parts = random_weight_family(g, 3, 5, 0.2, seed);
    std::vector<double> acc(g.n, 0.0);
    std::vector<Weight> stack;
    for (const Weight& part : parts) {
        for (int k = 0; k < g.n; ++k) acc[k] += part.samples[k] / 3.0;
        stack.push_back(validate_and_normalize(g, acc, false));
    }
    return lsc_stack_to_exhaustion(stack, default_stack_radii(3)).exhaustion;
}

}  // namespace detail

/// Deterministic run of every module invariant at the configured sizes.
/// Failures are report entries, not exceptions.
inline VerifyReport run_verify_suite(const VerifyConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;
    report.config = config;
    detail::Suite suite{report, config.tol_scale};
    CircleGrid g = make_grid(config.grid_n);
    Rng rng(config.seed);

    // ---- circle spectral calculus ----
    {
        BoundarySamples s{g, std::vector<Complex>(g.n)};
        for (auto& v : s.values) v = rng.uniform_complex(2.0);
        BoundarySamples back = to_samples(to_fourier(s), g);
        double worst = 0.0, scale = 0.0;
        for (int k = 0; k < g.n; ++k) {
            worst = std::max(worst, std::abs(back.values[k] - s.values[k]));
            scale = std::max(scale, std::abs(s.values[k]));
        }
        suite.record("fourier.roundtrip", worst / scale, 1e-12);

        FourierSeries f = to_fourier(s);
        FourierSeries once = riesz_project(f);
        FourierSeries twice = riesz_project(once);
        double idem = 0.0;
        for (int m = -g.n / 2 + 1; m <= g.n / 2; ++m) idem += std::abs(twice.coeff(m) - once.coeff(m));
        suite.record("fourier.riesz_idempotent", idem, 1e-15);
        suite.record("fourier.riesz_contractive", std::max(0.0, l2_norm(once) - l2_norm(f)), 1e-15);

        BoundarySamples smooth = detail::suite_band_limited(rng, g, 24, 0.3);
        suite.record("fourier.poisson_mean",
                     std::abs(poisson_extend(smooth, Complex{0.0, 0.0}) - circle_integral(smooth).real()), 1e-12);

        BoundarySamples real_smooth = smooth;
        for (auto& v : real_smooth.values) v = Complex{2.0 + v.real(), 0.0};
        PowerSeries herg = herglotz_extend(real_smooth, g.n / 2 - 1);
        double worst_h = 0.0;
        for (int k = 0; k < 32; ++k) {
            Complex z = std::polar(0.999, kTwoPi * k / 32.0);
            worst_h = std::max(worst_h, std::abs(herg.eval(z).real() - poisson_extend(real_smooth, z)));
        }
        suite.record("fourier.herglotz_matches_poisson", worst_h, 1e-8);
    }

    // ---- weights and outer functions ----
    auto family = random_weight_family(g, 6, 8, 0.15, config.seed + 11);
    {
        double worst_mod = 0.0, worst_iso = 0.0, worst_pow = 0.0;
        for (const Weight& w : family) {
            OuterFunction a = outer_function(w);
            worst_mod = std::max(worst_mod, outer_modulus_error(a));
            PowerSeries f = detail::suite_random_poly(rng, 8);
            for (double p : {1.0, 2.0, 4.0}) {
                BoundarySamples ap = outer_power_boundary(a, 1.0 / p);
                double lhs = 0.0, rhs = 0.0;
                for (int k = 0; k < g.n; ++k) {
                    double fz = std::abs(f.eval(g.node(k)));
                    lhs += std::pow(std::abs(ap.values[k]) * fz, p);
                    rhs += std::pow(fz, p) * w.samples[k];
                }
                worst_iso = std::max(worst_iso, relative_gap(lhs / g.n, rhs / g.n));
            }
            for (int i = 0; i < 8; ++i) {
                Complex z = rng.in_disk(0.9);
                Complex half = outer_power(a, 0.5, z);
                worst_pow = std::max(worst_pow, std::abs(half * half - a.eval(z)));
            }
        }
        suite.record("weights.outer_modulus_identity", worst_mod, 1e-8);
        suite.record("weights.ap_isometry", worst_iso, 1e-10);
        suite.record("weights.power_roundtrip", worst_pow, 1e-10);
    }

    // ---- exhaustions ----
    {
        double worst_mass = 0.0;
        for (int trial = 0; trial < 4; ++trial) {
            Ring ring;
            ring.radius = 0.4 + 0.12 * trial;
            ring.density.assign(g.n, 0.0);
            for (int k = 0; k < g.n; ++k) {
                ring.density[k] = 0.3 + 0.2 * std::cos(g.angle(k) + trial) + 0.1 * std::sin(3 * g.angle(k));
            }
            DiskMeasure m = make_disk_measure(g, {ring}, {Atom{rng.in_disk(0.8), rng.uniform(0.1, 0.7)}});
            worst_mass = std::max(worst_mass, relative_gap(boundary_weight(m).mass, m.total_mass));
        }
        suite.record("exhaustion.boundary_mass_conservation", worst_mass, 1e-10);

        double worst_bound = 0.0, worst_monotonic = 0.0;
        for (const Weight& w : family) {
            FourierSeries spec = to_fourier(weight_samples(w));
            double lip = 0.0;
            for (int k = 0; k < g.n; k += 4) {
                Complex d{0.0, 0.0};
                for (int m = 1; m <= 24; ++m) {
                    Complex e = std::polar(1.0, m * g.angle(k));
                    d += Complex{0.0, double(m)} * (spec.coeff(m) * e - spec.coeff(-m) * std::conj(e));
                }
                lip = std::max(lip, std::abs(d));
            }
            double prev = std::numeric_limits<double>::infinity();
            for (double r : {0.9, 0.99, 0.999}) {
                Weight sm = boundary_weight(ring_exhaustion(w, r).measure);
                double sup = 0.0;
                for (int k = 0; k < g.n; ++k) sup = std::max(sup, std::abs(sm.samples[k] - w.samples[k]));
                worst_monotonic = std::max(worst_monotonic, sup - prev);
                worst_bound = std::max(worst_bound, sup - 5.0 * (1.0 - r) * lip);
                prev = sup;
            }
        }
        suite.record("exhaustion.smoothing_monotone", std::max(0.0, worst_monotonic), 0.0);
        suite.record("exhaustion.smoothing_lipschitz_bound", std::max(0.0, worst_bound), 0.0);

        Exhaustion stack = detail::suite_stack(g, config.seed + 23);
        double max_u = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 400; ++i) max_u = std::max(max_u, stack.u(rng.in_disk(0.9999)));
        suite.record("exhaustion.negative", std::max(0.0, max_u), 0.0);

        double outer_radius = 0.0;
        for (const Ring& r : stack.measure.rings) outer_radius = std::max(outer_radius, r.radius);
        double decay_constant = 2.0 * stack.measure.total_mass * (1.0 + outer_radius) / (1.0 - outer_radius);
        double worst_decay = 0.0;
        for (int k = 0; k < 64; ++k) {
            worst_decay = std::max(worst_decay, -stack.u(std::polar(0.9999, kTwoPi * k / 64.0)));
        }
        suite.record("exhaustion.boundary_decay", worst_decay / (decay_constant * (1.0 - 0.9999)), 1.05);

        double floor_gap = 0.0;
        for (int trial = 0; trial < 3; ++trial) {
            Ring ring;
            ring.radius = 0.35 + 0.2 * trial;
            ring.density.assign(g.n, 0.2 + 0.1 * trial);
            DiskMeasure m = make_disk_measure(g, {ring}, {});
            Weight bw = boundary_weight(m);
            double floor = m.total_mass * (1.0 - ring.radius) / (1.0 + ring.radius);
            floor_gap = std::max(floor_gap, floor - bw.lower_bound);
        }
        suite.record("exhaustion.positive_floor", std::max(0.0, floor_gap), 1e-12);

        // Lelong-Jensen at desk scale for the classical exhaustion.
        Exhaustion log_abs{unit_atom_measure(g)};
        PowerSeries f = detail::suite_random_poly(rng, 5);
        PowerSeries df = f.derivative();
        double worst_jensen = 0.0;
        DiskQuadrature jq = make_disk_quadrature(120, 512, graded_breaks(0.0));
        for (double level : {-1.0, -0.4}) {
            SweepMeasure sweep = radial_sweep_measure(log_abs, level);
            double lhs = 0.0;
            for (int k = 0; k < g.n; ++k) lhs += std::norm(f.eval(std::polar(sweep.rho, g.angle(k))));
            lhs = sweep.mass * lhs / g.n;
            double interior = 0.0;
            for (int i = 0; i < jq.radial_count(); ++i) {
                double row = 0.0;
                for (int k = 0; k < jq.angular.n; ++k) {
                    Complex z = sweep.rho * jq.node(i, k);
                    row += (level - std::log(std::abs(z))) * std::norm(df.eval(z));
                }
                interior += row * jq.area_weight(i) * sweep.rho * sweep.rho;
            }
            double rhs = std::norm(f.eval(Complex{0.0, 0.0})) + 4.0 * interior;
            worst_jensen = std::max(worst_jensen, relative_gap(lhs, rhs));
        }
        suite.record("exhaustion.lelong_jensen", worst_jensen, 1e-6);
    }

    // ---- norms ----
    {
        std::vector<Exhaustion> corpus;
        corpus.push_back(Exhaustion{unit_atom_measure(g)});
        corpus.push_back(ring_exhaustion(family[0], 0.6));
        corpus.push_back(ring_exhaustion(family[1], 0.8));
        corpus.push_back(detail::suite_stack(g, config.seed + 31));

        double worst_identity = 0.0, worst_carleson = 0.0, worst_deriv = 0.0, worst_hopf = 0.0;
        for (const Exhaustion& e : corpus) {
            Weight alpha = boundary_weight(e.measure);
            for (double p : {1.0, 2.0, 4.0}) {
                for (int rep = 0; rep < 3; ++rep) {
                    AnalyticFn f = p < 2.0 ? AnalyticFn(detail::suite_zero_free_poly(rng, 4 + rep))
                                           : AnalyticFn(detail::suite_random_poly(rng, 5 + rep));
                    double lhs = area_norm(f, e, p);
                    double rhs = boundary_norm(f, alpha, p);
                    worst_identity = std::max(worst_identity, relative_gap(lhs, rhs));
                    worst_carleson = std::max(worst_carleson, carleson_identity_check(f, e, p).ratio - 1.0);
                    worst_deriv = std::max(worst_deriv, derivative_energy(f, e, p) - std::pow(rhs, p));
                    double classical = boundary_norm(f, constant_weight(g), p);
                    worst_hopf = std::max(
                        worst_hopf, std::pow(alpha.lower_bound, 1.0 / p) * classical - rhs);
                }
            }
        }
        suite.record("norms.area_equals_boundary", worst_identity, 1e-6);
        suite.record("norms.carleson_constant_one", std::max(0.0, worst_carleson), 1e-9);
        suite.record("norms.derivative_energy_bound", std::max(0.0, worst_deriv), 1e-9);
        suite.record("norms.weighted_floor_bound", std::max(0.0, worst_hopf), 1e-10);

        double worst_mono = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            double r0 = rng.uniform(0.3, 0.8);
            bool ring = trial % 2 == 0;
            Exhaustion e = ring ? ring_exhaustion(constant_weight(g), r0) : Exhaustion{unit_atom_measure(g)};
            AnalyticFn f(detail::suite_random_poly(rng, 2 + static_cast<int>(rng.next_u64() % 5)));
            double p = trial % 3 == 0 ? 4.0 : 2.0;
            double floor_level = ring ? std::log(r0) : -3.0;
            std::vector<double> levels;
            for (double frac : {0.9, 0.6, 0.3, 0.1, 0.03}) levels.push_back(floor_level * frac);
            auto means = radial_mean_monotonicity(f, e, p, levels);
            for (std::size_t i = 1; i < means.size(); ++i) {
                worst_mono = std::max(worst_mono, means[i - 1] - means[i]);
            }
        }
        suite.record("norms.sweep_monotonicity", std::max(0.0, worst_mono), 1e-10);
    }

    // ---- duality ----
    {
        double worst_pyth = 0.0, worst_shift = 0.0, worst_pair = 0.0, worst_equiv = 0.0;
        Weight flat = constant_weight(g);
        for (int trial = 0; trial < 4; ++trial) {
            const Weight& w = family[trial % family.size()];
            BoundarySamples phi = detail::suite_band_limited(rng, g, 6);
            DistanceResult d = dist_h2(phi, w);
            worst_pyth = std::max(worst_pyth,
                                  relative_gap(d.distance * d.distance + d.projection_norm * d.projection_norm,
                                               d.embedded_norm * d.embedded_norm));
            PowerSeries shift = detail::suite_random_poly(rng, 5);
            BoundarySamples shifted = phi;
            BoundarySamples tr = boundary_trace(shift, g);
            for (int k = 0; k < g.n; ++k) shifted.values[k] += tr.values[k];
            worst_shift = std::max(worst_shift, std::abs(dist_h2(shifted, w).distance - d.distance));

            PowerSeries gpoly = detail::suite_random_poly(rng, 5);
            AnalyticFn gfn(gpoly);
            double gnorm = boundary_norm(gfn, w, 2.0);
            worst_pair = std::max(worst_pair, std::abs(dual_pairing(phi, gfn, w)) / gnorm - d.distance);

            worst_equiv =
                std::max(worst_equiv, std::abs(dist_h2(apply_Ap(phi, w, 2.0), flat).distance - d.distance));
        }
        suite.record("duality.pythagoras", worst_pyth, 1e-10);
        suite.record("duality.translation_invariance", worst_shift, 1e-10);
        suite.record("duality.pairing_lower_bound", std::max(0.0, worst_pair), 1e-9);
        suite.record("duality.embedding_equivalence", worst_equiv, 1e-10);
    }

    // ---- carleson ----
    {
        double worst_unit = 0.0;
        std::vector<Complex> centers;
        for (int i = 0; i < 10; ++i) centers.push_back(rng.in_disk(0.9));
        for (int trial = 0; trial < 4; ++trial) {
            Exhaustion e = trial % 2 == 0 ? ring_exhaustion(family[trial % family.size()], 0.7)
                                          : detail::suite_stack(g, config.seed + 41 + trial);
            Weight alpha = boundary_weight(e.measure);
            worst_unit = std::max(worst_unit, embedding_constant(e.measure, alpha, 2.0, centers).constant - 1.0);
        }
        suite.record("carleson.riesz_embedding_unit", std::max(0.0, worst_unit), 1e-9);

        Ring ring;
        ring.radius = 0.75;
        ring.density.assign(g.n, 0.0);
        for (int k = 0; k < g.n; ++k) ring.density[k] = 0.4 + 0.3 * std::cos(g.angle(k));
        DiskMeasure m1 = make_disk_measure(g, {ring}, {Atom{Complex{0.1, 0.6}, 0.5}});
        Ring ring2 = ring;
        for (double& v : ring2.density) v *= 2.0;
        DiskMeasure m2 = make_disk_measure(g, {ring2}, {Atom{Complex{0.1, 0.6}, 1.0}});
        double scale_gap = std::abs(box_constant(m2).constant - 2.0 * box_constant(m1).constant) +
                           std::abs(embedding_constant(m2, constant_weight(g), 2.0, centers).constant -
                                    2.0 * embedding_constant(m1, constant_weight(g), 2.0, centers).constant);
        suite.record("carleson.scaling", scale_gap, 1e-11);
    }

    // ---- interpolation ----
    {
        std::vector<Complex> pts;
        for (int j = 1; j <= 6; ++j) pts.push_back(Complex{1.0 - std::ldexp(1.0, -j), 0.0});
        PointSequence seq = make_point_sequence(pts);
        std::vector<Complex> targets;
        for (int j = 0; j < 6; ++j) targets.push_back(rng.on_circle());
        InterpolationProblem prob = make_problem(seq, targets);

        AnalyticFn b = blaschke(seq);
        double worst_unimod = 0.0;
        for (int k = 0; k < g.n; k += 8) worst_unimod = std::max(worst_unimod, std::abs(std::abs(b(g.node(k))) - 1.0));
        suite.record("interpolation.blaschke_unimodular", worst_unimod, 1e-12);
        double worst_interior = 0.0;
        for (int i = 0; i < 50; ++i) worst_interior = std::max(worst_interior, std::abs(b(rng.in_disk(0.99))));
        suite.record("interpolation.blaschke_contractive", std::max(0.0, worst_interior - 1.0), 0.0);

        std::vector<Weight> bridge_family;
        bridge_family.push_back(constant_weight(g));
        for (const Weight& w : random_weight_family(g, 8, 8, 0.1, config.seed + 57)) {
            bridge_family.push_back(boundary_weight(ring_exhaustion(w, 0.95).measure));
        }
        BridgeReport rep = bridge_report(prob, bridge_family, g);
        double worst_constraint = 0.0;
        MinNormResult mn = min_norm_interpolant(prob, bridge_family[1]);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            worst_constraint = std::max(worst_constraint, std::abs(mn.interpolant(pts[j]) - targets[j]));
        }
        suite.record("interpolation.kernel_constraints", worst_constraint, 1e-8);
        suite.record("interpolation.ball_inclusion", std::max(0.0, rep.sup_min_norm - rep.pick_norm), 1e-6);
        suite.record("interpolation.sparse_bound",
                     std::max(0.0, rep.sup_min_norm - rep.c_prime * rep.sup_target), 1e-9);

        std::vector<Complex> pts2(pts.begin(), pts.end() - 1);
        std::vector<Complex> targets2(targets.begin(), targets.end() - 1);
        MinNormResult reduced = min_norm_interpolant(make_problem(make_point_sequence(pts2), targets2),
                                                     bridge_family[1]);
        suite.record("interpolation.norm_monotone_in_constraints", std::max(0.0, reduced.norm - mn.norm), 1e-10);

        double worst_mix = 0.0;
        auto mix_pair = random_weight_family(g, 2, 5, 0.2, config.seed + 61);
        std::vector<double> mixed(g.n);
        for (int k = 0; k < g.n; ++k) mixed[k] = 0.5 * (mix_pair[0].samples[k] + mix_pair[1].samples[k]);
        Weight u = validate_and_normalize(g, mixed, false);
        for (int trial = 0; trial < 6; ++trial) {
            AnalyticFn f(detail::suite_random_poly(rng, 6));
            double nu = boundary_norm(f, u, 2.0);
            for (const Weight& v : mix_pair) {
                double nv = boundary_norm(f, v, 2.0);
                worst_mix = std::max(worst_mix, nv * nv - 2.0 * nu * nu);
            }
        }
        suite.record("interpolation.averaged_weight_comparison", std::max(0.0, worst_mix), 1e-10);
    }

    // ---- corona ----
    {
        PowerSeries f1(std::vector<Complex>{Complex{-0.3 / 1.3, 0.0}, Complex{1.0 / 1.3, 0.0}});
        PowerSeries f2(std::vector<Complex>{Complex{0.4 / 1.4, 0.0}, Complex{1.0 / 1.4, 0.0}});
        CircleGrid cg = make_grid(256);
        CoronaData data = make_corona_data(f1, f2, cg);
        Weight w = constant_weight(cg);
        CoronaSolution sol = corona_solve(data, w, config.disk_radial, config.disk_angular);
        CoronaReport rep = verify_corona(sol, data, 32, 128);
        suite.record("corona.bezout_interior", rep.bezout_interior, 1e-3);
        suite.record("corona.bezout_boundary", rep.bezout_boundary, 1e-6);
        suite.record("corona.dbar_residual", std::max(rep.dbar_rel_g1, rep.dbar_rel_g2), 1e-2);
        suite.record("corona.norm_budget",
                     std::max(0.0, std::max(rep.norm_g1, rep.norm_g2) - rep.budget), 1e-6);

        // Recover v on the grid from g1 and confirm its weighted norm is
        // exactly the reported distance.
        double acc = 0.0;
        for (int k = 0; k < cg.n; ++k) {
            Complex z = cg.node(k);
            Complex v = (sol.g1_boundary.values[k] - corona_phi1(data, z)) / data.f2.eval(z);
            acc += std::norm(v) * w.samples[k];
        }
        suite.record("corona.correction_optimality",
                     std::abs(std::sqrt(acc / cg.n) - sol.distance), 1e-8);
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace hardy
