// Command-line front end: parse problem files, run the pipelines, emit
// machine-readable reports, and run the invariant suite.
//
// Exit codes: 0 success, 1 input/schema error, 2 invariant-check failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hardy/json_io.hpp"
#include "hardy/verify.hpp"

using namespace hardy;

namespace {

struct RunConfig {
    int grid_n = 1024;
    int disk_radial = 200;
    int disk_angular = 512;
    double tol_scale = 1.0;
    std::uint64_t seed = 7;
    std::string out_path;
    std::string format = "json";

    json to_json() const {
        return json{{"grid", grid_n},     {"disk_radial", disk_radial}, {"disk_angular", disk_angular},
                    {"tol", tol_scale},   {"seed", seed},               {"format", format}};
    }
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("E_IO", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError("E_PARSE", std::string(e.what()));
    }
    return j;
}

void emit(const RunConfig& config, const std::string& text) {
    if (config.out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(config.out_path);
    if (!out) throw SchemaError("E_IO", "cannot write " + config.out_path);
    out << text << "\n";
}

void emit_report(const RunConfig& config, json body) {
    body["config"] = config.to_json();
    emit(config, body.dump(2));
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json distance_to_json(const DistanceResult& d) {
    return json{{"distance", d.distance},
                {"projection_norm", d.projection_norm},
                {"embedded_norm", d.embedded_norm},
                {"approximant", power_series_to_json(d.best_approximant)},
                {"approximant_tail", d.approximant_tail}};
}

json verify_to_json(const VerifyReport& rep) {
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
        checks.push_back(json{{"name", c.name}, {"measured", c.measured}, {"tolerance", c.tolerance},
                              {"pass", c.pass}});
    }
    return json{{"all_pass", rep.all_pass}, {"checks", std::move(checks)}};
}

int run(int argc, char** argv) {
    CLI::App app{"weighted Hardy space toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    app.add_option("--grid", config.grid_n, "circle grid size (power of two, >= 256)");
    app.add_option("--disk-radial", config.disk_radial, "radial quadrature size");
    app.add_option("--disk-angular", config.disk_angular, "angular quadrature size");
    app.add_option("--tol", config.tol_scale, "tolerance scale for the verify suite");
    app.add_option("--seed", config.seed, "seed for randomized sweeps");
    app.add_option("--out", config.out_path, "output file (default stdout)");
    app.add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // ---- weight ----
    auto* weight_cmd = app.add_subcommand("weight", "weight validation and outer functions");
    weight_cmd->require_subcommand(1);
    std::string weight_in;
    for (const char* name : {"validate", "normalize", "outer"}) {
        weight_cmd->add_subcommand(name)->add_option("--in", weight_in, "weight JSON file")->required();
    }

    // ---- exhaust ----
    auto* exhaust_cmd = app.add_subcommand("exhaust", "weight <-> exhaustion conversions");
    exhaust_cmd->require_subcommand(1);
    std::string exhaust_in;
    double exhaust_radius = 0.95;
    auto* from_weight = exhaust_cmd->add_subcommand("from-weight");
    from_weight->add_option("--in", exhaust_in)->required();
    from_weight->add_option("--radius", exhaust_radius);
    exhaust_cmd->add_subcommand("boundary-weight")->add_option("--in", exhaust_in)->required();
    exhaust_cmd->add_subcommand("roundtrip")->add_option("--in", exhaust_in)->required();

    // ---- norm ----
    auto* norm_cmd = app.add_subcommand("norm", "boundary and area norms");
    norm_cmd->require_subcommand(1);
    std::string norm_fn, norm_weight, norm_exhaustion;
    double norm_p = 2.0;
    for (const char* name : {"boundary", "area", "check"}) {
        auto* sub = norm_cmd->add_subcommand(name);
        sub->add_option("--fn", norm_fn, "power series JSON")->required();
        sub->add_option("-p,--exponent", norm_p);
        if (std::string(name) == "boundary") sub->add_option("--weight", norm_weight)->required();
        else sub->add_option("--exhaustion", norm_exhaustion)->required();
    }

    // ---- dist ----
    auto* dist_cmd = app.add_subcommand("dist", "distance to the weighted H^2");
    std::string dist_phi, dist_weight;
    dist_cmd->add_option("--phi", dist_phi, "boundary data JSON")->required();
    dist_cmd->add_option("--weight", dist_weight, "weight JSON")->required();

    // ---- interp ----
    auto* interp_cmd = app.add_subcommand("interp", "sparse interpolation pipelines");
    interp_cmd->require_subcommand(1);
    std::string interp_problem, interp_weight;
    int family_size = 20;
    for (const char* name : {"delta", "candidate", "pick"}) {
        interp_cmd->add_subcommand(name)->add_option("--problem", interp_problem)->required();
    }
    auto* minnorm = interp_cmd->add_subcommand("minnorm");
    minnorm->add_option("--problem", interp_problem)->required();
    minnorm->add_option("--weight", interp_weight);
    auto* bridge = interp_cmd->add_subcommand("bridge");
    bridge->add_option("--problem", interp_problem)->required();
    bridge->add_option("--family", family_size, "number of random weights in the sweep");

    // ---- corona ----
    auto* corona_cmd = app.add_subcommand("corona", "two-function corona solver");
    corona_cmd->require_subcommand(1);
    std::string corona_in;
    for (const char* name : {"solve", "verify"}) {
        corona_cmd->add_subcommand(name)->add_option("--in", corona_in)->required();
    }

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    verify_cmd->require_subcommand(1);
    verify_cmd->add_subcommand("all");

    CLI11_PARSE(app, argc, argv);

    CircleGrid grid = make_grid(config.grid_n);

    if (weight_cmd->parsed()) {
        Weight w = weight_from_json(load_json(weight_in));
        bool normalize = weight_cmd->get_subcommand("normalize")->parsed();
        if (normalize) w = validate_and_normalize(w.grid, w.samples, true);
        json body{{"n", w.grid.n}, {"lower_bound", w.lower_bound}, {"mass", w.mass}};
        if (weight_cmd->get_subcommand("outer")->parsed()) {
            OuterFunction a = outer_function(w);
            body["outer"] = json{{"log_series", power_series_to_json(a.log_series)},
                                 {"value_at_origin", a.value_at_origin()},
                                 {"modulus_error", outer_modulus_error(a)}};
        } else if (normalize) {
            body["weight"] = weight_to_json(w);
        }
        emit_report(config, std::move(body));
        return 0;
    }

    if (exhaust_cmd->parsed()) {
        if (exhaust_cmd->get_subcommand("from-weight")->parsed()) {
            Weight w = weight_from_json(load_json(exhaust_in));
            Exhaustion e = ring_exhaustion(w, exhaust_radius);
            emit_report(config, json{{"exhaustion", exhaustion_to_json(e)},
                                     {"total_mass", e.measure.total_mass}});
            return 0;
        }
        if (exhaust_cmd->get_subcommand("boundary-weight")->parsed()) {
            Exhaustion e = exhaustion_from_json(load_json(exhaust_in), grid);
            Weight bw = boundary_weight(e.measure);
            emit_report(config, json{{"weight", weight_to_json(bw)},
                                     {"mass", bw.mass},
                                     {"lower_bound", bw.lower_bound}});
            return 0;
        }
        // roundtrip: smooth at three radii and report the sup errors
        Weight w = weight_from_json(load_json(exhaust_in));
        json rows = json::array();
        bool decreasing = true;
        double prev = std::numeric_limits<double>::infinity();
        for (double r : {0.9, 0.99, 0.999}) {
            Weight sm = boundary_weight(ring_exhaustion(w, r).measure);
            double sup = 0.0;
            for (int k = 0; k < w.grid.n; ++k) sup = std::max(sup, std::abs(sm.samples[k] - w.samples[k]));
            rows.push_back(json{{"radius", r}, {"sup_error", sup}});
            decreasing = decreasing && sup < prev;
            prev = sup;
        }
        emit_report(config, json{{"roundtrip", std::move(rows)}, {"decreasing", decreasing}});
        return decreasing ? 0 : 2;
    }

    if (norm_cmd->parsed()) {
        AnalyticFn f(power_series_from_json(load_json(norm_fn)));
        if (norm_cmd->get_subcommand("boundary")->parsed()) {
            Weight w = weight_from_json(load_json(norm_weight));
            emit_report(config, json{{"norm", boundary_norm(f, w, norm_p)}, {"p", norm_p}});
            return 0;
        }
        Exhaustion e = exhaustion_from_json(load_json(norm_exhaustion), grid);
        auto quad = hardy::detail::quadrature_for(e, config.disk_radial, config.disk_angular);
        AreaNormDetail d = area_norm_detailed(f, e, norm_p, *quad);
        if (norm_cmd->get_subcommand("area")->parsed()) {
            emit_report(config, json{{"norm", d.value},
                                     {"measure_term", d.measure_term},
                                     {"potential_term", d.potential_term},
                                     {"excluded_weight", d.excluded_weight},
                                     {"p", norm_p}});
            return 0;
        }
        // check: area vs boundary identity plus the unit Carleson ratio
        Weight alpha = boundary_weight(e.measure);
        double boundary = boundary_norm(f, alpha, norm_p);
        double gap = relative_gap(d.value, boundary);
        CarlesonIdentityReport cid = carleson_identity_check(f, e, norm_p);
        bool ok = gap <= 1e-6 * config.tol_scale && cid.ratio <= 1.0 + 1e-9 * config.tol_scale;
        emit_report(config, json{{"area_norm", d.value},
                                 {"boundary_norm", boundary},
                                 {"relative_gap", gap},
                                 {"carleson_ratio", cid.ratio},
                                 {"pass", ok}});
        return ok ? 0 : 2;
    }

    if (dist_cmd->parsed()) {
        Weight w = weight_from_json(load_json(dist_weight));
        BoundarySamples phi = boundary_data_from_json(load_json(dist_phi), w.grid);
        emit_report(config, distance_to_json(dist_h2(phi, w)));
        return 0;
    }

    if (interp_cmd->parsed()) {
        InterpolationProblem prob = problem_from_json(load_json(interp_problem));
        if (interp_cmd->get_subcommand("delta")->parsed()) {
            emit_report(config, json{{"delta", sparsity_delta(prob.sequence)}});
            return 0;
        }
        if (interp_cmd->get_subcommand("candidate")->parsed()) {
            CandidatePhi c = candidate_phi(prob, grid);
            json coeffs = json::array();
            for (const Complex& v : c.coefficients) coeffs.push_back(hardy::detail::complex_to_json(v));
            emit_report(config, json{{"coefficients", std::move(coeffs)},
                                     {"sup_target", prob.sup_target},
                                     {"delta", sparsity_delta(prob.sequence)}});
            return 0;
        }
        if (interp_cmd->get_subcommand("pick")->parsed()) {
            emit_report(config, json{{"pick_norm", pick_min_norm(prob)}});
            return 0;
        }
        if (interp_cmd->get_subcommand("minnorm")->parsed()) {
            Weight w = interp_weight.empty() ? constant_weight(grid) : weight_from_json(load_json(interp_weight));
            MinNormResult r = min_norm_interpolant(prob, w);
            double worst_constraint = 0.0;
            for (std::size_t j = 0; j < prob.sequence.points.size(); ++j) {
                worst_constraint = std::max(
                    worst_constraint, std::abs(r.interpolant(prob.sequence.points[j]) - prob.targets[j]));
            }
            json coeffs = json::array();
            for (const Complex& v : r.coefficients) coeffs.push_back(hardy::detail::complex_to_json(v));
            emit_report(config, json{{"norm", r.norm},
                                     {"gram_condition", r.gram_condition},
                                     {"constraint_residual", worst_constraint},
                                     {"coefficients", std::move(coeffs)}});
            return worst_constraint <= 1e-8 ? 0 : 2;
        }
        // bridge sweep
        std::vector<Weight> family;
        family.push_back(constant_weight(grid));
        for (const Weight& w : random_weight_family(grid, family_size, 8, 0.1, config.seed)) {
            family.push_back(boundary_weight(ring_exhaustion(w, 0.95).measure));
        }
        BridgeReport rep = bridge_report(prob, family, grid);
        if (config.format == "csv") {
            std::ostringstream csv;
            csv << "weight_id,min_norm,pick_norm,ratio\n";
            for (std::size_t i = 0; i < rep.min_norms.size(); ++i) {
                csv << i << "," << format_double(rep.min_norms[i]) << "," << format_double(rep.pick_norm)
                    << "," << format_double(rep.min_norms[i] / rep.pick_norm) << "\n";
            }
            emit(config, csv.str());
        } else {
            emit_report(config, json{{"delta", rep.delta},
                                     {"pick_norm", rep.pick_norm},
                                     {"carleson_constant", rep.carleson_constant},
                                     {"c_prime", rep.c_prime},
                                     {"sup_min_norm", rep.sup_min_norm},
                                     {"gap_ratio", rep.gap_ratio},
                                     {"min_norms", rep.min_norms},
                                     {"ball_inclusion_ok", rep.ball_inclusion_ok},
                                     {"sparse_bound_ok", rep.sparse_bound_ok}});
        }
        return rep.ball_inclusion_ok && rep.sparse_bound_ok ? 0 : 2;
    }

    if (corona_cmd->parsed()) {
        CoronaInput input = corona_input_from_json(load_json(corona_in));
        Weight w = input.weight ? *input.weight : constant_weight(grid);
        CoronaData data = make_corona_data(input.f1, input.f2, w.grid);
        CoronaSolution sol = corona_solve(data, w, config.disk_radial, config.disk_angular);
        json body{{"delta", data.delta},
                  {"grid_min", data.grid_min},
                  {"margin", data.margin},
                  {"distance", sol.distance},
                  {"k_delta", sol.k_delta},
                  {"budget", sol.budget},
                  {"norm_g1", sol.norm_g1},
                  {"norm_g2", sol.norm_g2},
                  {"psi_box_constant", sol.psi_box_constant},
                  {"correction", power_series_to_json(sol.correction)}};
        if (corona_cmd->get_subcommand("solve")->parsed()) {
            emit_report(config, std::move(body));
            return 0;
        }
        CoronaReport rep = verify_corona(sol, data);
        bool ok = rep.bezout_interior <= 1e-3 && rep.bezout_boundary <= 1e-6 &&
                  rep.dbar_rel_g1 <= 1e-2 && rep.dbar_rel_g2 <= 1e-2 && rep.norms_within_budget;
        body["report"] = json{{"bezout_interior", rep.bezout_interior},
                              {"bezout_boundary", rep.bezout_boundary},
                              {"dbar_rel_g1", rep.dbar_rel_g1},
                              {"dbar_rel_g2", rep.dbar_rel_g2},
                              {"sup_g1", rep.sup_g1},
                              {"sup_g2", rep.sup_g2},
                              {"norms_within_budget", rep.norms_within_budget},
                              {"pass", ok}};
        emit_report(config, std::move(body));
        return ok ? 0 : 2;
    }

    if (verify_cmd->parsed()) {
        VerifyConfig vc;
        vc.grid_n = config.grid_n;
        vc.disk_radial = config.disk_radial;
        vc.disk_angular = config.disk_angular;
        vc.seed = config.seed;
        vc.tol_scale = config.tol_scale;
        VerifyReport rep = run_verify_suite(vc);
        if (config.format == "csv") {
            std::ostringstream csv;
            csv << "name,measured,tolerance,pass\n";
            for (const CheckResult& c : rep.checks) {
                csv << c.name << "," << format_double(c.measured) << "," << format_double(c.tolerance)
                    << "," << (c.pass ? "1" : "0") << "\n";
            }
            emit(config, csv.str());
        } else {
            emit_report(config, verify_to_json(rep));
        }
        std::cerr << "verify all: " << (rep.all_pass ? "PASS" : "FAIL") << " (" << rep.checks.size()
                  << " checks, " << rep.seconds << " s)\n";
        return rep.all_pass ? 0 : 2;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SchemaError& e) {
        std::cerr << "input error " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error E_PRECONDITION: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
