#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gesolve/report.hpp"
#include "gesolve/tangent.hpp"

namespace {

using namespace gesolve;

Vector parse_reals(const std::string& csv) {
    std::vector<double> vals;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        vals.push_back(std::stod(item));
    }
    Vector v(static_cast<int>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
    return v;
}

// grid spec: log:<lo>:<hi>:<count>[:<direction vector>]
struct GridSpec {
    std::vector<double> ts;
    Vector dir;  // empty = scalar grid
};

GridSpec parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ':')) parts.push_back(item);
    if (parts.size() < 4 || parts[0] != "log")
        throw Error("grid spec must be log:<lo>:<hi>:<count>[:<dir>]");
    GridSpec g;
    g.ts = log_grid(std::stod(parts[1]), std::stod(parts[2]), std::stoi(parts[3]));
    if (parts.size() > 4) g.dir = parse_reals(parts[4]);
    return g;
}

struct Common {
    double tol = 1e-9;
    int max_iter = 200;
    std::uint64_t seed = 0;
    int samples = 1000;
    double radius = 0.1;
    std::string report_path;
};

SolveOptions solve_options(const Common& c) {
    SolveOptions o;
    o.tol = c.tol;
    o.max_iter = c.max_iter;
    o.seed = c.seed;
    return o;
}

void emit(const Common& c, Json& report, std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    report["wall_time_ms"] = dt.count();
    std::string text = dump_json(report) + "\n";
    if (c.report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(c.report_path);
        if (!out) throw Error("cannot write report to '" + c.report_path + "'");
        out << text;
    }
}

Json envelope(const std::string& command, const std::string& problem, const Common& c) {
    return Json{{"tool", "gesolve"},
                {"command", command},
                {"problem", problem},
                {"seed", c.seed},
                {"tolerances", Json{{"tol", c.tol},
                                    {"max_iter", c.max_iter},
                                    {"samples", c.samples},
                                    {"radius", c.radius}}},
                {"status", "ok"}};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"solver and certification toolkit for degenerate generalized equations"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // --h is a direction flag

    Common common;
    std::string problem_arg, x_arg, h_arg, t_grid_arg, out_path, reduce_kind;
    std::vector<std::string> x_grids;

    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--tol", common.tol, "fixed-point step tolerance");
        sub->add_option("--max-iter", common.max_iter, "iteration cap");
        sub->add_option("--seed", common.seed, "sampling seed");
        sub->add_option("--samples", common.samples, "sample count for empirical checks");
        sub->add_option("--radius", common.radius, "sampling radius");
        sub->add_option("--report", common.report_path, "write the JSON report here");
    };

    CLI::App* check = app.add_subcommand("check", "degeneracy, Robinson and approximation diagnostics");
    check->add_option("problem", problem_arg)->required();
    check->add_option("--h", h_arg, "direction for the regularity estimate");
    add_common(check);

    CLI::App* banach = app.add_subcommand("banach", "solve the direction condition at x");
    banach->add_option("problem", problem_arg)->required();
    banach->add_option("--x", x_arg)->required();
    add_common(banach);

    CLI::App* solve = app.add_subcommand("solve", "implicit branch at x, or a scaling study over a grid");
    solve->add_option("problem", problem_arg)->required();
    solve->add_option("--x", x_arg);
    solve->add_option("--x-grid", x_grids, "log:<lo>:<hi>:<count>:<dir>; repeatable");
    add_common(solve);

    double slope_min = 1.5;
    CLI::App* tangent = app.add_subcommand("tangent", "kernel check and tangent certification");
    tangent->add_option("problem", problem_arg)->required();
    tangent->add_option("--h", h_arg)->required();
    tangent->add_option("--t-grid", t_grid_arg, "log:<lo>:<hi>:<count>");
    tangent->add_option("--slope-min", slope_min, "o(t) acceptance slope");
    add_common(tangent);

    CLI::App* reduce = app.add_subcommand("reduce", "complementarity / KKT frontend reductions");
    reduce->add_option("kind", reduce_kind, "ncp or kkt")->required();
    reduce->add_option("problem", problem_arg)->required();
    reduce->add_option("-o", out_path, "output problem file");
    add_common(reduce);

    CLI::App* builtin = app.add_subcommand("builtin", "dump a built-in fixture");
    builtin->add_option("name", problem_arg)->required();
    builtin->add_option("-o", out_path, "output problem file");
    add_common(builtin);

    CLI11_PARSE(app, argc, argv);
    auto t0 = std::chrono::steady_clock::now();

    bool hypothesis_failed = false;

    if (check->parsed()) {
        ProblemSpec spec = load_problem(problem_arg);
        Json report = envelope("check", problem_arg, common);
        Json result;
        try {
            result["degeneracy"] = to_json(degeneracy_profile(spec));
        } catch (const OrderTooLowError& e) {
            result["degeneracy"] = Json{{"error", e.what()}};
            hypothesis_failed = true;
        }
        result["robinson_strongly_regular"] = robinson_check(spec, common.tol, common.seed);
        result["approximation_delta"] =
            approximation_delta(spec, spec.x0, common.radius, common.samples, common.seed);
        if (!h_arg.empty()) {
            Vector h = parse_reals(h_arg);
            PFactorOperator op =
                build_p_factor(spec.derivative_tensor(spec.p), h, spec.cone, spec.p, spec.y0);
            try {
                RegularityReport rr = strong_regularity_estimate(
                    op, ball_pair_sampler(Vector::Zero(spec.n), common.radius, common.seed),
                    common.samples, common.tol);
                rr.seed = common.seed;
                rr.radius = common.radius;
                result["strong_regularity"] = to_json(rr);
            } catch (const NotRegularError& e) {
                result["strong_regularity"] = Json{{"error", e.what()}};
                hypothesis_failed = true;
            }
        }
        report["result"] = result;
        if (hypothesis_failed) report["status"] = "hypothesis_failure";
        emit(common, report, t0);
        return hypothesis_failed ? 2 : 0;
    }

    if (banach->parsed()) {
        ProblemSpec spec = load_problem(problem_arg);
        Json report = envelope("banach", problem_arg, common);
        try {
            report["result"] = to_json(solve_banach(spec, parse_reals(x_arg), solve_options(common)));
        } catch (const HypothesisError& e) {
            report["status"] = "hypothesis_failure";
            report["failure"] = e.what();
            emit(common, report, t0);
            return 2;
        }
        emit(common, report, t0);
        return 0;
    }

    if (solve->parsed()) {
        ProblemSpec spec = load_problem(problem_arg);
        Json report = envelope("solve", problem_arg, common);
        if (!x_grids.empty()) {
            std::vector<Vector> xs;
            for (const std::string& g : x_grids) {
                GridSpec grid = parse_grid(g);
                Vector dir = grid.dir.size() ? grid.dir : Vector::Ones(1);
                if (dir.size() != spec.m) throw Error("grid direction dimension mismatch");
                for (double t : grid.ts) xs.push_back(t * dir);
            }
            try {
                ScalingReport sr = scaling_study(spec, xs, solve_options(common));
                report["result"] = to_json(sr);
                std::cerr << scaling_table(sr);
                hypothesis_failed = sr.successes < static_cast<int>(sr.samples.size());
            } catch (const InsufficientSamples& e) {
                report["status"] = "hypothesis_failure";
                report["failure"] = e.what();
                emit(common, report, t0);
                return 2;
            }
            if (hypothesis_failed) report["status"] = "hypothesis_failure";
            emit(common, report, t0);
            return hypothesis_failed ? 2 : 0;
        }
        if (x_arg.empty()) throw Error("solve needs --x or --x-grid");
        try {
            report["result"] = to_json(solve_implicit(spec, parse_reals(x_arg), solve_options(common)));
        } catch (const HypothesisError& e) {
            report["status"] = "hypothesis_failure";
            report["failure"] = e.what();
            emit(common, report, t0);
            return 2;
        }
        emit(common, report, t0);
        return 0;
    }

    if (tangent->parsed()) {
        ProblemSpec spec = load_problem(problem_arg);
        Json report = envelope("tangent", problem_arg, common);
        Vector h = parse_reals(h_arg);
        std::vector<double> ts =
            t_grid_arg.empty() ? default_t_grid() : parse_grid(t_grid_arg).ts;
        TangentOptions topts;
        topts.tol = common.tol;
        topts.max_iter = common.max_iter;
        topts.seed = common.seed;
        topts.slope_min = slope_min;
        try {
            TangentCertificate cert = certify_tangent(spec, h, ts, topts);
            report["result"] = to_json(cert);
            if (!cert.accepted) {
                report["status"] = "hypothesis_failure";
                report["failure"] = cert.reject_reason;
                emit(common, report, t0);
                return 2;
            }
        } catch (const HypothesisError& e) {
            report["result"] = Json{{"kernel_ok", false}};
            report["status"] = "hypothesis_failure";
            report["failure"] = e.what();
            emit(common, report, t0);
            return 2;
        }
        emit(common, report, t0);
        return 0;
    }

    if (reduce->parsed()) {
        if (reduce_kind == "ncp") {
            ProblemSpec in = load_problem(problem_arg);
            if (!in.is_polynomial()) throw Error("reduce ncp needs a polynomial problem");
            ProblemSpec out = from_ncp(in.f, in.m, in.n, in.x0, in.y0, in.p);
            write_output(out_path, serialize_problem(out));
            return 0;
        }
        if (reduce_kind == "kkt") {
            std::ifstream in(problem_arg);
            if (!in) throw Error("cannot open '" + problem_arg + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            ProblemSpec out = from_kkt(parse_nlp(buf.str()));
            write_output(out_path, serialize_problem(out));
            return 0;
        }
        throw Error("reduce kind must be ncp or kkt");
    }

    if (builtin->parsed()) {
        write_output(out_path, serialize_problem(builtin_problem(problem_arg)));
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gesolve::HypothesisError& e) {
        std::cerr << "hypothesis failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
