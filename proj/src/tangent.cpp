#include "gesolve/tangent.hpp"

#include <algorithm>
#include <cmath>

#include "gesolve/solver.hpp"

namespace gesolve {

namespace {

constexpr double kZeroFloor = 1e-12;

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Vector eval_f(const ProblemSpec& problem, const Vector& y) {
    return problem.eval(Vector(0), y);
}

}  // namespace

std::vector<double> default_t_grid() { return log_grid(1e-3, 1e-1, 8); }

bool kernel_check(const ProblemSpec& problem, const Vector& h_bar,
                  const std::vector<double>& t_grid, double tol) {
    if (problem.m != 0)
        throw DimensionError("kernel_check: tangent certification needs an unparameterized problem");
    if (h_bar.size() != problem.n) throw DimensionError("kernel_check: direction dimension");
    if (h_bar.norm() == 0.0) throw DegenerateDirectionError("kernel_check: h must be nonzero");

    const SymTensor& T = problem.derivative_tensor(problem.p);
    for (double t : t_grid) {
        Vector v = apply_power(T, t * h_bar);
        if (inclusion_residual(problem.cone, problem.y0 + t * h_bar, v) > tol) return false;
    }
    return true;
}

TangentCertificate certify_tangent(const ProblemSpec& problem, const Vector& h_bar,
                                   const std::vector<double>& t_grid,
                                   const TangentOptions& opts) {
    if (t_grid.empty()) throw DimensionError("certify_tangent: empty t grid");

    TangentCertificate cert;
    cert.h_bar = h_bar;
    cert.t_grid = t_grid;

    cert.kernel_ok = kernel_check(problem, h_bar, t_grid, std::max(opts.tol, 1e-9));
    if (!cert.kernel_ok)
        throw NotInKernel("direction fails the p-order kernel inclusion");

    const SymTensor& T = problem.derivative_tensor(problem.p);
    std::vector<double> ts = t_grid;
    std::sort(ts.begin(), ts.end());

    // Regularity premise, sampled at the extreme and median grid scales.
    // z-pairs are drawn around the residual image r(t h), where the
    // iteration actually queries the inverse; far from that slice the fibres
    // of these degenerate operators are legitimately empty.
    {
        std::vector<double> probe = {ts.front(), ts[ts.size() / 2], ts.back()};
        for (double t : probe) {
            PFactorOperator op = build_p_factor(T, t * h_bar, problem.cone, problem.p, problem.y0);
            Vector center = op.A * (t * h_bar) - eval_f(problem, problem.y0 + t * h_bar);
            double radius = 0.5 * center.norm() + 1e-3 * std::pow(t, problem.p);
            RegularityReport rep = strong_regularity_estimate(
                op, ball_pair_sampler(center, radius, opts.seed), opts.premise_samples, opts.tol);
            double scaled = rep.c_estimate;  // already carries ||h||^{p-1} = t^{p-1}
            cert.premise_c = std::max(cert.premise_c, scaled);
            cert.premise_empty_pairs += rep.not_invertible_count + rep.degenerate_face_count;
        }
    }

    for (double t : t_grid) {
        PFactorOperator op = build_p_factor(T, t * h_bar, problem.cone, problem.p, problem.y0);

        SetMap map = [&](const Vector& w) {
            Vector r = op.A * (t * h_bar + w) - eval_f(problem, problem.y0 + t * h_bar + w);
            return invert(op, r, opts.tol, &w).points;
        };

        CmpResult cmp;
        bool done = false;
        std::exception_ptr last;
        for (double omega : {1.0, 0.5, 0.25}) {
            try {
                cmp = cmp_iterate(map, Vector::Zero(problem.n), opts.tol, opts.max_iter, omega);
                done = true;
                break;
            } catch (const NoContractionError&) {
                last = std::current_exception();
            } catch (const NonConvergence&) {
                last = std::current_exception();
            }
        }
        if (!done) std::rethrow_exception(last);

        Vector point = problem.y0 + t * h_bar + cmp.fixed_point;
        cert.w_norms.push_back(cmp.fixed_point.norm());
        cert.per_t_residuals.push_back(
            inclusion_residual(problem.cone, point, eval_f(problem, point)));
    }

    bool residuals_ok = true;
    for (double r : cert.per_t_residuals)
        if (!(r <= std::max(10.0 * opts.tol, 1e-9))) residuals_ok = false;

    if (t_grid.size() < 2) {
        cert.reject_reason = "insufficient samples for a slope fit";
        return cert;
    }

    // slope fit over the grid points with a resolvable correction
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (cert.w_norms[i] <= kZeroFloor) continue;
        double lx = std::log(t_grid[i]), ly = std::log(cert.w_norms[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++cnt;
    }

    if (cnt >= 2) {
        cert.loglog_slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    } else if (*std::max_element(cert.w_norms.begin(), cert.w_norms.end()) <= 10.0 * kZeroFloor) {
        cert.w_negligible = true;  // the ray itself solves the inclusion
        cert.loglog_slope = std::numeric_limits<double>::infinity();
    } else {
        cert.reject_reason = "insufficient samples for a slope fit";
        return cert;
    }

    if (!residuals_ok) {
        cert.reject_reason = "per-t inclusion residual above tolerance";
    } else if (!cert.w_negligible && !(cert.loglog_slope >= opts.slope_min)) {
        cert.reject_reason = "log-log slope below the o(t) threshold";
    } else {
        cert.accepted = true;
    }
    return cert;
}

}  // namespace gesolve
