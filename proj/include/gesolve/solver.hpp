#ifndef GESOLVE_SOLVER_HPP
#define GESOLVE_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gesolve/pfactor.hpp"

namespace gesolve {

struct SolveOptions {
    double tol = 1e-9;        // fixed-point step tolerance
    double zero_tol = 1e-12;  // trivial-branch threshold
    int max_iter = 200;
    std::uint64_t seed = 0;
    int newton_starts = 8;    // multistart directions per face
    int newton_max_iter = 100;
};

/// Solution of the direction condition: -f(x, y0) lies in
/// 1/(p-1)! T[h]^p + N_C(y0 + h), with the minimal-norm h among all faces.
struct BanachSolution {
    Vector h;
    Face face;
    Vector normal_certificate;  // the normal-cone element closing the inclusion
    double residual = 0.0;
    double bound_ratio = 0.0;  // ||h|| / ||f(x, y0)||^{1/p}
    bool trivial = false;      // f(x, y0) == 0 branch
};

BanachSolution solve_banach(const ProblemSpec& problem, const Vector& x,
                            const SolveOptions& opts = {});

/// r(x, h + y) = 1/(p-1)! T[h]^{p-1}[h + y] - f(x, y0 + h + y).
Vector residual_map(const ProblemSpec& problem, const Vector& x, const Vector& h,
                    const Vector& y);

using SetMap = std::function<PointSet(const Vector&)>;

struct CmpResult {
    Vector fixed_point;
    int iterations = 0;
    double theta_estimate = 0.0;  // max of the last step-length ratios
    double relaxation = 1.0;
};

/// Set-valued fixed-point iteration: move toward the nearest point of
/// map(y_k) (ties: minimal norm, then lexicographic), scaled by the
/// relaxation factor. relaxation = 1 is the plain iteration.
CmpResult cmp_iterate(const SetMap& map, const Vector& y_start, double tol, int max_iter,
                      double relaxation = 1.0);

struct ImplicitSolution {
    Vector x;
    Vector h;
    Vector y_corr;  // fixed point of the auxiliary map
    Vector phi;     // y0 + h + y_corr
    double inclusion_residual = 0.0;
    int iterations = 0;
    double theta_estimate = 0.0;
    double m_ratio = 0.0;  // ||phi - y0|| / ||f(x, y0)||^{1/p}
    double relaxation = 1.0;
    bool trivial = false;
};

/// The implicit branch at x: direction solve, frozen p-factor operator,
/// fixed-point correction, residual checked against the original problem.
/// When the plain iteration fails to contract, retries with relaxation
/// factors 0.5 and 0.25 (same fixed points).
ImplicitSolution solve_implicit(const ProblemSpec& problem, const Vector& x,
                                const SolveOptions& opts = {});

struct ScalingSample {
    Vector x;
    double norm_x = 0.0;
    double norm_f = 0.0;
    double norm_phi = 0.0;
    double ratio = 0.0;  // norm_phi / norm_f^{1/p}
    bool ok = false;
    std::string error;
};

struct ScalingReport {
    std::vector<ScalingSample> samples;
    int successes = 0;
    double fitted_exponent = 0.0;  // log-log slope of ||phi|| vs ||f(x, y0)||
    double m_max = 0.0;
};

/// Runs solve_implicit over the grid, fits the log-log slope over the
/// successful nontrivial samples. Throws InsufficientSamples below 5
/// successes.
ScalingReport scaling_study(const ProblemSpec& problem, const std::vector<Vector>& xs,
                            const SolveOptions& opts = {});

/// Plot-ready text table (columns: norm_x, norm_f, norm_phi, ratio).
std::string scaling_table(const ScalingReport& report);

/// Log-spaced values, helper for grid specs.
std::vector<double> log_grid(double lo, double hi, int count);

}  // namespace gesolve

#endif
