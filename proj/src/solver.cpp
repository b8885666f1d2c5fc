#include "gesolve/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <sstream>

#include "gesolve/rng.hpp"

namespace gesolve {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// 1/(p-1)! T[h]^{p-1} as a matrix; for p = 1 this is the Jacobian itself.
Matrix model_matrix(const SymTensor& T, const Vector& h, int p) {
    if (p == 1) return T.as_matrix();
    return contract(T, h, p - 1).as_matrix() / factorial(p - 1);
}

bool lex_less(const Vector& a, const Vector& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] < b[i] - 1e-15) return true;
        if (a[i] > b[i] + 1e-15) return false;
    }
    return false;
}

/// Nearest point of the set; ties broken by minimal norm, then
/// lexicographic order, so the selection is deterministic.
const Vector& select_nearest(const PointSet& set, const Vector& y) {
    const Vector* best = &set[0];
    double best_d = (set[0] - y).norm();
    for (std::size_t i = 1; i < set.size(); ++i) {
        double d = (set[i] - y).norm();
        if (d < best_d - 1e-14) {
            best = &set[i];
            best_d = d;
        } else if (d <= best_d + 1e-14) {
            double nb = best->norm(), ni = set[i].norm();
            if (ni < nb - 1e-14 || (ni <= nb + 1e-14 && lex_less(set[i], *best))) {
                best = &set[i];
                best_d = d;
            }
        }
    }
    return *best;
}

struct FaceSystem {
    std::vector<int> rows;  // equality rows (non-active coordinates)
    std::vector<int> cols;  // unknown coordinates
    Vector h_base;          // pinned components
};

FaceSystem face_system(const Face& face, const ConeSpec& cone, const Vector& y0) {
    FaceSystem fs;
    fs.h_base = Vector::Zero(cone.dim());
    for (int j = 0; j < cone.dim(); ++j) {
        if (face.is_active(j)) {
            fs.h_base[j] = -y0[j];  // y0 + h = 0 on the active set
        } else {
            fs.cols.push_back(j);
            fs.rows.push_back(j);
        }
    }
    return fs;
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int count) {
    if (count < 1 || !(lo > 0.0) || !(hi > 0.0))
        throw DimensionError("log_grid: need positive bounds and count");
    std::vector<double> out;
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) out.push_back(lo * std::exp(step * i));
    return out;
}

Vector residual_map(const ProblemSpec& problem, const Vector& x, const Vector& h,
                    const Vector& y) {
    const SymTensor& T = problem.derivative_tensor(problem.p);
    Matrix A = model_matrix(T, h, problem.p);
    return A * (h + y) - problem.eval(x, problem.y0 + h + y);
}

BanachSolution solve_banach(const ProblemSpec& problem, const Vector& x,
                            const SolveOptions& opts) {
    if (x.size() != problem.m) throw DimensionError("solve_banach: parameter dimension");
    const int n = problem.n;
    const int p = problem.p;
    const Vector fx0 = problem.eval(x, problem.y0);
    const double fnorm = fx0.norm();

    BanachSolution best;
    if (fnorm <= opts.zero_tol) {
        best.h = Vector::Zero(n);
        best.normal_certificate = -fx0;
        best.residual = inclusion_residual(problem.cone, problem.y0, fx0);
        best.trivial = true;
        return best;
    }

    const SymTensor& T = problem.derivative_tensor(p);
    const double cp = 1.0 / factorial(p - 1);
    const double scale = std::pow(fnorm, 1.0 / p);
    const double newton_tol = 1e-12 * std::max(1.0, fnorm);
    const double sign_tol = 1e-9 * (1.0 + fnorm);
    // components below the residual resolution of the degree-p system are
    // numerically zero; snapping keeps spurious tails out of the operator
    const double snap_tol =
        std::pow(10.0 * newton_tol / std::max(T.max_abs(), 1e-12), 1.0 / p);

    auto form = [&](const Vector& h) -> Vector { return cp * apply_power(T, h); };
    auto jacobian = [&](const Vector& h) -> Matrix { return p * model_matrix(T, h, p); };

    bool found = false;
    PointSet seen(1e-9);

    auto consider = [&](Vector h, const Face& face) {
        for (int j = 0; j < n; ++j)
            if (std::abs(h[j]) <= snap_tol) h[j] = 0.0;
        Vector nu = -fx0 - form(h);
        FaceSystem fs = face_system(face, problem.cone, problem.y0);
        for (int i : fs.rows)
            if (std::abs(nu[i]) > std::max(10.0 * newton_tol, sign_tol)) return;
        if (h.norm() <= 1e-12 * std::max(1.0, scale)) return;  // h = 0 is not a direction
        for (int j : fs.cols)
            if (problem.cone.is_nonneg(j) && problem.y0[j] + h[j] < -kActivityTol) return;
        for (int i : face.active)
            if (nu[i] > sign_tol) return;
        if (!seen.add(h)) return;

        double norm_h = h.norm();
        if (found) {
            double cur = best.h.norm();
            if (norm_h > cur + 1e-12) return;
            if (norm_h >= cur - 1e-12 && !lex_less(h, best.h)) return;
        }
        best.h = h;
        best.face = face;
        best.normal_certificate = nu;
        best.residual = inclusion_residual(problem.cone, problem.y0 + h, fx0 + form(h));
        best.bound_ratio = norm_h / scale;
        found = true;
    };

    for (const Face& face : faces(problem.cone)) {
        FaceSystem fs = face_system(face, problem.cone, problem.y0);
        const int k = static_cast<int>(fs.cols.size());

        if (k == 0) {
            consider(fs.h_base, face);
            continue;
        }

        for (int start = 0; start < opts.newton_starts; ++start) {
            Vector dir(k);
            if (start == 0) {
                dir.setOnes();
                dir /= std::sqrt(double(k));
            } else {
                Rng rng = Rng::for_sample(opts.seed ^ (0xFACEull + face.mask),
                                          static_cast<std::uint64_t>(start));
                dir = rng.sphere(k);
            }

            Vector h = fs.h_base;
            for (int c = 0; c < k; ++c) h[fs.cols[c]] += scale * dir[c];

            Vector E(k);
            auto eval_E = [&](const Vector& hh, Vector& out) {
                Vector full = -fx0 - form(hh);
                for (int r = 0; r < k; ++r) out[r] = full[fs.rows[r]];
            };
            eval_E(h, E);

            for (int it = 0; it < opts.newton_max_iter && E.norm() > newton_tol; ++it) {
                Matrix Jfull = jacobian(h);
                Matrix J(k, k);
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < k; ++c) J(r, c) = -Jfull(fs.rows[r], fs.cols[c]);
                Vector step = J.colPivHouseholderQr().solve(-E);
                if (!step.allFinite()) break;

                double alpha = 1.0;
                Vector trial = h, Et(k);
                for (int damp = 0; damp < 30; ++damp) {
                    trial = h;
                    for (int c = 0; c < k; ++c) trial[fs.cols[c]] += alpha * step[c];
                    eval_E(trial, Et);
                    if (Et.norm() <= E.norm()) break;
                    alpha *= 0.5;
                }
                if (Et.norm() >= E.norm() && E.norm() > newton_tol) break;  // stalled
                h = trial;
                E = Et;
            }
            if (E.norm() <= newton_tol) consider(h, face);
        }
    }

    if (!found)
        throw BanachConditionFails("no face admits a direction solving the Banach condition");
    return best;
}

CmpResult cmp_iterate(const SetMap& map, const Vector& y_start, double tol, int max_iter,
                      double relaxation) {
    if (max_iter < 1) throw DimensionError("cmp_iterate: max_iter must be positive");

    Vector y = y_start;
    std::deque<double> ratios;
    double prev_step = -1.0;
    CmpResult res;
    res.relaxation = relaxation;

    for (int k = 0; k < max_iter; ++k) {
        PointSet set = map(y);
        if (set.empty())
            throw NotRegularError("cmp_iterate: the map returned an empty set");
        Vector sel = select_nearest(set, y);
        double step = (sel - y).norm();

        if (prev_step > 1e-300) {
            ratios.push_back(step / prev_step);
            if (ratios.size() > 5) ratios.pop_front();
        }
        prev_step = step;

        if (step <= tol) {
            res.fixed_point = sel;
            res.iterations = k + 1;
            res.theta_estimate = ratios.empty() ? 0.0 : *std::max_element(ratios.begin(), ratios.end());
            return res;
        }

        if (k >= 10 && ratios.size() == 5 && step > 100.0 * tol &&
            *std::min_element(ratios.begin(), ratios.end()) >= 0.995)
            throw NoContractionError("cmp_iterate: step ratios stayed at or above one");

        y += relaxation * (sel - y);
    }
    throw NonConvergence("cmp_iterate: iteration limit reached");
}

ImplicitSolution solve_implicit(const ProblemSpec& problem, const Vector& x,
                                const SolveOptions& opts) {
    if (x.size() != problem.m) throw DimensionError("solve_implicit: parameter dimension");

    ImplicitSolution sol;
    sol.x = x;

    const Vector fx0 = problem.eval(x, problem.y0);
    const double resid0 = inclusion_residual(problem.cone, problem.y0, fx0);
    if (fx0.norm() <= opts.zero_tol || resid0 <= opts.zero_tol) {
        sol.h = Vector::Zero(problem.n);
        sol.y_corr = Vector::Zero(problem.n);
        sol.phi = problem.y0;
        sol.inclusion_residual = resid0;
        sol.trivial = true;
        return sol;
    }

    DegeneracyProfile prof = degeneracy_profile(problem, 1e-8);
    if (!prof.completely_degenerate)
        throw NotDegenerateError("lower-order derivatives do not vanish at the base point");

    BanachSolution bs = solve_banach(problem, x, opts);
    sol.h = bs.h;

    const SymTensor& T = problem.derivative_tensor(problem.p);
    // p = 1 runs the same pipeline with a plain Jacobian model (control mode)
    PFactorOperator op =
        problem.p >= 2 ? build_p_factor(T, bs.h, problem.cone, problem.p, problem.y0)
                       : PFactorOperator{T.as_matrix(), bs.h, problem.y0, problem.cone, 1, T};

    SetMap map = [&](const Vector& y) {
        Vector r = op.A * (bs.h + y) - problem.eval(x, problem.y0 + bs.h + y);
        return invert(op, r, opts.tol, &y).points;
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

    sol.y_corr = cmp.fixed_point;
    sol.phi = problem.y0 + bs.h + cmp.fixed_point;
    sol.iterations = cmp.iterations;
    sol.theta_estimate = cmp.theta_estimate;
    sol.relaxation = cmp.relaxation;
    sol.inclusion_residual =
        inclusion_residual(problem.cone, sol.phi, problem.eval(x, sol.phi));
    sol.m_ratio = (bs.h + cmp.fixed_point).norm() / std::pow(fx0.norm(), 1.0 / problem.p);

    if (!(sol.inclusion_residual <= std::max(10.0 * opts.tol, 1e-9)))
        throw NonConvergence("fixed point does not satisfy the original inclusion (residual " +
                             std::to_string(sol.inclusion_residual) + ")");
    return sol;
}

ScalingReport scaling_study(const ProblemSpec& problem, const std::vector<Vector>& xs,
                            const SolveOptions& opts) {
    ScalingReport rep;
    for (const Vector& x : xs) {
        ScalingSample s;
        s.x = x;
        s.norm_x = x.norm();
        s.norm_f = problem.eval(x, problem.y0).norm();
        try {
            ImplicitSolution sol = solve_implicit(problem, x, opts);
            s.norm_phi = (sol.phi - problem.y0).norm();
            s.ratio = s.norm_f > 0.0 ? s.norm_phi / std::pow(s.norm_f, 1.0 / problem.p) : 0.0;
            s.ok = true;
            ++rep.successes;
        } catch (const HypothesisError& e) {
            s.error = e.what();
        }
        rep.samples.push_back(std::move(s));
    }

    if (rep.successes < 5)
        throw InsufficientSamples("scaling_study: fewer than 5 successful solves (" +
                                  std::to_string(rep.successes) + ")");

    // least-squares slope of log ||phi|| against log ||f(x, y0)||
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (const ScalingSample& s : rep.samples) {
        if (!s.ok || s.norm_f <= 0.0 || s.norm_phi <= 0.0) continue;
        double lx = std::log(s.norm_f), ly = std::log(s.norm_phi);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++cnt;
        rep.m_max = std::max(rep.m_max, s.ratio);
    }
    if (cnt < 2) throw InsufficientSamples("scaling_study: not enough nontrivial samples to fit");
    rep.fitted_exponent = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    return rep;
}

std::string scaling_table(const ScalingReport& report) {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-14s %-14s %-14s %-14s %s\n", "norm_x", "norm_f",
                  "norm_phi", "ratio", "status");
    out << buf;
    for (const ScalingSample& s : report.samples) {
        std::snprintf(buf, sizeof(buf), "%-14.6e %-14.6e %-14.6e %-14.6e %s\n", s.norm_x,
                      s.norm_f, s.norm_phi, s.ratio, s.ok ? "ok" : s.error.c_str());
        out << buf;
    }
    return out.str();
}

}  // namespace gesolve
