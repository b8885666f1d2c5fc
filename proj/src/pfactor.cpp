#include "gesolve/pfactor.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "gesolve/rng.hpp"

namespace gesolve {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

constexpr double kRankTol = 1e-10;

// Clamp v(theta) = v0 + theta*d against the sign constraints of the face and
// pick the feasible theta closest to `preferred`. Returns false when the
// whole line misses the feasible region.
bool clamp_on_line(const Vector& v0, const Vector& d, const std::vector<int>& cols,
                   const std::vector<int>& act, const ConeSpec& cone, const Vector& shift,
                   const Matrix& A, const Vector& rhs, const Vector& u_base, double tol,
                   double preferred, double* theta_out) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    auto tighten = [&](double a, double b) {
        // constraint a + theta*b >= 0 (already tol-slackened by the caller)
        if (std::abs(b) < 1e-14) {
            if (a < 0) lo = 1, hi = 0;  // infeasible
            return;
        }
        if (b > 0)
            lo = std::max(lo, -a / b);
        else
            hi = std::min(hi, -a / b);
    };

    // bound constraints on the unknown nonnegative coordinates
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int j = cols[k];
        if (!cone.is_nonneg(j)) continue;
        tighten(shift[j] + u_base[j] + v0[k] + tol, d[k]);
    }
    // slack sign on active coordinates: (rhs - A u)_i <= tol
    for (int i : act) {
        double s0 = rhs[i];
        double sd = 0.0;
        for (int j = 0; j < A.cols(); ++j) s0 -= A(i, j) * u_base[j];
        for (std::size_t k = 0; k < cols.size(); ++k) {
            s0 -= A(i, cols[k]) * v0[k];
            sd -= A(i, cols[k]) * d[k];
        }
        // tol - s0 - theta*sd >= 0
        tighten(tol - s0, -sd);
    }
    if (lo > hi) return false;
    *theta_out = std::clamp(preferred, lo, hi);
    return true;
}

}  // namespace

PFactorOperator build_p_factor(const SymTensor& tensor, const Vector& h, const ConeSpec& cone,
                               int p, const Vector& shift) {
    if (p < 2) throw DimensionError("build_p_factor: p must be >= 2");
    if (tensor.order() != p) throw DimensionError("build_p_factor: tensor order must equal p");
    if (h.size() != tensor.in_dim()) throw DimensionError("build_p_factor: direction dimension");
    if (h.norm() == 0.0) throw DegenerateDirectionError("build_p_factor: h must be nonzero");
    if (cone.dim() != tensor.in_dim()) throw DimensionError("build_p_factor: cone dimension");

    PFactorOperator op{Matrix(), h, shift, cone, p, tensor};
    if (op.shift.size() == 0) op.shift = Vector::Zero(h.size());
    op.A = contract(tensor, h, p - 1).as_matrix() / factorial(p - 1);
    return op;
}

InverseSolveResult linear_inclusion_points(const Matrix& A, const Vector& rhs,
                                           const ConeSpec& cone, const Vector& shift,
                                           double tol, const Vector* anchor_u) {
    const int n = static_cast<int>(A.rows());
    if (A.cols() != n || rhs.size() != n || cone.dim() != n || shift.size() != n)
        throw DimensionError("linear_inclusion_points: dimension mismatch");

    InverseSolveResult result;
    const double scale = 1.0 + rhs.lpNorm<Eigen::Infinity>() +
                         A.lpNorm<Eigen::Infinity>();
    const double eq_tol = std::max(tol, 1e-12) * scale;

    for (const Face& face : faces(cone)) {
        // pinned coordinates: shift + u = 0 on the active set
        Vector u_base = Vector::Zero(n);
        std::vector<int> cols;
        for (int j = 0; j < n; ++j) {
            if (face.is_active(j))
                u_base[j] = -shift[j];
            else
                cols.push_back(j);
        }
        std::vector<int> rows = cols;  // equality rows = non-active coordinates

        Vector b_full = rhs - A * u_base;
        const int k = static_cast<int>(cols.size());

        auto accept = [&](const Vector& u) -> bool {
            Vector slack = rhs - A * u;
            for (int i : rows)
                if (std::abs(slack[i]) > eq_tol) return false;
            for (int j : cols)
                if (cone.is_nonneg(j) && shift[j] + u[j] < -tol) return false;
            for (int i : face.active)
                if (slack[i] > eq_tol) return false;
            if (result.points.add(u)) result.face_tags.push_back(face);
            return true;
        };

        if (k == 0) {
            accept(u_base);
            continue;
        }

        Matrix M(k, k);
        Vector b(k);
        for (int r = 0; r < k; ++r) {
            b[r] = b_full[rows[r]];
            for (int c = 0; c < k; ++c) M(r, c) = A(rows[r], cols[c]);
        }

        Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
        svd.setThreshold(kRankTol);
        const int rank = static_cast<int>(svd.rank());

        if (rank == k) {
            Vector v = svd.solve(b);
            Vector u = u_base;
            for (int c = 0; c < k; ++c) u[cols[c]] += v[c];
            accept(u);
            continue;
        }

        // Rank-deficient subsystem. Solve least squares; if inconsistent the
        // face contributes nothing. Otherwise the fibre contains an affine
        // piece: flag the face and keep one clamped representative.
        Vector v_min = svd.solve(b);
        if ((M * v_min - b).norm() > eq_tol * (1.0 + smax)) continue;

        result.degenerate_faces.push_back(face);

        Matrix kernel = svd.matrixV().rightCols(k - rank);
        Vector v_target = v_min;
        if (anchor_u) {
            Vector a(k);
            for (int c = 0; c < k; ++c) a[c] = (*anchor_u)[cols[c]] - u_base[cols[c]];
            v_target = v_min + kernel * (kernel.transpose() * (a - v_min));
        }

        auto try_v = [&](const Vector& v) -> bool {
            Vector u = u_base;
            for (int c = 0; c < k; ++c) u[cols[c]] += v[c];
            return accept(u);
        };

        if (try_v(v_target)) continue;
        if (anchor_u && try_v(v_min)) continue;

        bool placed = false;
        if (anchor_u && (v_target - v_min).norm() > 0) {
            double theta;
            if (clamp_on_line(v_min, v_target - v_min, cols, face.active, cone, shift, A, rhs,
                              u_base, tol, 1.0, &theta))
                placed = try_v(v_min + theta * (v_target - v_min));
        }
        for (int kc = 0; !placed && kc < kernel.cols(); ++kc) {
            double theta;
            if (clamp_on_line(v_min, kernel.col(kc), cols, face.active, cone, shift, A, rhs,
                              u_base, tol, 0.0, &theta))
                placed = try_v(v_min + theta * kernel.col(kc));
        }
    }
    return result;
}

InverseSolveResult invert(const PFactorOperator& op, const Vector& z, double tol,
                          const Vector* anchor_y) {
    Vector anchor_u;
    const Vector* anchor = nullptr;
    if (anchor_y) {
        anchor_u = *anchor_y + op.h;
        anchor = &anchor_u;
    }
    InverseSolveResult res = linear_inclusion_points(op.A, z, op.cone, op.shift, tol, anchor);

    InverseSolveResult out;
    out.degenerate_faces = std::move(res.degenerate_faces);
    for (std::size_t i = 0; i < res.points.size(); ++i) {
        if (out.points.add(res.points[i] - op.h)) out.face_tags.push_back(res.face_tags[i]);
    }
    return out;
}

DegeneracyProfile degeneracy_profile(const ProblemSpec& problem, double tol) {
    DegeneracyProfile prof;
    prof.p = problem.p;
    for (int k = 1; k <= problem.p; ++k)
        prof.norms.push_back(problem.derivative_tensor(k).max_abs());

    bool lower_zero = true;
    for (int k = 1; k < problem.p; ++k)
        if (prof.norms[k - 1] > tol) lower_zero = false;
    if (prof.norms[problem.p - 1] <= tol) {
        if (lower_zero)
            throw OrderTooLowError("derivative tensors vanish through order p; declared order too low");
        prof.completely_degenerate = false;
        return prof;
    }
    prof.completely_degenerate = lower_zero;
    return prof;
}

PairSampler ball_pair_sampler(const Vector& center, double radius, std::uint64_t seed) {
    const int n = static_cast<int>(center.size());
    return [center, radius, seed, n](int index) {
        Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(index));
        Vector z1 = center + rng.ball(n, radius);
        Vector z2 = center + rng.ball(n, radius);
        return std::make_pair(z1, z2);
    };
}

RegularityReport strong_regularity_estimate(const PFactorOperator& op, const PairSampler& sampler,
                                            int samples, double tol) {
    if (samples < 2) throw DimensionError("strong_regularity_estimate: need at least 2 samples");

    RegularityReport rep;
    rep.sample_count = samples;
    const double hpow = std::pow(op.h.norm(), op.p - 1);

    std::vector<double> ratios;
    for (int s = 0; s < samples; ++s) {
        auto [z1, z2] = sampler(s);
        double dz = (z1 - z2).norm();
        if (dz < 1e-14) continue;

        InverseSolveResult r1 = invert(op, z1, tol);
        InverseSolveResult r2 = invert(op, z2, tol);
        if (!r1.degenerate_faces.empty() || !r2.degenerate_faces.empty()) {
            ++rep.degenerate_face_count;
            continue;
        }
        if (!r1.invertible() || !r2.invertible()) {
            ++rep.not_invertible_count;
            continue;
        }
        double ratio = hpow * hausdorff(r1.points, r2.points) / dz;
        if (ratios.empty() || ratio > rep.c_estimate) {
            rep.c_estimate = ratio;
            rep.worst_pair = {z1, z2};
        }
        ratios.push_back(ratio);
    }

    rep.valid_pairs = static_cast<int>(ratios.size());
    if (ratios.empty())
        throw NotRegularError("strong_regularity_estimate: no sample produced usable fibres");
    std::sort(ratios.begin(), ratios.end());
    rep.median_ratio = ratios[ratios.size() / 2];
    return rep;
}

double approximation_delta(const ProblemSpec& problem, const Vector& x, double radius,
                           int samples, std::uint64_t seed) {
    if (!(radius > 0.0)) throw DimensionError("approximation_delta: radius must be positive");
    if (samples < 1) throw DimensionError("approximation_delta: need at least one sample");

    const SymTensor& T = problem.derivative_tensor(problem.p);
    const double c = 1.0 / factorial(problem.p);

    double delta = 0.0;
    for (int s = 0; s < samples; ++s) {
        Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(s));
        Vector y1 = rng.ball(problem.n, radius);
        Vector y2 = rng.ball(problem.n, radius);
        double dy = (y1 - y2).norm();
        if (dy < 1e-14 * radius) continue;

        Vector num = problem.eval(x, problem.y0 + y1) - problem.eval(x, problem.y0 + y2) -
                     c * (apply_power(T, y1) - apply_power(T, y2));
        double den = (std::pow(y1.norm(), problem.p - 1) + std::pow(y2.norm(), problem.p - 1)) * dy;
        if (den > 0.0) delta = std::max(delta, num.norm() / den);
    }
    return delta;
}

bool robinson_check(const ProblemSpec& problem, double tol, std::uint64_t seed) {
    const Matrix J = problem.derivative_tensor(1).as_matrix();
    const Vector f0 = problem.eval(problem.x0, problem.y0);
    const Vector shift = Vector::Zero(problem.n);

    const double delta = 0.01 * std::max(1.0, J.lpNorm<Eigen::Infinity>());
    std::vector<Vector> rhs;
    rhs.push_back(Vector::Zero(problem.n));
    for (int i = 0; i < problem.n; ++i) {
        Vector e = Vector::Zero(problem.n);
        e[i] = delta;
        rhs.push_back(e);
        rhs.push_back(-e);
    }
    for (int s = 0; s < 16; ++s) {
        Rng rng = Rng::for_sample(seed ^ 0x9C0FFEEull, static_cast<std::uint64_t>(s));
        rhs.push_back(rng.ball(problem.n, delta));
    }

    for (const Vector& z : rhs) {
        Vector b = z - f0 + J * problem.y0;
        InverseSolveResult r = linear_inclusion_points(J, b, problem.cone, shift, tol);
        if (!r.degenerate_faces.empty()) return false;
        if (r.points.size() != 1) return false;
    }
    return true;
}

}  // namespace gesolve
