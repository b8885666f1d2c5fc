#include "gesolve/multilinear.hpp"

#include <algorithm>
#include <cmath>

namespace gesolve {

namespace detail {

bool next_multi_index(std::span<int> idx, int base) {
    for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
        if (++idx[pos] < base) return true;
        idx[pos] = 0;
    }
    return false;
}

}  // namespace detail

SymTensor::SymTensor(int order, int out_dim, int in_dim)
    : order_(order), out_dim_(out_dim), in_dim_(in_dim) {
    if (order < 1 || out_dim < 1 || in_dim < 1)
        throw DimensionError("SymTensor: order and dimensions must be positive");
    std::size_t size = out_dim;
    for (int k = 0; k < order; ++k) size *= in_dim;
    c_.assign(size, 0.0);
}

SymTensor SymTensor::from_matrix(const Matrix& M) {
    SymTensor T(1, static_cast<int>(M.rows()), static_cast<int>(M.cols()));
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) {
            int idx[1] = {j};
            T.set_coeff(i, idx, M(i, j));
        }
    return T;
}

std::size_t SymTensor::flat(int i, std::span<const int> idx) const {
    std::size_t f = i;
    for (int k = 0; k < order_; ++k) f = f * in_dim_ + idx[k];
    return f;
}

void SymTensor::set_symmetric(int i, std::span<const int> idx, double v) {
    std::vector<int> perm(idx.begin(), idx.end());
    std::sort(perm.begin(), perm.end());
    do {
        set_coeff(i, perm, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

void SymTensor::symmetrize() {
    if (order_ == 1) return;
    std::vector<int> idx(order_, 0);
    do {
        if (!std::is_sorted(idx.begin(), idx.end())) continue;
        std::vector<int> perm = idx;
        for (int i = 0; i < out_dim_; ++i) {
            double sum = 0.0;
            int count = 0;
            std::sort(perm.begin(), perm.end());
            do {
                sum += c_[flat(i, perm)];
                ++count;
            } while (std::next_permutation(perm.begin(), perm.end()));
            double avg = sum / count;
            std::sort(perm.begin(), perm.end());
            do {
                c_[flat(i, perm)] = avg;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    } while (detail::next_multi_index(idx, in_dim_));
}

bool SymTensor::is_symmetric(double tol) const {
    if (order_ == 1) return true;
    std::vector<int> idx(order_, 0);
    do {
        std::vector<int> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < out_dim_; ++i)
            if (std::abs(c_[flat(i, idx)] - c_[flat(i, sorted)]) > tol) return false;
    } while (detail::next_multi_index(idx, in_dim_));
    return true;
}

double SymTensor::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

Matrix SymTensor::as_matrix() const {
    if (order_ != 1) throw DimensionError("SymTensor::as_matrix: tensor order is not 1");
    Matrix M(out_dim_, in_dim_);
    for (int i = 0; i < out_dim_; ++i)
        for (int j = 0; j < in_dim_; ++j) {
            int idx[1] = {j};
            M(i, j) = coeff(i, idx);
        }
    return M;
}

Vector apply_form(const SymTensor& T, const std::vector<Vector>& args) {
    if (static_cast<int>(args.size()) != T.order())
        throw DimensionError("apply_form: argument count does not match tensor order");
    for (const Vector& a : args)
        if (a.size() != T.in_dim())
            throw DimensionError("apply_form: argument dimension mismatch");

    Vector out = Vector::Zero(T.out_dim());
    std::vector<int> idx(T.order(), 0);
    do {
        double w = 1.0;
        for (int k = 0; k < T.order(); ++k) w *= args[k][idx[k]];
        if (w == 0.0) continue;
        for (int i = 0; i < T.out_dim(); ++i) out[i] += T.coeff(i, idx) * w;
    } while (detail::next_multi_index(idx, T.in_dim()));
    return out;
}

Vector apply_power(const SymTensor& T, const Vector& h) {
    return apply_form(T, std::vector<Vector>(T.order(), h));
}

SymTensor contract(const SymTensor& T, const Vector& h, int count) {
    if (count < 1 || count >= T.order())
        throw DimensionError("contract: count must satisfy 1 <= count < order");
    if (h.size() != T.in_dim()) throw DimensionError("contract: direction dimension mismatch");

    SymTensor R(T.order() - count, T.out_dim(), T.in_dim());
    std::vector<int> rest(R.order(), 0);
    std::vector<int> full(T.order(), 0);
    do {
        std::copy(rest.begin(), rest.end(), full.begin() + count);
        std::vector<double> acc(T.out_dim(), 0.0);
        std::vector<int> lead(count, 0);
        do {
            double w = 1.0;
            for (int k = 0; k < count; ++k) w *= h[lead[k]];
            if (w == 0.0) continue;
            std::copy(lead.begin(), lead.end(), full.begin());
            for (int i = 0; i < T.out_dim(); ++i) acc[i] += T.coeff(i, full) * w;
        } while (detail::next_multi_index(lead, T.in_dim()));
        for (int i = 0; i < T.out_dim(); ++i) R.set_coeff(i, rest, acc[i]);
    } while (detail::next_multi_index(rest, T.in_dim()));
    return R;
}

double fd_default_step(int order, const Vector& point) {
    double scale = std::max(1.0, point.norm());
    switch (order) {
        case 1: return 1e-5 * scale;
        case 2: return 1e-3 * scale;
        case 3: return 1e-2 * scale;
        default: return 3e-2 * scale;
    }
}

SymTensor fd_derivative_tensor(const std::function<Vector(const Vector&)>& eval,
                               const Vector& point, int order, double step) {
    if (order < 1 || order > 4)
        throw DimensionError("fd_derivative_tensor: order must be in 1..4");
    if (!(step > 0.0)) throw DimensionError("fd_derivative_tensor: step must be positive");

    auto call = [&](const Vector& y) -> Vector {
        Vector v;
        try {
            v = eval(y);
        } catch (const std::exception& e) {
            throw EvalError(std::string("evaluator failed: ") + e.what());
        }
        if (!v.allFinite()) throw EvalError("evaluator produced non-finite values");
        return v;
    };

    const int n = static_cast<int>(point.size());
    Vector probe = call(point);
    const int out_dim = static_cast<int>(probe.size());
    SymTensor T(order, out_dim, n);

    const double denom = std::pow(2.0 * step, order);
    std::vector<int> idx(order, 0);
    do {
        if (!std::is_sorted(idx.begin(), idx.end())) continue;  // mirror later
        Vector acc = Vector::Zero(out_dim);
        for (int signs = 0; signs < (1 << order); ++signs) {
            Vector y = point;
            int parity = 0;
            for (int k = 0; k < order; ++k) {
                if (signs & (1 << k)) {
                    y[idx[k]] += step;
                } else {
                    y[idx[k]] -= step;
                    ++parity;
                }
            }
            Vector fy = call(y);
            acc += (parity % 2 == 0) ? fy : -fy;
        }
        acc /= denom;
        for (int i = 0; i < out_dim; ++i) T.set_symmetric(i, idx, acc[i]);
    } while (detail::next_multi_index(idx, n));
    return T;
}

bool PointSet::add(const Vector& p) {
    if (!p.allFinite()) throw EvalError("PointSet: non-finite point");
    for (const Vector& q : pts_)
        if ((q - p).norm() <= merge_tol_) return false;
    pts_.push_back(p);
    return true;
}

double PointSet::distance_to(const Vector& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Vector& q : pts_) best = std::min(best, (q - p).norm());
    return best;
}

double hausdorff(const PointSet& s1, const PointSet& s2) {
    if (s1.empty() || s2.empty())
        throw EmptySetError("hausdorff: both sets must be non-empty");
    double d = 0.0;
    for (const Vector& a : s1.points()) d = std::max(d, s2.distance_to(a));
    for (const Vector& b : s2.points()) d = std::max(d, s1.distance_to(b));
    return d;
}

}  // namespace gesolve
