#ifndef GESOLVE_MULTILINEAR_HPP
#define GESOLVE_MULTILINEAR_HPP

#include <Eigen/Core>
#include <functional>
#include <span>
#include <vector>

#include "gesolve/errors.hpp"

namespace gesolve {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Dense symmetric k-multilinear map from in_dim^k to out_dim. Coefficients
/// are stored fully (problem dimensions are tiny) and symmetrized over the
/// input slots on construction or on demand.
class SymTensor {
public:
    SymTensor(int order, int out_dim, int in_dim);

    static SymTensor from_matrix(const Matrix& M);  // order-1 tensor

    int order() const { return order_; }
    int out_dim() const { return out_dim_; }
    int in_dim() const { return in_dim_; }

    double coeff(int i, std::span<const int> idx) const { return c_[flat(i, idx)]; }
    void set_coeff(int i, std::span<const int> idx, double v) { c_[flat(i, idx)] = v; }
    /// Writes v into every slot-permutation of idx.
    void set_symmetric(int i, std::span<const int> idx, double v);

    void symmetrize();
    bool is_symmetric(double tol = 1e-12) const;

    double max_abs() const;
    Matrix as_matrix() const;  // order-1 only

    const std::vector<double>& raw() const { return c_; }
    std::vector<double>& raw() { return c_; }

private:
    std::size_t flat(int i, std::span<const int> idx) const;

    int order_, out_dim_, in_dim_;
    std::vector<double> c_;
};

/// B(x1, ..., xk): multilinear contraction against all arguments.
Vector apply_form(const SymTensor& T, const std::vector<Vector>& args);

/// B[h]^k, the p-form with all arguments equal.
Vector apply_power(const SymTensor& T, const Vector& h);

/// Partial application: contract `count` slots against h, leaving a tensor
/// of order T.order() - count.
SymTensor contract(const SymTensor& T, const Vector& h, int count);

/// Central-difference estimate of the order-th derivative tensor of eval at
/// point, symmetrized. order must be in 1..4.
SymTensor fd_derivative_tensor(const std::function<Vector(const Vector&)>& eval,
                               const Vector& point, int order, double step);

/// Step choice balancing truncation and roundoff for central differences.
double fd_default_step(int order, const Vector& point);

/// Finite point set; points closer than merge_tol are treated as duplicates.
class PointSet {
public:
    explicit PointSet(double merge_tol = 1e-9) : merge_tol_(merge_tol) {}

    /// Returns false when the point was merged into an existing one.
    bool add(const Vector& p);

    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }
    const Vector& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Vector>& points() const { return pts_; }

    double distance_to(const Vector& p) const;

private:
    std::vector<Vector> pts_;
    double merge_tol_;
};

/// max(sup_{a in S1} dist(a, S2), sup_{b in S2} dist(b, S1)).
double hausdorff(const PointSet& s1, const PointSet& s2);

namespace detail {
/// Odometer over {0..base-1}^len; returns false when the sweep is complete.
bool next_multi_index(std::span<int> idx, int base);
}  // namespace detail

}  // namespace gesolve

#endif
