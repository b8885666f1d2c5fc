#ifndef GESOLVE_PFACTOR_HPP
#define GESOLVE_PFACTOR_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "gesolve/cones.hpp"
#include "gesolve/multilinear.hpp"
#include "gesolve/problems.hpp"

namespace gesolve {

/// The set-valued linearization along a direction h: u maps to
/// A*u + N_C(shift + u) with A = 1/(p-1)! * T[h]^{p-1}. `shift` offsets the
/// cone argument (zero in the normalized setting, the base point in the
/// tangent setting). Callers work with y = u - h.
struct PFactorOperator {
    Matrix A;
    Vector h;
    Vector shift;
    ConeSpec cone;
    int p = 2;
    SymTensor tensor;  // the order-p tensor A was contracted from
};

PFactorOperator build_p_factor(const SymTensor& tensor, const Vector& h, const ConeSpec& cone,
                               int p, const Vector& shift = Vector());

/// Solutions of a set-valued inverse query. Faces whose equality subsystem
/// was rank-deficient but consistent contribute one clamped representative
/// point and are recorded in degenerate_faces: the true fibre contains an
/// affine piece there, so any Lipschitz estimate built on top of this result
/// must be reported as regularity-failure evidence.
struct InverseSolveResult {
    PointSet points;
    std::vector<Face> face_tags;        // one per point
    std::vector<Face> degenerate_faces;

    bool invertible() const { return !points.empty(); }
};

/// All u with z in A*u + N_C(shift + u), reported as y = u - h. When an
/// anchor (in y-coordinates) is given, representatives on degenerate faces
/// are chosen nearest to it instead of minimum-norm.
InverseSolveResult invert(const PFactorOperator& op, const Vector& z, double tol,
                          const Vector* anchor_y = nullptr);

/// Face-enumeration solver for rhs in A*u + N_C(shift + u); the shared core
/// of invert, the Robinson diagnostic and the LCP cross-checks.
InverseSolveResult linear_inclusion_points(const Matrix& A, const Vector& rhs,
                                           const ConeSpec& cone, const Vector& shift,
                                           double tol, const Vector* anchor_u = nullptr);

struct DegeneracyProfile {
    int p = 0;
    std::vector<double> norms;  // max-norm of f_y^{(k)}, k = 1..p
    bool completely_degenerate = false;
};

/// Norms of the y-derivative tensors at the base point. Verdict is true when
/// every order below p vanishes (within tol) and order p does not. Throws
/// OrderTooLowError when order p vanishes as well.
DegeneracyProfile degeneracy_profile(const ProblemSpec& problem, double tol = 1e-8);

struct RegularityReport {
    double c_estimate = 0.0;
    int sample_count = 0;
    std::pair<Vector, Vector> worst_pair;
    double median_ratio = 0.0;
    int valid_pairs = 0;
    int not_invertible_count = 0;
    int degenerate_face_count = 0;
    std::uint64_t seed = 0;
    double radius = 0.0;
};

using PairSampler = std::function<std::pair<Vector, Vector>(int index)>;

/// Samples z-pairs and reports the scaled Hausdorff ratios
/// ||h||^{p-1} H(inv(z1), inv(z2)) / ||z1 - z2||. Pairs with an empty fibre
/// or a degenerate face are counted as failure evidence and excluded from
/// the ratio statistics. Throws NotRegularError when no pair was usable.
RegularityReport strong_regularity_estimate(const PFactorOperator& op, const PairSampler& sampler,
                                            int samples, double tol);

/// Pair sampler uniform on the ball around `center`; streams derive from
/// (seed, index).
PairSampler ball_pair_sampler(const Vector& center, double radius, std::uint64_t seed);

/// Empirical modulus of the degree-p Taylor closeness bound: the sup over
/// sampled y1, y2 in the radius ball of
/// ||f(x,y1)-f(x,y2) - (T[y1]^p - T[y2]^p)/p!|| / ((||y1||^{p-1}+||y2||^{p-1})||y1-y2||).
double approximation_delta(const ProblemSpec& problem, const Vector& x, double radius,
                           int samples, std::uint64_t seed = 0);

/// Diagnostic for classical strong regularity of the y-linearization at the
/// base point: true when the linearized inclusion has exactly one solution
/// for every sampled right-hand side near zero and no degenerate faces.
bool robinson_check(const ProblemSpec& problem, double tol = 1e-9, std::uint64_t seed = 0);

}  // namespace gesolve

#endif
