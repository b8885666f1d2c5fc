#ifndef GESOLVE_CONES_HPP
#define GESOLVE_CONES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gesolve/multilinear.hpp"

namespace gesolve {

enum class CoordKind : std::uint8_t { Free, NonNeg };

/// Product of free lines (F) and nonnegative half-lines (P), one per
/// coordinate. This covers every cone used by the built-in problems.
class ConeSpec {
public:
    ConeSpec() = default;
    explicit ConeSpec(std::vector<CoordKind> kinds) : kinds_(std::move(kinds)) {}

    static ConeSpec all_free(int n) { return ConeSpec(std::vector<CoordKind>(n, CoordKind::Free)); }
    static ConeSpec all_nonneg(int n) { return ConeSpec(std::vector<CoordKind>(n, CoordKind::NonNeg)); }
    /// Parses a string over {F, P}, e.g. "FFPP".
    static ConeSpec from_string(const std::string& s);
    std::string to_string() const;

    int dim() const { return static_cast<int>(kinds_.size()); }
    CoordKind kind(int i) const { return kinds_[i]; }
    bool is_nonneg(int i) const { return kinds_[i] == CoordKind::NonNeg; }
    std::vector<int> nonneg_indices() const;

    bool operator==(const ConeSpec&) const = default;

private:
    std::vector<CoordKind> kinds_;
};

/// Active-set pattern: the nonnegative coordinates pinned to zero. Inactive
/// nonnegative coordinates are constrained strictly positive, free
/// coordinates are unconstrained.
struct Face {
    std::vector<int> active;  // sorted coordinate indices
    std::uint32_t mask = 0;   // bit i <=> i-th NonNeg coordinate active

    bool is_active(int coord) const;
    std::string to_string() const;
    bool operator==(const Face&) const = default;
};

enum class NormalConstraint : std::uint8_t { Zero, NonPos };

/// Per-coordinate description of N_C(y): empty when y is infeasible, else a
/// sign pattern (z_i = 0 or z_i <= 0).
struct NormalConeRep {
    bool feasible = false;
    std::vector<NormalConstraint> comps;  // valid only when feasible
};

bool in_cone(const ConeSpec& spec, const Vector& y, double tol);

NormalConeRep normal_cone_at(const ConeSpec& spec, const Vector& y, double tol);

bool in_normal_cone(const ConeSpec& spec, const Vector& y, const Vector& z, double tol);

/// Euclidean distance from -v to N_C(y); zero exactly when 0 in v + N_C(y)
/// holds. Returns +inf when y is infeasible (empty normal cone).
double inclusion_residual(const ConeSpec& spec, const Vector& y, const Vector& v,
                          double tol = 1e-10);

/// All 2^#NonNeg active-set patterns, in mask-counting order so that for
/// R^2_+ the sequence is {}, {1}, {2}, {1,2}. Throws EnumerationLimitError
/// above 20 nonnegative coordinates.
std::vector<Face> faces(const ConeSpec& spec);

/// The face whose sign pattern matches y (y must be in the cone).
Face face_of(const ConeSpec& spec, const Vector& y, double tol);

/// Default activity/feasibility tolerance used by the solvers.
inline constexpr double kActivityTol = 1e-10;

}  // namespace gesolve

#endif
