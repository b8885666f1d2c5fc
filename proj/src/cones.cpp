#include "gesolve/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gesolve {

ConeSpec ConeSpec::from_string(const std::string& s) {
    std::vector<CoordKind> kinds;
    kinds.reserve(s.size());
    for (char c : s) {
        if (c == 'F' || c == 'f')
            kinds.push_back(CoordKind::Free);
        else if (c == 'P' || c == 'p')
            kinds.push_back(CoordKind::NonNeg);
        else
            throw DimensionError(std::string("cone string: unexpected character '") + c + "'");
    }
    return ConeSpec(std::move(kinds));
}

std::string ConeSpec::to_string() const {
    std::string s;
    s.reserve(kinds_.size());
    for (CoordKind k : kinds_) s.push_back(k == CoordKind::Free ? 'F' : 'P');
    return s;
}

std::vector<int> ConeSpec::nonneg_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (is_nonneg(i)) out.push_back(i);
    return out;
}

bool Face::is_active(int coord) const {
    return std::binary_search(active.begin(), active.end(), coord);
}

std::string Face::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < active.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(active[i] + 1);
    }
    return s + "}";
}

bool in_cone(const ConeSpec& spec, const Vector& y, double tol) {
    if (y.size() != spec.dim()) throw DimensionError("in_cone: dimension mismatch");
    for (int i = 0; i < spec.dim(); ++i)
        if (spec.is_nonneg(i) && y[i] < -tol) return false;
    return true;
}

NormalConeRep normal_cone_at(const ConeSpec& spec, const Vector& y, double tol) {
    if (y.size() != spec.dim()) throw DimensionError("normal_cone_at: dimension mismatch");
    NormalConeRep rep;
    if (!in_cone(spec, y, tol)) return rep;
    rep.feasible = true;
    rep.comps.resize(spec.dim());
    for (int i = 0; i < spec.dim(); ++i) {
        if (spec.is_nonneg(i) && std::abs(y[i]) <= tol)
            rep.comps[i] = NormalConstraint::NonPos;
        else
            rep.comps[i] = NormalConstraint::Zero;
    }
    return rep;
}

bool in_normal_cone(const ConeSpec& spec, const Vector& y, const Vector& z, double tol) {
    if (z.size() != spec.dim()) throw DimensionError("in_normal_cone: dimension mismatch");
    NormalConeRep rep = normal_cone_at(spec, y, std::max(tol, kActivityTol));
    if (!rep.feasible) return false;
    for (int i = 0; i < spec.dim(); ++i) {
        if (rep.comps[i] == NormalConstraint::Zero) {
            if (std::abs(z[i]) > tol) return false;
        } else {
            if (z[i] > tol) return false;
        }
    }
    return true;
}

double inclusion_residual(const ConeSpec& spec, const Vector& y, const Vector& v, double tol) {
    if (v.size() != spec.dim()) throw DimensionError("inclusion_residual: dimension mismatch");
    NormalConeRep rep = normal_cone_at(spec, y, tol);
    if (!rep.feasible) return std::numeric_limits<double>::infinity();
    // Distance from -v to the sign-pattern set, computed per coordinate.
    double sq = 0.0;
    for (int i = 0; i < spec.dim(); ++i) {
        double w = -v[i];
        double d = (rep.comps[i] == NormalConstraint::Zero) ? w : std::max(w, 0.0);
        sq += d * d;
    }
    return std::sqrt(sq);
}

std::vector<Face> faces(const ConeSpec& spec) {
    std::vector<int> nn = spec.nonneg_indices();
    if (nn.size() > 20)
        throw EnumerationLimitError("faces: more than 20 nonnegative coordinates");
    std::vector<Face> out;
    out.reserve(std::size_t(1) << nn.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << nn.size()); ++mask) {
        Face f;
        f.mask = mask;
        for (std::size_t b = 0; b < nn.size(); ++b)
            if (mask & (std::uint32_t(1) << b)) f.active.push_back(nn[b]);
        out.push_back(std::move(f));
    }
    return out;
}

Face face_of(const ConeSpec& spec, const Vector& y, double tol) {
    if (!in_cone(spec, y, tol)) throw DimensionError("face_of: point not in cone");
    std::vector<int> nn = spec.nonneg_indices();
    Face f;
    for (std::size_t b = 0; b < nn.size(); ++b) {
        if (std::abs(y[nn[b]]) <= tol) {
            f.active.push_back(nn[b]);
            f.mask |= std::uint32_t(1) << b;
        }
    }
    return f;
}

}  // namespace gesolve
