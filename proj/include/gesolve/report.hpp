#ifndef GESOLVE_REPORT_HPP
#define GESOLVE_REPORT_HPP

#include <json.hpp>
#include <string>

#include "gesolve/pfactor.hpp"
#include "gesolve/solver.hpp"
#include "gesolve/tangent.hpp"

namespace gesolve {

using Json = nlohmann::ordered_json;

Json to_json(const Vector& v);
Json to_json(const Face& f);
Json to_json(const BanachSolution& s);
Json to_json(const ImplicitSolution& s);
Json to_json(const ScalingReport& r);
Json to_json(const RegularityReport& r);
Json to_json(const DegeneracyProfile& p);
Json to_json(const InverseSolveResult& r);
Json to_json(const TangentCertificate& c);

/// Serializes with every real printed as a 17-significant-digit decimal so
/// reports round-trip doubles losslessly and byte-compare across runs.
/// Non-finite reals become null.
std::string dump_json(const Json& j, int indent = 2);

}  // namespace gesolve

#endif
