#pragma once

#include <string>

#include <json.hpp>

#include "hcat/appendix.hpp"
#include "hcat/catenoid.hpp"
#include "hcat/disjointness.hpp"
#include "hcat/mesh.hpp"
#include "hcat/strips.hpp"

namespace hcat {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

Json to_json(const Tolerances& tol);
Json to_json(const ProfileCurve& profile);
Json to_json(const DisjointnessCertificate& cert);
Json to_json(const StripOffsets& offsets);
Json to_json(const StripReport& report);
Json to_json(const MeshInfo& info);
Json to_json(const AppendixCase& c);

Tolerances tolerances_from_json(const Json& j);

/// Parses a certificate document. Field values are taken as written; callers
/// that act on a certificate re-check what they rely on.
DisjointnessCertificate certificate_from_json(const Json& j);

/// Margin table with header `t,check,margin` (remark rows carry d in the check id).
std::string margins_csv(const StripReport& report);

/// Stable text form: two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace hcat
