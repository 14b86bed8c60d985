// Canonical JSON form of polynomials and volumes:
//   {"g":G,"n":N,"terms":[{"pi2":k,"vars":{"1":e,...},"coeff":"p/q"},...]}
// Terms appear in canonical (pi2, sorted slot/exponent) order.
#pragma once

#include <json.hpp>

#include "wpv/exactalg.hpp"

namespace wpv {

nlohmann::json terms_to_json(const GradedPoly& p);
GradedPoly terms_from_json(const nlohmann::json& terms);

nlohmann::json volume_to_json(const VolumePoly& v);
/// Throws Error on malformed input. Invariants are not checked here.
VolumePoly volume_from_json(const nlohmann::json& j);

}  // namespace wpv
