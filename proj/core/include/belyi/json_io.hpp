#pragma once

#include <json.hpp>

#include "belyi/belyi_maps.hpp"
#include "belyi/elliptic.hpp"
#include "belyi/pell.hpp"

namespace belyi {

using Json = nlohmann::ordered_json;

// Exact scalars serialize as strings ("3", "-7/2"); quadratic-field values
// as {"a": str, "b": str, "d": int}.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json certificate_to_json(const BelyiCertificate& c);

// Versioned map record: schema, form, exponents, field tag, parameters,
// companion polynomial, certificate.
Json map_to_json(const BelyiMap& map, const BelyiCertificate& cert);
BelyiMap map_from_json(const Json& j);  // throws ParseError

Json point_to_json(const PointQ& P);
PointQ point_from_json(const Json& j);

Json pell_candidate_to_json(const PellCandidate& c);

}  // namespace belyi
