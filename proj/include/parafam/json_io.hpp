#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parafam/construction.hpp"
#include "parafam/diagram.hpp"
#include "parafam/half_power.hpp"
#include "parafam/order_polynomial.hpp"
#include "parafam/parahoric.hpp"

namespace parafam::io {

using Json = nlohmann::ordered_json;

/// {vertices:[{id, mark, hyperspecial}], edges:[{u, v, mult, arrow}],
///  realized_aut_order}; arrow is the short end or null.
Json to_json(const LocalIndex& d);
std::string to_dot(const LocalIndex& d);

/// Coefficient array, lowest degree first.
Json to_json(const OrderPolynomial& p);
Json to_json(const ParahoricType& t);
/// {num, den, half_exponents:{place: e}} with num and den as decimal strings.
Json to_json(const HalfPowerRational& h);

/// {diagram, pairs:[{t1, t2, dim, order_coeffs}]}; with q, each pair also
/// carries order_at_q.
Json pairs_to_json(const LocalIndex& d, const std::vector<TypePair>& pairs,
                   std::optional<std::uint64_t> q = std::nullopt);

/// {group, places, members, ratios, witnesses, torsion_free, citations}.
Json to_json(const FamilyCertificate& cert);

ParahoricType parse_type(const Json& j);

/// Reads {group, places:[{id, q, p?}]}.
struct PlaceSet {
  GroupSpec group;
  std::vector<Place> places;
};
PlaceSet parse_place_set(const Json& j);

/// Reads {assignment:{place: [...]}, refinements:[...]}.
CoherentCollection parse_collection(const PlaceSet& ps, const Json& j);

struct RatioRequest {
  CoherentCollection a;
  CoherentCollection b;
};
RatioRequest parse_ratio_request(const Json& j);

struct FamilyRequest {
  PlaceSet place_set;
  std::vector<std::string> family_places;
  FamilyOptions options;
};
FamilyRequest parse_family_request(const Json& j);

/// Reconstructs the members recorded in a family document.
std::vector<CoherentCollection> parse_family_members(const Json& j);

}  // namespace parafam::io
