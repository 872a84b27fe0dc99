#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parafam/diagram.hpp"
#include "parafam/half_power.hpp"
#include "parafam/order_polynomial.hpp"
#include "parafam/place.hpp"

namespace parafam {

/// Relative local volume factor q^(dim / 2) / order(q). The type-independent
/// q^(t_v / 2) of the full formula is left out; it cancels in every ratio.
struct LocalFactor {
  int dim = 0;
  OrderPolynomial order;

  friend bool operator==(const LocalFactor&, const LocalFactor&) = default;
};

LocalFactor local_factor(const LocalIndex& d, const ParahoricType& t);

/// False means the two types are certainly not conjugate under the adjoint
/// group; true means some realized automorphism maps t1 onto t2.
bool conjugate_types(const LocalIndex& d, const ParahoricType& t1, const ParahoricType& t2);

/// Lexicographically smallest image of t under the realized automorphisms.
ParahoricType canonical_representative(const LocalIndex& d, const ParahoricType& t);

/// One canonical representative per orbit of proper types, in lexicographic
/// order.
std::vector<ParahoricType> orbit_representatives(const LocalIndex& d);

/// lambda(t1) / lambda(t2) at a place with residue size q:
/// q^((dim1 - dim2) / 2) * order2(q) / order1(q).
HalfPowerRational factor_ratio(const LocalIndex& d, const ParahoricType& t1,
                               const ParahoricType& t2, const std::string& place_id,
                               std::uint64_t q);
HalfPowerRational factor_ratio(const LocalIndex& d, const ParahoricType& t1,
                               const ParahoricType& t2, const Place& place);

struct TypePair {
  ParahoricType t1;
  ParahoricType t2;
  int dim = 0;
  OrderPolynomial order;  // of t1; equals that of t2 for equal-volume pairs
};

/// Unordered pairs of non-conjugate orbit representatives whose local
/// factors coincide as polynomials in q. Sorted by (t1, t2) with t1 < t2.
std::vector<TypePair> find_equal_volume_pairs(const LocalIndex& d);

/// Pair of non-conjugate types for the two-place swap construction: the
/// lexicographically first pair of orbit representatives whose dimensions
/// have the same parity (so swapped ratios stay rational).
std::optional<TypePair> swap_fallback_pair(const LocalIndex& d);

}  // namespace parafam
