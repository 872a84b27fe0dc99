#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "parafam/diagram.hpp"
#include "parafam/group_spec.hpp"
#include "parafam/half_power.hpp"
#include "parafam/place.hpp"

namespace parafam {

/// Default type at a place: the affine vertex {0} for split diagrams, the
/// lexicographically smallest maximal type for twisted ones.
ParahoricType default_type(const LocalIndex& d);

/// Declares places sharing the local index of `group`, in the given order.
std::vector<Place> make_places(const GroupSpec& group,
                               const std::vector<std::pair<std::string, std::uint64_t>>& sizes);

/// A coherent collection of parahorics over a finite set of declared places.
/// Places without an entry in `assignment` carry their default type;
/// `assignment` never holds an entry equal to the default.
struct CoherentCollection {
  GroupSpec group;
  std::vector<Place> places;
  std::map<std::string, ParahoricType> assignment;
  std::set<std::string> refinements;

  const Place& place(const std::string& id) const;
  ParahoricType type_at(const std::string& id) const;

  friend bool operator==(const CoherentCollection& a, const CoherentCollection& b);
};

/// Throws DomainError on unknown place ids, improper types, duplicate ids,
/// or places whose local index belongs to another group.
CoherentCollection make_collection(const GroupSpec& group, std::vector<Place> places,
                                   const std::map<std::string, ParahoricType>& overrides = {});

/// mu(a) / mu(b). Throws DomainError("incomparable collections") unless a
/// and b share the group and the place list.
HalfPowerRational relative_covolume(const CoherentCollection& a, const CoherentCollection& b);

/// [P_v : K_v] = q^(dim G - dim M) * |M(F_q)| for the congruence kernel K_v
/// of a parahoric of type t.
mpz_class refinement_index(const Place& place, const ParahoricType& t);

/// Replaces the parahorics at v1 and v2 by their congruence kernels. The
/// residue characteristics must differ.
CoherentCollection apply_torsionfree_refinement(const CoherentCollection& c,
                                                const std::string& v1, const std::string& v2);

struct FamilyOptions {
  /// Explicit (t1, t2) per family place; otherwise the first pair found.
  std::map<std::string, std::pair<ParahoricType, ParahoricType>> pairs;
  /// Pair up places lacking a single-place pair and swap types across them.
  bool fallback_swap = false;
  /// Two extra places refined identically in every member.
  std::optional<std::pair<std::string, std::string>> refine;
};

/// 2^k members, one per choice at each of the k independent slots (a family
/// place with an equal-volume pair, or a swap pair of places). Member 0 takes
/// t1 everywhere; bit s of the member index selects t2 at slot s.
std::vector<CoherentCollection> build_family(const GroupSpec& group,
                                             const std::vector<Place>& places,
                                             const std::vector<std::string>& family_places,
                                             const FamilyOptions& options = {});

struct Witness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string place;
  ParahoricType t1;
  ParahoricType t2;
};

struct FamilyCertificate {
  std::vector<CoherentCollection> members;
  /// covolume_ratios[i][j] = mu(member i) / mu(member j)
  std::vector<std::vector<HalfPowerRational>> covolume_ratios;
  std::vector<Witness> witnesses;  // one per unordered pair, (0,1), (0,2), ...
  bool torsion_free = false;
  std::vector<std::string> citations;
};

/// Checks equal covolume and finds a non-conjugacy witness for every pair of
/// members. Throws DomainError naming the offending pair otherwise.
FamilyCertificate certify_family(const std::vector<CoherentCollection>& members);

/// The fixed citation lines embedded in certificates.
std::vector<std::string> certificate_citations(bool torsion_free);

}  // namespace parafam
