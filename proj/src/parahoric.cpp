#include "parafam/parahoric.hpp"

#include <algorithm>
#include <map>

#include "parafam/error.hpp"
#include "parafam/reductive.hpp"

namespace parafam {

LocalFactor local_factor(const LocalIndex& d, const ParahoricType& t) {
  auto q = quotient_descriptor(d, t);
  return {q.dim, std::move(q.order)};
}

bool conjugate_types(const LocalIndex& d, const ParahoricType& t1, const ParahoricType& t2) {
  require_proper(d, t1);
  require_proper(d, t2);
  if (t1.size() != t2.size()) return false;
  for (const auto& g : d.realized_automorphisms())
    if (apply(g, t1) == t2) return true;
  return false;
}

ParahoricType canonical_representative(const LocalIndex& d, const ParahoricType& t) {
  require_proper(d, t);
  ParahoricType best = t;
  for (const auto& g : d.realized_automorphisms()) best = std::min(best, apply(g, t));
  return best;
}

std::vector<ParahoricType> orbit_representatives(const LocalIndex& d) {
  std::vector<ParahoricType> reps;
  for (const auto& t : proper_types(d))
    if (canonical_representative(d, t) == t) reps.push_back(t);
  return reps;
}

HalfPowerRational factor_ratio(const LocalIndex& d, const ParahoricType& t1,
                               const ParahoricType& t2, const std::string& place_id,
                               std::uint64_t q) {
  const auto f1 = local_factor(d, t1);
  const auto f2 = local_factor(d, t2);
  const mpq_class orders(evaluate_order(f2.order, q), evaluate_order(f1.order, q));
  return HalfPowerRational(orders) * HalfPowerRational::half_power(place_id, q, f1.dim - f2.dim);
}

HalfPowerRational factor_ratio(const LocalIndex& d, const ParahoricType& t1,
                               const ParahoricType& t2, const Place& place) {
  return factor_ratio(d, t1, t2, place.id, place.q);
}

std::vector<TypePair> find_equal_volume_pairs(const LocalIndex& d) {
  const auto reps = orbit_representatives(d);
  std::vector<LocalFactor> factors;
  factors.reserve(reps.size());
  for (const auto& t : reps) factors.push_back(local_factor(d, t));

  std::vector<TypePair> pairs;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (factors[i] == factors[j])
        pairs.push_back({reps[i], reps[j], factors[i].dim, factors[i].order});
  return pairs;
}

std::optional<TypePair> swap_fallback_pair(const LocalIndex& d) {
  const auto reps = orbit_representatives(d);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto fi = local_factor(d, reps[i]);
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      const auto fj = local_factor(d, reps[j]);
      if ((fi.dim - fj.dim) % 2 == 0) return TypePair{reps[i], reps[j], fi.dim, fi.order};
    }
  }
  return std::nullopt;
}

}  // namespace parafam
