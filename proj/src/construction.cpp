#include "parafam/construction.hpp"

#include <algorithm>
#include <memory>

#include "parafam/error.hpp"
#include "parafam/parahoric.hpp"
#include "parafam/reductive.hpp"

namespace parafam {
namespace {

bool same_places(const std::vector<Place>& a, const std::vector<Place>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Place& x, const Place& y) { return x.id == y.id && x.q == y.q; });
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "members " + std::to_string(i) + " and " + std::to_string(j);
}

bool torsion_free_refinement(const CoherentCollection& c) {
  std::set<std::uint64_t> characteristics;
  for (const auto& id : c.refinements) characteristics.insert(c.place(id).p);
  return characteristics.size() >= 2;
}

}  // namespace

ParahoricType default_type(const LocalIndex& d) {
  if (d.group().form == Form::split) return ParahoricType{0};
  std::vector<int> all(d.vertex_count() - 1);
  for (int i = 0; i + 1 < d.vertex_count(); ++i) all[i] = i;
  return ParahoricType(all);  // smallest maximal type: drop the last vertex
}

std::vector<Place> make_places(const GroupSpec& group,
                               const std::vector<std::pair<std::string, std::uint64_t>>& sizes) {
  auto index = std::make_shared<const LocalIndex>(build_local_index(group));
  std::vector<Place> places;
  for (const auto& [id, q] : sizes) places.push_back(Place::make(id, q, index));
  return places;
}

const Place& CoherentCollection::place(const std::string& id) const {
  for (const auto& p : places)
    if (p.id == id) return p;
  throw DomainError("unknown place id " + id);
}

ParahoricType CoherentCollection::type_at(const std::string& id) const {
  const auto& p = place(id);
  auto it = assignment.find(id);
  return it != assignment.end() ? it->second : default_type(p.diagram());
}

bool operator==(const CoherentCollection& a, const CoherentCollection& b) {
  return a.group == b.group && same_places(a.places, b.places) && a.assignment == b.assignment &&
         a.refinements == b.refinements;
}

CoherentCollection make_collection(const GroupSpec& group, std::vector<Place> places,
                                   const std::map<std::string, ParahoricType>& overrides) {
  group.validate();
  std::set<std::string> ids;
  for (const auto& p : places) {
    if (!ids.insert(p.id).second) throw DomainError("duplicate place id " + p.id);
    if (!p.local_index || !(p.diagram().group() == group))
      throw DomainError("place " + p.id + " does not carry the local index of " + group.name());
    if (!prime_power_base(p.q))
      throw DomainError("invalid residue size " + std::to_string(p.q) + " at place " + p.id);
  }
  CoherentCollection c{group, std::move(places), {}, {}};
  for (const auto& [id, t] : overrides) {
    const auto& p = c.place(id);
    require_proper(p.diagram(), t);
    if (t != default_type(p.diagram())) c.assignment[id] = t;
  }
  return c;
}

HalfPowerRational relative_covolume(const CoherentCollection& a, const CoherentCollection& b) {
  if (!(a.group == b.group) || !same_places(a.places, b.places))
    throw DomainError("incomparable collections");
  HalfPowerRational ratio;
  for (const auto& p : a.places) {
    const auto ta = a.type_at(p.id);
    const auto tb = b.type_at(p.id);
    if (ta != tb) ratio *= factor_ratio(p.diagram(), ta, tb, p);
    // A congruence kernel of index N scales the covolume by N.
    mpq_class index = 1;
    if (a.refinements.contains(p.id)) index *= refinement_index(p, ta);
    if (b.refinements.contains(p.id)) index /= refinement_index(p, tb);
    ratio *= HalfPowerRational(index);
  }
  return ratio;
}

mpz_class refinement_index(const Place& place, const ParahoricType& t) {
  const auto m = quotient_descriptor(place.diagram(), t);
  const mpz_class q(std::to_string(place.q));
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), q.get_mpz_t(),
             static_cast<unsigned long>(group_dimension(place.diagram().group()) - m.dim));
  return power * evaluate_order(m.order, place.q);
}

CoherentCollection apply_torsionfree_refinement(const CoherentCollection& c,
                                                const std::string& v1, const std::string& v2) {
  const auto& p1 = c.place(v1);
  const auto& p2 = c.place(v2);
  if (v1 == v2) throw DomainError("refinement needs two distinct places");
  if (c.refinements.contains(v1) || c.refinements.contains(v2))
    throw DomainError("place already refined");
  if (p1.p == p2.p)
    throw DomainError("equal residue characteristic " + std::to_string(p1.p) + " at places " +
                      v1 + " and " + v2);
  CoherentCollection refined = c;
  refined.refinements.insert(v1);
  refined.refinements.insert(v2);
  return refined;
}

std::vector<CoherentCollection> build_family(const GroupSpec& group,
                                             const std::vector<Place>& places,
                                             const std::vector<std::string>& family_places,
                                             const FamilyOptions& options) {
  const auto base = make_collection(group, places);
  std::set<std::string> seen;
  for (const auto& id : family_places) {
    base.place(id);
    if (!seen.insert(id).second) throw DomainError("place " + id + " listed twice");
  }
  if (options.refine) {
    for (const auto& id : {options.refine->first, options.refine->second})
      if (seen.contains(id))
        throw DomainError("refinement place " + id + " is also a family place");
  }

  // A slot is one binary choice: a list of (place, type if bit clear, type if bit set).
  struct Choice {
    std::string place;
    ParahoricType off;
    ParahoricType on;
  };
  std::vector<std::vector<Choice>> slots;
  std::vector<std::string> swap_queue;

  for (const auto& id : family_places) {
    const auto& d = base.place(id).diagram();
    if (auto it = options.pairs.find(id); it != options.pairs.end()) {
      const auto& [t1, t2] = it->second;
      if (conjugate_types(d, t1, t2))
        throw DomainError("types " + t1.to_string() + " and " + t2.to_string() +
                          " at place " + id + " may be conjugate");
      if (local_factor(d, t1) == local_factor(d, t2)) {
        slots.push_back({{id, t1, t2}});
        continue;
      }
      if (!options.fallback_swap)
        throw DomainError("types " + t1.to_string() + " and " + t2.to_string() + " at place " +
                          id + " have different local factors");
      swap_queue.push_back(id);
      continue;
    }
    auto found = find_equal_volume_pairs(d);
    if (!found.empty()) {
      slots.push_back({{id, found.front().t1, found.front().t2}});
    } else if (options.fallback_swap) {
      swap_queue.push_back(id);
    } else {
      throw DomainError("place " + id + " has no equal-volume non-conjugate pair in " + d.name() +
                        "; enable the two-place swap");
    }
  }

  for (std::size_t i = 0; i + 1 < swap_queue.size(); i += 2) {
    const auto& v = base.place(swap_queue[i]);
    const auto& w = base.place(swap_queue[i + 1]);
    if (v.q != w.q)
      throw DomainError("swap places " + v.id + " and " + w.id + " have different residue sizes");
    std::pair<ParahoricType, ParahoricType> types;
    if (auto it = options.pairs.find(v.id); it != options.pairs.end()) {
      types = it->second;
    } else {
      auto pair = swap_fallback_pair(v.diagram());
      if (!pair) throw DomainError("no non-conjugate types at place " + v.id);
      types = {pair->t1, pair->t2};
    }
    slots.push_back({{v.id, types.first, types.second}, {w.id, types.second, types.first}});
  }

  if (slots.size() >= 20) throw DomainError("family too large");
  std::vector<CoherentCollection> members;
  for (std::size_t bits = 0; bits < (std::size_t{1} << slots.size()); ++bits) {
    std::map<std::string, ParahoricType> overrides;
    for (std::size_t s = 0; s < slots.size(); ++s)
      for (const auto& choice : slots[s])
        overrides[choice.place] = (bits >> s) & 1 ? choice.on : choice.off;
    auto member = make_collection(group, places, overrides);
    if (options.refine)
      member = apply_torsionfree_refinement(member, options.refine->first, options.refine->second);
    members.push_back(std::move(member));
  }
  return members;
}

std::vector<std::string> certificate_citations(bool torsion_free) {
  std::vector<std::string> lines{
      "index lemma: for nested coherent collections P' <= P, [Lambda_P : Lambda_P'] = "
      "prod_v [P_v : P'_v] (strong approximation)",
      "non-conjugacy lemma: if P_w and P'_w are not conjugate under the adjoint group at some "
      "place w and contain the center, the images of Lambda_P and Lambda_P' are not conjugate",
      "Prasad volume formula: mu(Lambda_P \\ G_S) = c_G prod_v q_v^((t_v + dim M_v)/2) / "
      "|M_v(f_v)|, with t_v depending only on the local structure",
      "strong rigidity: non-conjugate lattices, taken modulo the finite group Aut/Inn, are "
      "non-isomorphic",
  };
  if (torsion_free)
    lines.push_back(
        "torsion-freeness: congruence kernels at places of distinct residue characteristics are "
        "pro-p1 and pro-p2 groups, so their intersection is torsion-free");
  return lines;
}

FamilyCertificate certify_family(const std::vector<CoherentCollection>& members) {
  if (members.size() < 2) throw DomainError("a family needs at least two members");
  const std::size_t n = members.size();
  FamilyCertificate cert;
  cert.members = members;
  cert.covolume_ratios.assign(n, std::vector<HalfPowerRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = members[i];
      const auto& b = members[j];
      auto ratio = relative_covolume(a, b);
      if (!ratio.is_one())
        throw DomainError("not equal covolume: " + pair_name(i, j) + " have ratio " +
                          ratio.to_string());
      cert.covolume_ratios[i][j] = ratio;
      cert.covolume_ratios[j][i] = ratio.inverse();

      std::optional<Witness> witness;
      for (const auto& p : a.places) {
        if (a.refinements.contains(p.id) || b.refinements.contains(p.id)) continue;
        const auto ta = a.type_at(p.id);
        const auto tb = b.type_at(p.id);
        if (!conjugate_types(p.diagram(), ta, tb)) {
          witness = Witness{i, j, p.id, ta, tb};
          break;
        }
      }
      if (!witness) throw DomainError("no witness: " + pair_name(i, j));
      cert.witnesses.push_back(*witness);
    }
  cert.torsion_free = std::all_of(members.begin(), members.end(), torsion_free_refinement);
  cert.citations = certificate_citations(cert.torsion_free);
  return cert;
}

}  // namespace parafam
