#include "parafam/json_io.hpp"

#include <memory>
#include <sstream>

#include "parafam/error.hpp"
#include "parafam/reductive.hpp"

namespace parafam::io {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected an object holding '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field '" + std::string(key) + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw SchemaError("field '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t unsigned_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError("field '" + std::string(key) + "' must be an integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto s = v.get<std::int64_t>();
  return s < 0 ? 0 : static_cast<std::uint64_t>(s);
}

Json coefficient(const mpz_class& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SchemaError(std::string(what) + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Json to_json(const LocalIndex& d) {
  Json j;
  j["diagram"] = d.name();
  Json vertices = Json::array();
  for (int v = 0; v < d.vertex_count(); ++v)
    vertices.push_back({{"id", v}, {"mark", d.mark(v)}, {"hyperspecial", d.hyperspecial(v)}});
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : d.edges()) {
    Json arrow = e.arrow_head ? Json(*e.arrow_head) : Json(nullptr);
    edges.push_back({{"u", e.u}, {"v", e.v}, {"mult", e.multiplicity}, {"arrow", arrow}});
  }
  j["edges"] = std::move(edges);
  j["realized_aut_order"] = d.realized_automorphisms().size();
  j["residual_source"] = d.residual_source() == ResidualSource::computed ? "computed" : "table";
  return j;
}

std::string to_dot(const LocalIndex& d) {
  std::ostringstream out;
  out << "graph \"" << d.name() << "\" {\n";
  for (int v = 0; v < d.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << v << " (" << d.mark(v) << ")\""
        << (d.hyperspecial(v) ? ", shape=doublecircle" : "") << "];\n";
  for (const auto& e : d.edges()) {
    out << "  " << e.u << " -- " << e.v << " [label=\"" << e.multiplicity << "\"";
    if (e.arrow_head) out << (*e.arrow_head == e.v ? ", dir=forward" : ", dir=back");
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const OrderPolynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coefficients()) j.push_back(coefficient(c));
  return j;
}

Json to_json(const ParahoricType& t) { return Json(t.vertices()); }

Json to_json(const HalfPowerRational& h) {
  Json exps = Json::object();
  for (const auto& [place, root] : h.half_exponents()) exps[place] = root.exponent;
  return {{"num", h.rational().get_num().get_str()},
          {"den", h.rational().get_den().get_str()},
          {"half_exponents", std::move(exps)}};
}

Json pairs_to_json(const LocalIndex& d, const std::vector<TypePair>& pairs,
                   std::optional<std::uint64_t> q) {
  Json j;
  j["diagram"] = d.name();
  if (q) j["q"] = *q;
  Json list = Json::array();
  for (const auto& p : pairs) {
    Json entry{{"t1", to_json(p.t1)},
               {"t2", to_json(p.t2)},
               {"dim", p.dim},
               {"order_coeffs", to_json(p.order)}};
    if (q) entry["order_at_q"] = evaluate_order(p.order, *q).get_str();
    list.push_back(std::move(entry));
  }
  j["pairs"] = std::move(list);
  return j;
}

Json to_json(const FamilyCertificate& cert) {
  const auto& first = cert.members.front();
  Json j;
  j["group"] = first.group.name();
  Json places = Json::array();
  for (const auto& p : first.places)
    places.push_back({{"id", p.id}, {"q", p.q}, {"p", p.p}, {"index", p.diagram().name()}});
  j["places"] = std::move(places);

  Json members = Json::array();
  for (const auto& m : cert.members) {
    Json assignment = Json::object();
    for (const auto& p : m.places) assignment[p.id] = to_json(m.type_at(p.id));
    members.push_back({{"assignment", std::move(assignment)},
                       {"refinements", Json(std::vector<std::string>(m.refinements.begin(),
                                                                     m.refinements.end()))}});
  }
  j["members"] = std::move(members);

  Json ratios = Json::array();
  const auto n = cert.members.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Json r{{"pair", {a, b}}};
      r.update(to_json(cert.covolume_ratios[a][b]));
      ratios.push_back(std::move(r));
    }
  j["ratios"] = std::move(ratios);

  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses)
    witnesses.push_back({{"pair", {w.first, w.second}},
                         {"place", w.place},
                         {"t1", to_json(w.t1)},
                         {"t2", to_json(w.t2)}});
  j["witnesses"] = std::move(witnesses);
  j["torsion_free"] = cert.torsion_free;
  j["citations"] = cert.citations;
  return j;
}

ParahoricType parse_type(const Json& j) {
  if (!j.is_array()) throw SchemaError("a parahoric type must be an array of vertex ids");
  std::vector<int> vs;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw SchemaError("vertex ids must be integers");
    const auto v = e.get<std::int64_t>();
    if (v < 0 || v > 30) throw DomainError("vertex id " + std::to_string(v) + " out of range");
    vs.push_back(static_cast<int>(v));
  }
  return ParahoricType(std::move(vs));
}

PlaceSet parse_place_set(const Json& j) {
  PlaceSet ps{GroupSpec::parse(string_field(j, "group")), {}};
  auto index = std::make_shared<const LocalIndex>(build_local_index(ps.group));
  const auto& places = field(j, "places");
  if (!places.is_array()) throw SchemaError("'places' must be an array");
  for (const auto& p : places) {
    auto place = Place::make(string_field(p, "id"), unsigned_field(p, "q"), index);
    if (p.contains("p") && unsigned_field(p, "p") != place.p)
      throw DomainError("place " + place.id + ": residue characteristic does not divide q");
    ps.places.push_back(std::move(place));
  }
  return ps;
}

CoherentCollection parse_collection(const PlaceSet& ps, const Json& j) {
  std::map<std::string, ParahoricType> overrides;
  if (j.contains("assignment")) {
    const auto& a = field(j, "assignment");
    if (!a.is_object()) throw SchemaError("'assignment' must be an object");
    for (const auto& [id, t] : a.items()) overrides[id] = parse_type(t);
  }
  auto c = make_collection(ps.group, ps.places, overrides);
  if (j.contains("refinements"))
    for (const auto& id : string_list(field(j, "refinements"), "'refinements'")) {
      c.place(id);
      c.refinements.insert(id);
    }
  return c;
}

RatioRequest parse_ratio_request(const Json& j) {
  const auto ps = parse_place_set(j);
  return {parse_collection(ps, field(j, "a")), parse_collection(ps, field(j, "b"))};
}

FamilyRequest parse_family_request(const Json& j) {
  FamilyRequest req{parse_place_set(j), {}, {}};
  req.family_places = string_list(field(j, "family_places"), "'family_places'");
  if (j.contains("pairs")) {
    const auto& pairs = field(j, "pairs");
    if (!pairs.is_object()) throw SchemaError("'pairs' must be an object");
    for (const auto& [id, p] : pairs.items())
      req.options.pairs[id] = {parse_type(field(p, "t1")), parse_type(field(p, "t2"))};
  }
  if (j.contains("fallback_swap")) {
    const auto& f = field(j, "fallback_swap");
    if (!f.is_boolean()) throw SchemaError("'fallback_swap' must be a boolean");
    req.options.fallback_swap = f.get<bool>();
  }
  if (j.contains("refine")) {
    auto ids = string_list(field(j, "refine"), "'refine'");
    if (ids.size() != 2) throw SchemaError("'refine' must name exactly two places");
    req.options.refine = std::pair{ids[0], ids[1]};
  }
  return req;
}

std::vector<CoherentCollection> parse_family_members(const Json& j) {
  const auto ps = parse_place_set(j);
  const auto& members = field(j, "members");
  if (!members.is_array()) throw SchemaError("'members' must be an array");
  std::vector<CoherentCollection> out;
  for (const auto& m : members) out.push_back(parse_collection(ps, m));
  return out;
}

}  // namespace parafam::io
