#include "parafam/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "parafam/error.hpp"
#include "parafam/root_system.hpp"

namespace parafam {

ParahoricType::ParahoricType(std::initializer_list<int> vertices)
    : ParahoricType(std::vector<int>(vertices)) {}

ParahoricType::ParahoricType(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (!vertices_.empty() && vertices_.front() < 0) throw DomainError("negative vertex id");
}

ParahoricType ParahoricType::from_mask(unsigned mask) {
  std::vector<int> vs;
  for (int v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) vs.push_back(v);
  return ParahoricType(std::move(vs));
}

bool ParahoricType::contains(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

unsigned ParahoricType::mask() const {
  unsigned m = 0;
  for (int v : vertices_) m |= 1u << v;
  return m;
}

std::string ParahoricType::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vertices_.size(); ++i) out << (i ? "," : "") << vertices_[i];
  out << '}';
  return out.str();
}

ParahoricType apply(const Permutation& g, const ParahoricType& t) {
  std::vector<int> image;
  image.reserve(t.size());
  for (int v : t.vertices()) image.push_back(g.at(v));
  return ParahoricType(std::move(image));
}

namespace {

std::vector<Edge> edges_from_cartan(const CartanMatrix& a) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a[i][j] == 0) continue;
      Edge e{i, j, a[i][j] * a[j][i], std::nullopt};
      if (std::abs(a[i][j]) > std::abs(a[j][i])) e.arrow_head = i;
      if (std::abs(a[j][i]) > std::abs(a[i][j])) e.arrow_head = j;
      edges.push_back(e);
    }
  return edges;
}

LocalIndex build_split(const GroupSpec& spec) {
  const auto finite = cartan_matrix(spec.family, spec.rank);
  const auto theta = highest_root(finite);
  std::vector<int> marks{1};
  marks.insert(marks.end(), theta.begin(), theta.end());
  std::vector<bool> hyperspecial;
  for (int m : marks) hyperspecial.push_back(m == 1);
  return LocalIndex(spec, std::move(marks), std::move(hyperspecial),
                    edges_from_cartan(affine_cartan_matrix(finite)), spec.rank);
}

// Ramified quasi-split indices. Edges come from the relative affine Cartan
// matrices; marks are the primitive null vectors of those matrices. Residual
// data: the two vertices of C-BC1 have reductive quotients SO3 and SL2; the
// vertices of C-B2 have quotients SO5, SO3 x SO3, SO5 (viewing the group as
// a ramified quasi-split Spin6). No vertex is hyperspecial.
LocalIndex build_twisted(const GroupSpec& spec) {
  const FiniteTypeLabel a1{'A', 1}, b2{'B', 2};
  if (*spec.twisted_index == TwistedIndex::c_bc1) {
    CartanMatrix a{{2, -4}, {-1, 2}};
    std::map<ParahoricType, ResidualEntry> table{
        {ParahoricType{}, {{}, 1}},
        {ParahoricType{0}, {{a1}, 0}},
        {ParahoricType{1}, {{a1}, 0}},
    };
    return LocalIndex(spec, {2, 1}, {false, false}, edges_from_cartan(a), 1, std::move(table));
  }
  CartanMatrix a{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}};
  std::map<ParahoricType, ResidualEntry> table{
      {ParahoricType{}, {{}, 2}},
      {ParahoricType{0}, {{a1}, 1}},
      {ParahoricType{1}, {{a1}, 1}},
      {ParahoricType{2}, {{a1}, 1}},
      {ParahoricType{0, 1}, {{b2}, 0}},
      {ParahoricType{0, 2}, {{a1, a1}, 0}},
      {ParahoricType{1, 2}, {{b2}, 0}},
  };
  return LocalIndex(spec, {1, 2, 1}, {false, false, false}, edges_from_cartan(a), 2,
                    std::move(table));
}

std::vector<Permutation> rotations(int n) {
  std::vector<Permutation> group;
  for (int k = 0; k < n; ++k) {
    Permutation g(n);
    for (int i = 0; i < n; ++i) g[i] = (i + k) % n;
    group.push_back(std::move(g));
  }
  return group;
}

// Backtracking search over images of vertices 0, 1, ... in order.
std::vector<Permutation> search_automorphisms(const LocalIndex& d) {
  const int n = d.vertex_count();
  std::vector<int> degree(n, 0);
  for (const auto& e : d.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<Permutation> found;
  Permutation g(n, -1);
  std::vector<bool> used(n, false);

  auto compatible = [&](int v, int w) {
    if (d.mark(v) != d.mark(w) || d.hyperspecial(v) != d.hyperspecial(w) ||
        degree[v] != degree[w])
      return false;
    for (int u = 0; u < v; ++u) {
      if (d.multiplicity(u, v) != d.multiplicity(g[u], w)) return false;
      const int head = d.arrow_head(u, v);
      const int image_head = d.arrow_head(g[u], w);
      if (head == -1 ? image_head != -1 : image_head != (head == u ? g[u] : w)) return false;
    }
    return true;
  };

  std::function<void(int)> extend = [&](int v) {
    if (v == n) {
      found.push_back(g);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || !compatible(v, w)) continue;
      g[v] = w;
      used[w] = true;
      extend(v + 1);
      used[w] = false;
    }
    g[v] = -1;
  };
  extend(0);
  std::sort(found.begin(), found.end());
  return found;
}

// Classifies one connected induced subgraph as a finite Dynkin type.
std::vector<FiniteTypeLabel> classify(const LocalIndex& d, const std::vector<int>& comp) {
  const int r = static_cast<int>(comp.size());
  if (r == 1) return canonical_labels('A', 1);

  std::vector<Edge> inner;
  std::map<int, int> degree;
  for (const auto& e : d.edges()) {
    if (std::find(comp.begin(), comp.end(), e.u) == comp.end() ||
        std::find(comp.begin(), comp.end(), e.v) == comp.end())
      continue;
    inner.push_back(e);
    ++degree[e.u];
    ++degree[e.v];
  }
  auto not_finite = [&]() -> std::vector<FiniteTypeLabel> {
    std::ostringstream out;
    out << "induced subdiagram on " << ParahoricType(comp).to_string()
        << " is not of finite type";
    throw DomainError(out.str());
  };
  if (static_cast<int>(inner.size()) != r - 1) return not_finite();

  int max_degree = 0;
  for (const auto& [v, deg] : degree) max_degree = std::max(max_degree, deg);
  std::vector<const Edge*> multiple;
  for (const auto& e : inner) {
    if (e.multiplicity >= 4) return not_finite();
    if (e.multiplicity > 1) multiple.push_back(&e);
  }

  if (!multiple.empty()) {
    if (multiple.size() > 1 || max_degree > 2) return not_finite();
    const Edge& e = *multiple.front();
    if (e.multiplicity == 3) return r == 2 ? canonical_labels('G', 2) : not_finite();
    if (r == 2) return canonical_labels('B', 2);
    const bool u_end = degree[e.u] == 1, v_end = degree[e.v] == 1;
    if (u_end || v_end) {
      const int end = u_end ? e.u : e.v;
      return canonical_labels(e.arrow_head == end ? 'B' : 'C', r);
    }
    return r == 4 ? canonical_labels('F', 4) : not_finite();
  }

  if (max_degree <= 2) return canonical_labels('A', r);
  int center = -1;
  for (const auto& [v, deg] : degree) {
    if (deg > 3) return not_finite();
    if (deg == 3) {
      if (center != -1) return not_finite();
      center = v;
    }
  }
  std::vector<int> arms;
  for (const auto& start : inner) {
    if (start.u != center && start.v != center) continue;
    int prev = center, cur = start.u == center ? start.v : start.u, length = 1;
    for (bool moved = true; moved;) {
      moved = false;
      for (const auto& e : inner) {
        int next = e.u == cur ? e.v : e.v == cur ? e.u : -1;
        if (next == -1 || next == prev) continue;
        prev = cur;
        cur = next;
        ++length;
        moved = true;
        break;
      }
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return canonical_labels('D', arms[2] + 3);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return canonical_labels('E', arms[2] + 4);
  return not_finite();
}

}  // namespace

LocalIndex::LocalIndex(GroupSpec group, std::vector<int> marks, std::vector<bool> hyperspecial,
                       std::vector<Edge> edges, int relative_rank,
                       std::map<ParahoricType, ResidualEntry> residual_table)
    : group_(std::move(group)),
      marks_(std::move(marks)),
      hyperspecial_(std::move(hyperspecial)),
      edges_(std::move(edges)),
      relative_rank_(relative_rank),
      source_(residual_table.empty() ? ResidualSource::computed : ResidualSource::table),
      table_(std::move(residual_table)) {
  const int n = static_cast<int>(marks_.size());
  if (n == 0 || n > 31 || static_cast<int>(hyperspecial_.size()) != n)
    throw DomainError("malformed local index");
  multiplicity_.assign(n, std::vector<int>(n, 0));
  arrow_.assign(n, std::vector<int>(n, -1));
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v || e.multiplicity < 1 ||
        e.multiplicity > 4 || (e.arrow_head && *e.arrow_head != e.u && *e.arrow_head != e.v))
      throw DomainError("malformed edge in local index");
    multiplicity_[e.u][e.v] = multiplicity_[e.v][e.u] = e.multiplicity;
    arrow_[e.u][e.v] = arrow_[e.v][e.u] = e.arrow_head.value_or(-1);
  }
  for (int m : marks_)
    if (m < 1) throw DomainError("marks must be positive");

  std::vector<bool> reached(n, false);
  std::vector<int> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (multiplicity_[u][v] && !reached[v]) {
        reached[v] = true;
        stack.push_back(v);
      }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw DomainError("local index is not connected");

  if (group_.form == Form::split && group_.family == 'A') {
    realized_ = rotations(n);
    for (const auto& g : realized_)
      if (!preserves_decorations(g)) throw DomainError("rotation does not preserve the cycle");
  } else {
    realized_ = search_automorphisms(*this);
  }
}

std::string LocalIndex::name() const { return group_.name(); }

bool LocalIndex::preserves_decorations(const Permutation& g) const {
  const int n = vertex_count();
  if (static_cast<int>(g.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : g) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int v = 0; v < n; ++v)
    if (marks_[v] != marks_[g[v]] || hyperspecial_[v] != hyperspecial_[g[v]]) return false;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (multiplicity_[u][v] != multiplicity_[g[u]][g[v]]) return false;
      const int head = arrow_[u][v];
      const int image = arrow_[g[u]][g[v]];
      if (head == -1 ? image != -1 : image != g[head]) return false;
    }
  return true;
}

LocalIndex build_local_index(const GroupSpec& spec) {
  spec.validate();
  return spec.form == Form::split ? build_split(spec) : build_twisted(spec);
}

const std::vector<Permutation>& realized_automorphisms(const LocalIndex& d) {
  return d.realized_automorphisms();
}

std::vector<Permutation> decorated_automorphisms(const LocalIndex& d) {
  return search_automorphisms(d);
}

void require_proper(const LocalIndex& d, const ParahoricType& t) {
  const int n = d.vertex_count();
  if (static_cast<int>(t.size()) >= n || (!t.empty() && t.vertices().back() >= n))
    throw DomainError("improper type " + t.to_string() + " for " + d.name());
}

std::vector<std::vector<int>> induced_components(const LocalIndex& d, const ParahoricType& t) {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(d.vertex_count(), false);
  for (int start : t.vertices()) {
    if (seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : t.vertices())
        if (!seen[v] && d.multiplicity(u, v)) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<FiniteTypeLabel> induced_subdiagram(const LocalIndex& d, const ParahoricType& t) {
  require_proper(d, t);
  std::vector<FiniteTypeLabel> labels;
  for (const auto& comp : induced_components(d, t)) {
    auto part = classify(d, comp);
    labels.insert(labels.end(), part.begin(), part.end());
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<ParahoricType> proper_types(const LocalIndex& d) {
  const unsigned full = (1u << d.vertex_count()) - 1;
  std::vector<ParahoricType> types;
  for (unsigned m = 0; m < full; ++m) types.push_back(ParahoricType::from_mask(m));
  std::sort(types.begin(), types.end());
  return types;
}

}  // namespace parafam
