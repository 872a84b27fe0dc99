#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parafam/finite_type.hpp"
#include "parafam/group_spec.hpp"

namespace parafam {

/// A permutation of diagram vertices: vertex v is sent to perm[v].
using Permutation = std::vector<int>;

/// An edge of a local Dynkin diagram. `multiplicity` is the product of the
/// two off-diagonal Cartan entries (4 for the rank-one affine edges). When
/// the two ends have different root lengths, `arrow_head` is the end
/// carrying the shorter root.
struct Edge {
  int u = 0;
  int v = 0;
  int multiplicity = 1;
  std::optional<int> arrow_head;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Type of a parahoric subgroup: a set of diagram vertices, kept sorted.
/// Ordering is lexicographic on the sorted vertex list.
class ParahoricType {
 public:
  ParahoricType() = default;
  ParahoricType(std::initializer_list<int> vertices);
  explicit ParahoricType(std::vector<int> vertices);

  static ParahoricType from_mask(unsigned mask);

  const std::vector<int>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(int v) const;
  unsigned mask() const;

  std::string to_string() const;

  friend auto operator<=>(const ParahoricType&, const ParahoricType&) = default;

 private:
  std::vector<int> vertices_;
};

ParahoricType apply(const Permutation& g, const ParahoricType& t);

enum class ResidualSource { computed, table };

/// Residual data for one parahoric type: semisimple components of the
/// reductive quotient plus the rank of its (split) central torus.
struct ResidualEntry {
  std::vector<FiniteTypeLabel> components;
  int torus_rank = 0;
};

/// A decorated local Dynkin diagram together with the group of vertex
/// permutations that the adjoint group realizes on it.
class LocalIndex {
 public:
  LocalIndex(GroupSpec group, std::vector<int> marks, std::vector<bool> hyperspecial,
             std::vector<Edge> edges, int relative_rank,
             std::map<ParahoricType, ResidualEntry> residual_table = {});

  const GroupSpec& group() const { return group_; }
  std::string name() const;
  int vertex_count() const { return static_cast<int>(marks_.size()); }
  int relative_rank() const { return relative_rank_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int mark(int v) const { return marks_.at(v); }
  bool hyperspecial(int v) const { return hyperspecial_.at(v); }
  int multiplicity(int u, int v) const { return multiplicity_[u][v]; }
  /// Short end of the (u, v) edge, or -1 when undirected or absent.
  int arrow_head(int u, int v) const { return arrow_[u][v]; }

  const std::vector<Permutation>& realized_automorphisms() const { return realized_; }
  ResidualSource residual_source() const { return source_; }
  const std::map<ParahoricType, ResidualEntry>& residual_table() const { return table_; }

  /// True iff g preserves edges with their decorations, marks, and
  /// hyperspecial flags.
  bool preserves_decorations(const Permutation& g) const;

 private:
  GroupSpec group_;
  std::vector<int> marks_;
  std::vector<bool> hyperspecial_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> multiplicity_;
  std::vector<std::vector<int>> arrow_;
  int relative_rank_;
  ResidualSource source_;
  std::map<ParahoricType, ResidualEntry> table_;
  std::vector<Permutation> realized_;
};

/// Builds the local Dynkin diagram of a split group from its root system or
/// reads one of the curated twisted indices. Throws DomainError
/// ("unsupported type") for invalid specs.
LocalIndex build_local_index(const GroupSpec& spec);

/// For split A_n the rotation group; otherwise every decoration-preserving
/// vertex permutation (a superset of what is actually realized).
const std::vector<Permutation>& realized_automorphisms(const LocalIndex& d);

/// All decoration-preserving permutations, found by backtracking. Sorted.
std::vector<Permutation> decorated_automorphisms(const LocalIndex& d);

/// Throws DomainError("improper type") unless t is a proper subset of the
/// vertices of d.
void require_proper(const LocalIndex& d, const ParahoricType& t);

/// Connected components of the subgraph induced on t, as sorted vertex lists
/// ordered by smallest vertex.
std::vector<std::vector<int>> induced_components(const LocalIndex& d, const ParahoricType& t);

/// Finite Dynkin types of the components of the subgraph induced on t,
/// canonicalized and sorted.
std::vector<FiniteTypeLabel> induced_subdiagram(const LocalIndex& d, const ParahoricType& t);

/// Every proper subset of the vertices of d, in lexicographic order.
std::vector<ParahoricType> proper_types(const LocalIndex& d);

}  // namespace parafam
