#include "parafam/finite_type.hpp"

#include "parafam/error.hpp"

namespace parafam {

std::string FiniteTypeLabel::name() const {
  std::string base = std::string(1, family) + std::to_string(rank);
  return form == ResidueForm::unitary ? "2" + base : base;
}

std::vector<FiniteTypeLabel> canonical_labels(char family, int rank, ResidueForm form) {
  auto invalid = [&] {
    throw DomainError("not a finite Dynkin type: " + std::string(1, family) + std::to_string(rank));
  };
  if (rank < 1) invalid();
  if (form == ResidueForm::unitary) {
    if (family != 'A') invalid();
    if (rank == 1) return {{'A', 1, ResidueForm::split}};
    return {{'A', rank, ResidueForm::unitary}};
  }
  switch (family) {
    case 'A':
      return {{'A', rank}};
    case 'B':
    case 'C':
      if (rank == 1) return {{'A', 1}};
      if (rank == 2) return {{'B', 2}};
      return {{family, rank}};
    case 'D':
      if (rank == 1) invalid();
      if (rank == 2) return {{'A', 1}, {'A', 1}};
      if (rank == 3) return {{'A', 3}};
      return {{'D', rank}};
    case 'E':
      if (rank < 6 || rank > 8) invalid();
      return {{'E', rank}};
    case 'F':
      if (rank != 4) invalid();
      return {{'F', 4}};
    case 'G':
      if (rank != 2) invalid();
      return {{'G', 2}};
    default:
      invalid();
  }
  return {};
}

int root_count(const FiniteTypeLabel& label) {
  const int r = label.rank;
  switch (label.family) {
    case 'A': return r * (r + 1);
    case 'B':
    case 'C': return 2 * r * r;
    case 'D': return 2 * r * (r - 1);
    case 'E': return r == 6 ? 72 : r == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    default: throw DomainError("not a finite Dynkin type: " + label.name());
  }
}

int dimension(const FiniteTypeLabel& label) { return label.rank + root_count(label); }

}  // namespace parafam
