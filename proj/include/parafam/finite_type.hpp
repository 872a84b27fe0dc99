#pragma once

#include <compare>
#include <string>
#include <vector>

namespace parafam {

enum class ResidueForm { split, unitary };

/// Type of a connected finite reductive group over a residue field, e.g. B3
/// or the quasi-split unitary 2A2. Build through canonical_labels() so that
/// low-rank coincidences are folded.
struct FiniteTypeLabel {
  char family = 'A';
  int rank = 1;
  ResidueForm form = ResidueForm::split;

  std::string name() const;

  friend auto operator<=>(const FiniteTypeLabel&, const FiniteTypeLabel&) = default;
};

/// Canonicalizes B1, C1 -> A1, C2 -> B2, D2 -> A1 + A1, D3 -> A3 and the
/// unitary 2A1 -> A1. Throws DomainError for labels outside the finite
/// classification.
std::vector<FiniteTypeLabel> canonical_labels(char family, int rank,
                                              ResidueForm form = ResidueForm::split);

/// Number of roots of the (absolute) root system of the label.
int root_count(const FiniteTypeLabel& label);

/// rank + number of roots.
int dimension(const FiniteTypeLabel& label);

}  // namespace parafam
