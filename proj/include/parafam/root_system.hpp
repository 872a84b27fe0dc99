#pragma once

#include <vector>

namespace parafam {

/// Square integer matrix, row-major, with a(i, j) = <alpha_i^vee, alpha_j>.
using CartanMatrix = std::vector<std::vector<int>>;

/// A root written in the basis of simple roots.
using RootCoefficients = std::vector<int>;

/// Finite Cartan matrix of type `family``rank` in Bourbaki numbering
/// (simple root i is index i-1). Throws DomainError for unknown types.
CartanMatrix cartan_matrix(char family, int rank);

/// Positive roots generated by root-string closure, sorted by height then
/// lexicographically. Simple roots come first.
std::vector<RootCoefficients> positive_roots(const CartanMatrix& cartan);

/// The unique root of maximal height.
RootCoefficients highest_root(const CartanMatrix& cartan);

/// Affine extension of a finite Cartan matrix: index 0 is the affine node
/// -theta, indices 1..n are the simple roots.
CartanMatrix affine_cartan_matrix(const CartanMatrix& cartan);

}  // namespace parafam
