#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the library except for reading the decorations of a diagram.

#include <cstdint>
#include <vector>

#include "parafam/diagram.hpp"

namespace oracle {

/// Number of n x n matrices over the prime field F_p with determinant 1.
std::uint64_t count_special_linear(int n, int p);

/// Number of 3 x 3 matrices over F_4 with determinant 1 that preserve the
/// hermitian form x1 y3^2 + x2 y2^2 + x3 y1^2 (conjugation x -> x^2).
std::uint64_t count_special_unitary_3_over_f4();

/// Every vertex permutation preserving edges (with multiplicity and arrow),
/// marks, and hyperspecial flags, by running through all n! permutations.
std::vector<parafam::Permutation> all_decorated_automorphisms(const parafam::LocalIndex& d);

/// Subsets of the (n+1)-cycle split into orbits under rotation, each keyed
/// by the minimal rotation of its cyclic gap sequence, together with the
/// multiset of path lengths of the induced subgraph.
struct CycleOrbit {
  std::vector<int> gaps;
  std::vector<int> runs;  // sorted lengths of maximal runs of consecutive vertices
  int size = 0;
};
std::vector<CycleOrbit> cycle_orbits(int vertices);

}  // namespace oracle
