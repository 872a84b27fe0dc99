#include "parafam/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include <gmpxx.h>

#include "parafam/error.hpp"

namespace parafam {
namespace {

void link(CartanMatrix& a, int i, int j, int toward_i = 1, int toward_j = 1) {
  a[i][j] = -toward_i;
  a[j][i] = -toward_j;
}

int height(const RootCoefficients& root) {
  return std::accumulate(root.begin(), root.end(), 0);
}

// Squared lengths of the simple roots up to a common scale, from
// a(i, j) * |alpha_i|^2 = a(j, i) * |alpha_j|^2 along edges.
std::vector<mpq_class> simple_root_lengths(const CartanMatrix& a) {
  const auto n = a.size();
  std::vector<mpq_class> len(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    len[start] = 1;
    seen[start] = true;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || seen[j]) continue;
        len[j] = len[i] * a[i][j] / a[j][i];
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return len;
}

}  // namespace

CartanMatrix cartan_matrix(char family, int rank) {
  auto unsupported = [&] {
    throw DomainError("unsupported type: " + std::string(1, family) + std::to_string(rank));
  };
  if (rank < 1) unsupported();
  const int n = rank;
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      if (n < 2) unsupported();
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      // alpha_n short
      link(a, n - 2, n - 1, 1, 2);
      break;
    case 'C':
      if (n < 2) unsupported();
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      // alpha_n long
      link(a, n - 2, n - 1, 2, 1);
      break;
    case 'D':
      if (n < 3) unsupported();
      for (int i = 0; i + 3 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 2);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) unsupported();
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      if (n != 4) unsupported();
      link(a, 0, 1);
      link(a, 1, 2, 1, 2);
      link(a, 2, 3);
      break;
    case 'G':
      if (n != 2) unsupported();
      // alpha_1 short, alpha_2 long
      link(a, 0, 1, 3, 1);
      break;
    default:
      unsupported();
  }
  return a;
}

std::vector<RootCoefficients> positive_roots(const CartanMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::set<RootCoefficients> known;
  std::vector<RootCoefficients> level;
  for (int i = 0; i < n; ++i) {
    RootCoefficients simple(n, 0);
    simple[i] = 1;
    known.insert(simple);
    level.push_back(simple);
  }
  std::vector<RootCoefficients> roots = level;
  while (!level.empty()) {
    std::set<RootCoefficients> next;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        // p = length of the alpha_i-string below beta
        int p = 0;
        for (RootCoefficients lower = beta;;) {
          --lower[i];
          if (!known.contains(lower)) break;
          ++p;
        }
        int pairing = 0;  // <alpha_i^vee, beta>
        for (int j = 0; j < n; ++j) pairing += a[i][j] * beta[j];
        if (p - pairing <= 0) continue;
        RootCoefficients up = beta;
        ++up[i];
        if (!known.contains(up)) next.insert(up);
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) {
      known.insert(r);
      roots.push_back(r);
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    return height(x) < height(y);
  });
  return roots;
}

RootCoefficients highest_root(const CartanMatrix& cartan) {
  auto roots = positive_roots(cartan);
  const int top = height(roots.back());
  RootCoefficients result;
  int count = 0;
  for (const auto& r : roots)
    if (height(r) == top) {
      result = r;
      ++count;
    }
  if (count != 1) throw DomainError("root system is not irreducible");
  return result;
}

CartanMatrix affine_cartan_matrix(const CartanMatrix& a) {
  const int n = static_cast<int>(a.size());
  const auto theta = highest_root(a);
  const auto len = simple_root_lengths(a);

  // (alpha_i, alpha_j) = a(i, j) |alpha_i|^2 / 2
  std::vector<mpq_class> theta_dot(n, 0);  // (theta, alpha_j)
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) theta_dot[j] += theta[i] * a[i][j] * len[i] / 2;
  mpq_class theta_sq = 0;
  for (int j = 0; j < n; ++j) theta_sq += theta[j] * theta_dot[j];

  CartanMatrix affine(n + 1, std::vector<int>(n + 1, 0));
  affine[0][0] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) affine[i + 1][j + 1] = a[i][j];
  for (int j = 0; j < n; ++j) {
    mpq_class to_j = -2 * theta_dot[j] / theta_sq;   // <(-theta)^vee, alpha_j>
    mpq_class from_j = -2 * theta_dot[j] / len[j];   // <alpha_j^vee, -theta>
    if (to_j.get_den() != 1 || from_j.get_den() != 1)
      throw DomainError("non-integral affine Cartan entry");
    affine[0][j + 1] = static_cast<int>(to_j.get_num().get_si());
    affine[j + 1][0] = static_cast<int>(from_j.get_num().get_si());
  }
  return affine;
}

}  // namespace parafam
