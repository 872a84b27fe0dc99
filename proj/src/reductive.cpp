#include "parafam/reductive.hpp"

#include <algorithm>
#include <numeric>

#include "parafam/error.hpp"

namespace parafam {

std::vector<int> fundamental_degrees(const FiniteTypeLabel& label) {
  const int r = label.rank;
  std::vector<int> d;
  switch (label.family) {
    case 'A':
      for (int i = 2; i <= r + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= r; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < r; ++i) d.push_back(2 * i);
      d.push_back(r);
      break;
    case 'E':
      if (r == 6) d = {2, 5, 6, 8, 9, 12};
      if (r == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (r == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  if (static_cast<int>(d.size()) != r) throw DomainError("no degrees for " + label.name());
  std::sort(d.begin(), d.end());
  return d;
}

OrderPolynomial order_polynomial(const FiniteTypeLabel& label) {
  if (label.form == ResidueForm::unitary) {
    const int r = label.rank;
    auto order = OrderPolynomial::monomial(r * (r + 1) / 2);
    for (int i = 2; i <= r + 1; ++i) order *= OrderPolynomial::binomial(i, i % 2 == 0 ? 1 : -1);
    return order;
  }
  const auto degrees = fundamental_degrees(label);
  int positive_roots = 0;
  for (int d : degrees) positive_roots += d - 1;
  auto order = OrderPolynomial::monomial(positive_roots);
  for (int d : degrees) order *= OrderPolynomial::binomial(d);
  return order;
}

QuotientDescriptor quotient_descriptor(const LocalIndex& d, const ParahoricType& t) {
  require_proper(d, t);
  QuotientDescriptor q;
  if (d.residual_source() == ResidualSource::table) {
    const auto& entry = d.residual_table().at(t);
    q.components = entry.components;
    q.torus_rank = entry.torus_rank;
    std::sort(q.components.begin(), q.components.end());
  } else {
    q.components = induced_subdiagram(d, t);
    int semisimple_rank = 0;
    for (const auto& c : q.components) semisimple_rank += c.rank;
    q.torus_rank = d.relative_rank() - semisimple_rank;
  }
  q.dim = q.torus_rank;
  q.order = OrderPolynomial::binomial(1).pow(q.torus_rank);
  for (const auto& c : q.components) {
    q.dim += dimension(c);
    q.order *= order_polynomial(c);
  }
  return q;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t f = 2; f * f <= q; ++f)
    if (q % f == 0) {
      p = f;
      break;
    }
  while (q % p == 0) q /= p;
  if (q != 1) return std::nullopt;
  return p;
}

mpz_class evaluate_order(const OrderPolynomial& p, std::uint64_t q) {
  if (!prime_power_base(q))
    throw DomainError("invalid residue size " + std::to_string(q) + ": not a prime power");
  return p(mpz_class(static_cast<unsigned long>(q)));
}

int group_dimension(const GroupSpec& spec) {
  int dim = 0;
  for (const auto& label : canonical_labels(spec.family, spec.rank)) dim += dimension(label);
  return dim;
}

}  // namespace parafam
