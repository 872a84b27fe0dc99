#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "parafam/diagram.hpp"
#include "parafam/finite_type.hpp"
#include "parafam/order_polynomial.hpp"

namespace parafam {

/// Fundamental degrees of the Weyl group of a split label.
std::vector<int> fundamental_degrees(const FiniteTypeLabel& label);

/// |X(F_q)| as a polynomial in q. Split X_r: q^N prod (q^{d_i} - 1);
/// unitary 2A_r: q^{r(r+1)/2} prod_{i=2}^{r+1} (q^i - (-1)^i).
OrderPolynomial order_polynomial(const FiniteTypeLabel& label);

/// The maximal reductive quotient attached to a parahoric type.
struct QuotientDescriptor {
  std::vector<FiniteTypeLabel> components;  // sorted multiset
  int torus_rank = 0;
  int dim = 0;
  OrderPolynomial order;

  friend bool operator==(const QuotientDescriptor&, const QuotientDescriptor&) = default;
};

QuotientDescriptor quotient_descriptor(const LocalIndex& d, const ParahoricType& t);

/// Returns p when q = p^k with k >= 1, nothing otherwise.
std::optional<std::uint64_t> prime_power_base(std::uint64_t q);

/// Exact value of p at q. Throws DomainError("invalid residue size") unless
/// q is a prime power.
mpz_class evaluate_order(const OrderPolynomial& p, std::uint64_t q);

/// dim G for the absolute type of the group.
int group_dimension(const GroupSpec& spec);

}  // namespace parafam
