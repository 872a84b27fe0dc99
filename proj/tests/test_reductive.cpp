#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "parafam/diagram.hpp"
#include "parafam/error.hpp"
#include "parafam/reductive.hpp"
#include "parafam/root_system.hpp"

using namespace parafam;

namespace {

// Frozen from oracle::count_special_linear / count_special_unitary_3_over_f4.
constexpr unsigned long kSL2F2 = 6, kSL2F3 = 24, kSL3F2 = 168, kSL3F3 = 5616, kSU3F4 = 216;

std::vector<FiniteTypeLabel> split_labels() {
  std::vector<FiniteTypeLabel> out;
  for (int r = 1; r <= 9; ++r) out.push_back({'A', r});
  for (int r = 2; r <= 9; ++r) out.push_back({'B', r});
  for (int r = 3; r <= 9; ++r) out.push_back({'C', r});
  for (int r = 4; r <= 9; ++r) out.push_back({'D', r});
  for (int r = 6; r <= 8; ++r) out.push_back({'E', r});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

}  // namespace

TEST(Oracle, MatrixCountsAreFrozenCorrectly) {
  EXPECT_EQ(oracle::count_special_linear(2, 2), kSL2F2);
  EXPECT_EQ(oracle::count_special_linear(2, 3), kSL2F3);
  EXPECT_EQ(oracle::count_special_linear(3, 2), kSL3F2);
  EXPECT_EQ(oracle::count_special_unitary_3_over_f4(), kSU3F4);
}

TEST(OrderPolynomial, A1AndA2MatchMatrixCounts) {
  const auto a1 = order_polynomial({'A', 1});
  const auto a2 = order_polynomial({'A', 2});
  EXPECT_EQ(a1, OrderPolynomial({0, -1, 0, 1}));
  EXPECT_EQ(evaluate_order(a1, 2), kSL2F2);
  EXPECT_EQ(evaluate_order(a1, 3), kSL2F3);
  EXPECT_EQ(evaluate_order(a2, 2), kSL3F2);
  EXPECT_EQ(evaluate_order(a2, 3), kSL3F3);
}

TEST(OrderPolynomial, UnitaryMatchesMatrixCount) {
  const auto u3 = order_polynomial({'A', 2, ResidueForm::unitary});
  EXPECT_EQ(evaluate_order(u3, 2), kSU3F4);
  // 2A1 folds onto A1
  EXPECT_EQ(canonical_labels('A', 1, ResidueForm::unitary),
            (std::vector<FiniteTypeLabel>{{'A', 1}}));
}

TEST(OrderPolynomial, DegreeIsDimensionFromRootGeneration) {
  for (const auto& label : split_labels()) {
    const auto roots = positive_roots(cartan_matrix(label.family, label.rank)).size();
    const auto p = order_polynomial(label);
    EXPECT_EQ(p.degree(), label.rank + 2 * static_cast<int>(roots)) << label.name();
    EXPECT_EQ(dimension(label), p.degree()) << label.name();
    EXPECT_GT(p.leading(), 0);
  }
  for (int r = 2; r <= 6; ++r)
    EXPECT_EQ(order_polynomial({'A', r, ResidueForm::unitary}).degree(), r * (r + 2));
}

TEST(OrderPolynomial, PositiveRootsAreSumOfDegreesMinusOne) {
  for (const auto& label : split_labels()) {
    int sum = 0;
    for (int d : fundamental_degrees(label)) sum += d - 1;
    const auto roots = positive_roots(cartan_matrix(label.family, label.rank)).size();
    EXPECT_EQ(sum, static_cast<int>(roots)) << label.name();
  }
}

TEST(OrderPolynomial, KnownGroupOrders) {
  // |Sp4(2)| = 720, |G2(2)| = 12096, |SO5(3)| = |Sp4(3)| = 51840
  EXPECT_EQ(evaluate_order(order_polynomial({'B', 2}), 2), 720);
  EXPECT_EQ(evaluate_order(order_polynomial({'G', 2}), 2), 12096);
  EXPECT_EQ(evaluate_order(order_polynomial({'B', 2}), 3), 51840);
}

TEST(EvaluateOrder, Examples) {
  EXPECT_EQ(evaluate_order(OrderPolynomial::binomial(1).pow(3), 2), 1);
  EXPECT_EQ(evaluate_order(OrderPolynomial({0, -1, 0, 1}), 2), 6);
}

TEST(EvaluateOrder, RejectsNonPrimePowers) {
  const auto p = order_polynomial({'A', 1});
  for (std::uint64_t q : {0, 1, 6, 12, 100}) EXPECT_THROW(evaluate_order(p, q), DomainError) << q;
  for (std::uint64_t q : {2, 4, 8, 9, 25, 27, 49, 121}) EXPECT_NO_THROW(evaluate_order(p, q));
}

TEST(QuotientDescriptor, SingletonAndIwahori) {
  for (int n : {3, 5, 8}) {
    const auto d = build_local_index(GroupSpec::split('B', n));
    const auto single = quotient_descriptor(d, {2});
    EXPECT_EQ(single.components, (std::vector<FiniteTypeLabel>{{'A', 1}}));
    EXPECT_EQ(single.torus_rank, n - 1);
    EXPECT_EQ(single.dim, n + 2);
    const auto iwahori = quotient_descriptor(d, {});
    EXPECT_TRUE(iwahori.components.empty());
    EXPECT_EQ(iwahori.torus_rank, n);
    EXPECT_EQ(iwahori.dim, n);
    EXPECT_EQ(iwahori.order, OrderPolynomial::binomial(1).pow(n));
  }
}

TEST(QuotientDescriptor, SplitA5TwoPoints) {
  const auto d = build_local_index(GroupSpec::split('A', 5));
  const auto q = quotient_descriptor(d, {0, 2});
  EXPECT_EQ(q.components, (std::vector<FiniteTypeLabel>{{'A', 1}, {'A', 1}}));
  EXPECT_EQ(q.torus_rank, 3);
  EXPECT_EQ(q.dim, 9);
  const auto expected = OrderPolynomial::monomial(2) * OrderPolynomial::binomial(2).pow(2) *
                        OrderPolynomial::binomial(1).pow(3);
  EXPECT_EQ(q.order, expected);
}

TEST(QuotientDescriptor, ImproperSubsetRejected) {
  const auto d = build_local_index(GroupSpec::split('G', 2));
  EXPECT_THROW(quotient_descriptor(d, {0, 1, 2}), DomainError);
}

TEST(QuotientDescriptor, TwistedTablesAgreeWithDiagramClassification) {
  for (auto idx : {TwistedIndex::c_bc1, TwistedIndex::c_b2}) {
    const auto d = build_local_index(GroupSpec::twisted(idx));
    EXPECT_EQ(d.residual_table().size(), proper_types(d).size());
    for (const auto& t : proper_types(d)) {
      const auto q = quotient_descriptor(d, t);
      EXPECT_EQ(q.components, induced_subdiagram(d, t)) << d.name() << t.to_string();
      int ss_rank = 0;
      for (const auto& c : q.components) ss_rank += c.rank;
      EXPECT_EQ(q.torus_rank + ss_rank, d.relative_rank());
      EXPECT_EQ(q.order.degree(), q.dim);
    }
  }
}

TEST(QuotientDescriptor, InvariantsOverAllProperSubsets) {
  for (const auto& spec : {GroupSpec::split('E', 7), GroupSpec::split('D', 6),
                           GroupSpec::split('A', 7), GroupSpec::split('F', 4)}) {
    const auto d = build_local_index(spec);
    for (const auto& t : proper_types(d)) {
      const auto q = quotient_descriptor(d, t);
      int dim = q.torus_rank;
      auto order = OrderPolynomial::binomial(1).pow(q.torus_rank);
      for (const auto& c : q.components) {
        dim += dimension(c);
        order *= order_polynomial(c);
      }
      EXPECT_EQ(q.dim, dim);
      EXPECT_EQ(q.order, order);
      EXPECT_EQ(q.order.degree(), q.dim);
    }
  }
}

TEST(QuotientDescriptor, InvariantUnderRealizedAutomorphisms) {
  std::mt19937 rng(7);
  for (const auto& spec : {GroupSpec::split('D', 4), GroupSpec::split('E', 6),
                           GroupSpec::split('A', 6), GroupSpec::split('C', 5),
                           GroupSpec::twisted(TwistedIndex::c_b2)}) {
    const auto d = build_local_index(spec);
    const unsigned full = (1u << d.vertex_count()) - 1;
    for (int trial = 0; trial < 30; ++trial) {
      const auto t = ParahoricType::from_mask(rng() % full);
      const auto base = quotient_descriptor(d, t);
      for (const auto& g : d.realized_automorphisms())
        EXPECT_EQ(quotient_descriptor(d, apply(g, t)), base);
    }
  }
}

TEST(GroupDimension, TableAgreesWithRootGeneration) {
  const std::vector<std::tuple<char, int, int>> table{
      {'A', 4, 24}, {'B', 3, 21}, {'C', 4, 36}, {'D', 5, 45}, {'E', 6, 78},
      {'E', 7, 133}, {'E', 8, 248}, {'F', 4, 52}, {'G', 2, 14}};
  for (const auto& [family, rank, dim] : table) {
    const auto spec = GroupSpec::split(family, rank);
    EXPECT_EQ(group_dimension(spec), dim);
    const int roots = static_cast<int>(positive_roots(cartan_matrix(family, rank)).size());
    EXPECT_EQ(dim, rank + 2 * roots);
  }
  EXPECT_EQ(group_dimension(GroupSpec::twisted(TwistedIndex::c_bc1)), 8);
  EXPECT_EQ(group_dimension(GroupSpec::twisted(TwistedIndex::c_b2)), 15);
}
