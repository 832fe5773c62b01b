#include <gtest/gtest.h>

#include <set>

#include "vertexcalc/partitions.hpp"

using namespace vertexcalc;

namespace {

// Euler's pentagonal recurrence, independent of the generator.
std::vector<long> partition_counts(int n) {
  std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return p;
}

}  // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, 0}), DomainError);
  EXPECT_EQ(Partition::parse("2,1"), Partition({2, 1}));
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_THROW(Partition::parse("2,,1"), DomainError);
  EXPECT_THROW(Partition::parse("1,2"), DomainError);
  EXPECT_THROW(Partition::parse("a"), DomainError);
  EXPECT_EQ(Partition({3, 1, 1}).str(), "3,1,1");
}

TEST(Partition, Kappa) {
  EXPECT_EQ(kappa(Partition()), 0);
  EXPECT_EQ(kappa(Partition({3})), 6);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(kappa(Partition({n})), n * (n - 1));
  EXPECT_EQ(kappa(Partition({2, 1})), 0);
}

TEST(Partition, ZFactor) {
  EXPECT_EQ(z_factor(Partition()), 1);
  EXPECT_EQ(z_factor(Partition({2, 1})), 2);
  EXPECT_EQ(z_factor(Partition({1, 1})), 2);
  EXPECT_EQ(z_factor(Partition({2, 2, 1})), 8);
}

TEST(Partition, TransposeAndDouble) {
  EXPECT_EQ(transpose(Partition({2, 1})), Partition({2, 1}));
  EXPECT_EQ(transpose(Partition({3})), Partition({1, 1, 1}));
  EXPECT_EQ(transpose(Partition({2, 2})), Partition({2, 2}));
  EXPECT_EQ(doubled(Partition({2, 1})), Partition({4, 2}));
  EXPECT_EQ(doubled(Partition()), Partition());
  EXPECT_EQ(doubled(Partition({1, 1})), Partition({2, 2}));
}

TEST(Partition, Enumeration) {
  const std::vector<Partition> three{{3}, {2, 1}, {1, 1, 1}};
  EXPECT_EQ(enumerate(3), three);
  EXPECT_EQ(enumerate(0), std::vector<Partition>{Partition()});
  const std::vector<Partition> upto2{{}, {1}, {2}, {1, 1}};
  EXPECT_EQ(enumerate_up_to(2), upto2);
  const auto counts = partition_counts(30);
  for (int n = 0; n <= 30; ++n) {
    const auto& ps = enumerate(n);
    ASSERT_EQ(static_cast<long>(ps.size()), counts[static_cast<std::size_t>(n)]) << n;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      EXPECT_EQ(ps[i].weight(), n);
      if (i > 0) EXPECT_GT(ps[i - 1], ps[i]);  // strictly reverse lexicographic
    }
  }
}

TEST(Partition, Hooks) {
  EXPECT_EQ(hooks(Partition({1})), std::vector<int>{1});
  EXPECT_EQ(hooks(Partition({2})), (std::vector<int>{2, 1}));
  EXPECT_EQ(hooks(Partition({2, 1})), (std::vector<int>{3, 1, 1}));
}

TEST(PartitionProperties, TransposeAndKappa) {
  for (int n = 0; n <= 10; ++n) {
    std::set<Partition> seen;
    for (const auto& mu : enumerate(n)) {
      const Partition t = transpose(mu);
      EXPECT_EQ(transpose(t), mu);
      EXPECT_EQ(t.weight(), n);
      seen.insert(t);
      EXPECT_EQ(kappa(mu) + kappa(t), 0);
      EXPECT_EQ(kappa(mu) % 2, 0);
    }
    EXPECT_EQ(seen.size(), enumerate(n).size());
  }
}

TEST(PartitionProperties, HookLengthFormula) {
  for (int n = 0; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& mu : enumerate(n)) {
      BigInt prod = 1;
      for (int h : hooks(mu)) prod *= h;
      const BigInt dim = factorial(static_cast<unsigned>(n)) / prod;
      total += dim * dim;
    }
    EXPECT_EQ(total, factorial(static_cast<unsigned>(n))) << n;
  }
}

TEST(PartitionTriple, Encoding) {
  PartitionTriple t({2, 1}, {1}, {});
  EXPECT_EQ(t.str(), "2,1|1|");
  EXPECT_EQ(PartitionTriple::parse("2,1|1|"), t);
  EXPECT_EQ(PartitionTriple::parse("||"), PartitionTriple());
  EXPECT_THROW(PartitionTriple::parse("1|1"), DomainError);
  EXPECT_THROW(PartitionTriple::parse("1|1|1|"), DomainError);
  EXPECT_EQ(t.weight(), 4);
  EXPECT_EQ(t.length(), 3);
  EXPECT_EQ(triples_with_leg_bound(1).size(), 8u);
  EXPECT_EQ(triples_with_leg_bound(3).size(), 343u);
}
