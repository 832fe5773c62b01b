#include <gtest/gtest.h>

#include <random>

#include "vertexcalc/vertex.hpp"

using namespace vertexcalc;

namespace {

const Partition E;
const Partition P1{1};

QRational inv_bracket(int n) { return QRational(HalfLaurent(1), bracket(n)); }

// s_nu at x_i = q^{mu_i - i + 1/2} through its power sums
// p_n = 1/[n] + sum_{i <= l(mu)} (q^{n mu_i} - 1) q^{n(-i+1/2)}.
QRational shifted_schur(const Partition& nu, const Partition& mu) {
  std::vector<QRational> p;
  for (int n = 1; n <= std::max(nu.weight(), 1); ++n) {
    QRational pn = inv_bracket(n);
    for (int i = 1; i <= mu.length(); ++i) {
      const int e = n * (-2 * i + 1);
      pn += QRational(HalfLaurent::monomial(e + 2 * n * mu[static_cast<std::size_t>(i - 1)]) - HalfLaurent::monomial(e));
    }
    p.push_back(pn);
  }
  return schur_from_power_sums(nu, p, QRational(1));
}

std::vector<EdgeLabel> two_edges() { return {{1, 1}, {2, 1}}; }

Exponent ex(int a, int b) {
  Exponent e{};
  e[0] = static_cast<std::uint8_t>(a);
  e[1] = static_cast<std::uint8_t>(b);
  return e;
}

QSeries monomial_series(const QRational& c, int a, int b, int D) {
  QSeries s(two_edges(), Truncation{D, {}});
  s.add_term(ex(a, b), c);
  return s;
}

}  // namespace

TEST(TwoLeg, Examples) {
  EXPECT_EQ(w_two(E, E), QRational(1));
  EXPECT_EQ(w_two(P1, E), inv_bracket(1));
  const HalfLaurent num = HalfLaurent::monomial(2) - HalfLaurent(1) + HalfLaurent::monomial(-2);
  EXPECT_EQ(w_two(P1, P1), QRational(num, bracket(1) * bracket(1)));
  EXPECT_EQ(w_two(P1, P1), w_mu(P1) * w_mu(P1) + QRational(1));
  for (const auto& mu : enumerate_up_to(5)) EXPECT_EQ(w_two(mu, E), w_mu(mu)) << mu.str();
}

TEST(TwoLeg, AgreesWithShiftedSpecialization) {
  // W_{mu nu} = W_mu s_nu(q^{mu + rho}): an independent route through power sums
  for (const auto& mu : enumerate_up_to(3))
    for (const auto& nu : enumerate_up_to(3))
      EXPECT_EQ(w_two(mu, nu), w_mu(mu) * shifted_schur(nu, mu)) << mu.str() << " / " << nu.str();
}

TEST(ThreeLeg, OneLegCollapse) {
  EXPECT_EQ(w_three_physical({E, E, E}), QRational(1));
  EXPECT_EQ(w_three_math({E, E, E}), QRational(1));
  for (const auto& mu : enumerate_up_to(6)) {
    EXPECT_EQ(w_three_physical({mu, E, E}), w_mu(mu)) << mu.str();
    EXPECT_EQ(w_three_math({mu, E, E}), w_mu(mu)) << mu.str();
  }
}

TEST(ThreeLeg, TwoBoxes) {
  const HalfLaurent num = HalfLaurent::monomial(2) - HalfLaurent(1) + HalfLaurent::monomial(-2);
  const QRational expect(num, bracket(1) * bracket(1));
  EXPECT_EQ(w_three_physical({P1, P1, E}), expect);
  EXPECT_EQ(w_three_math({P1, P1, E}), expect);
  EXPECT_EQ(w_three_physical({P1, P1, P1}), w_three_math({P1, P1, P1}));
}

TEST(ThreeLeg, PhysicalEqualsMathUpToTwoBoxesPerLeg) {
  for (const auto& t : triples_with_leg_bound(2)) EXPECT_EQ(w_three_physical(t), w_three_math(t)) << t.str();
}

TEST(ThreeLeg, CyclicSymmetry) {
  for (const auto& t : triples_up_to_weight(4)) {
    EXPECT_EQ(w_three_physical(t), w_three_physical(t.rotated())) << t.str();
    EXPECT_EQ(w_three_math(t), w_three_math(t.rotated())) << t.str();
  }
}

TEST(PairSum, Examples) {
  EXPECT_EQ(pair_sum(E, E), 1);
  EXPECT_EQ(pair_sum(P1, Partition({2})), 1);
  EXPECT_EQ(pair_sum(P1, Partition({1, 1})), -1);
  EXPECT_EQ(pair_sum(P1, P1), 0);
}

TEST(Framing, Phi) {
  EXPECT_EQ(phi(Partition({2}), Partition({2}), 0), QRational(BigRational(1, 2)));
  for (int a = -3; a <= 3; ++a) EXPECT_EQ(phi(P1, P1, a), QRational(1));
  EXPECT_EQ(phi(Partition({2}), Partition({1, 1}), 1),
            QRational((HalfLaurent::monomial(2) - HalfLaurent::monomial(-2)) * BigRational(1, 4)));
  EXPECT_TRUE(phi(Partition({2}), P1, 1).is_zero());
  for (int n = 0; n <= 4; ++n)
    for (const auto& nu : enumerate(n))
      for (const auto& mu : enumerate(n))
        EXPECT_EQ(phi(nu, mu, 0), nu == mu ? QRational(ratio(1, z_factor(mu))) : QRational());
}

TEST(Framing, FramedAmplitudes) {
  EXPECT_EQ(framed_amplitude({E, E, E}, {2, -1, 3}), QRational(1));
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) EXPECT_EQ(framed_amplitude({P1, E, E}, {0, a, b}), inv_bracket(1));
  EXPECT_EQ(framed_amplitude({P1, P1, P1}, {0, 0, 0}), w_three_math({P1, P1, P1}));
  // empty legs carry no framing dependence
  const PartitionTriple t{Partition({2}), Partition({1, 1}), E};
  EXPECT_EQ(framed_amplitude(t, {1, -1, 0}), framed_amplitude(t, {1, -1, 5}));
}

TEST(Connected, SmallAmplitudes) {
  const auto table = framed_table(3, {0, 0, 0});
  const auto f = connected(table);
  EXPECT_EQ(f.coeff({P1, E, E}), inv_bracket(1));
  EXPECT_EQ(f.coeff({P1, P1, E}), QRational(1));
  EXPECT_EQ(f.coeff({P1, P1, P1}), QRational(bracket(1)));
  EXPECT_TRUE(f.coeff({E, E, E}).is_zero());
  EXPECT_EQ(triple_exp(f), table);
}

TEST(Connected, RejectsBadNormalization) {
  TripleIndexedSeries t(2);
  t.add_term({}, QRational(2));
  EXPECT_THROW(connected(t), DomainError);
}

TEST(Coherent, TrivialAndOneLeg) {
  const int D = 2;
  std::vector<QSeries> zero(D, QSeries(two_edges(), Truncation{D, {}}));
  auto r0 = coherent_pairing_check(zero, zero, D);
  EXPECT_EQ(r0.lhs, r0.rhs);
  EXPECT_EQ(r0.lhs, QSeries::constant(two_edges(), Truncation{D, {}}, QRational(1)));

  std::vector<QSeries> t;
  for (int n = 1; n <= D; ++n)
    t.push_back(monomial_series(QRational(HalfLaurent(n % 2 == 1 ? 1 : -1), bracket(n)), n, 0, D));
  auto r1 = coherent_pairing_check(t, zero, D);
  EXPECT_EQ(r1.lhs, r1.rhs);
}

TEST(Coherent, RandomInputs) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), sh(-2, 2);
  for (int trial = 0; trial < 3; ++trial) {
    const int D = 2;
    std::vector<QSeries> t, tb;
    for (int n = 1; n <= D; ++n) {
      t.push_back(monomial_series(QRational(HalfLaurent::monomial(sh(rng), ratio(num(rng), den(rng)))), n, 0, D));
      tb.push_back(monomial_series(QRational(ratio(num(rng), den(rng))), 0, n, D));
    }
    auto r = coherent_pairing_check(t, tb, D);
    EXPECT_EQ(r.lhs, r.rhs) << trial;
  }
}
