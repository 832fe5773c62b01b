#include <gtest/gtest.h>

#include "vertexcalc/symfunc.hpp"

using namespace vertexcalc;

namespace {

QRational hook_closed_form(const Partition& mu) {
  HalfLaurent den(1);
  for (int h : hooks(mu)) den *= bracket(h);
  return QRational(HalfLaurent::monomial(kappa(mu) / 2), den);
}

// c^rho_{mu nu} = <s_mu s_nu, s_rho> expanded through characters.
BigRational lr_by_characters(const Partition& mu, const Partition& nu, const Partition& rho) {
  BigRational total = 0;
  for (const auto& s : enumerate(mu.weight()))
    for (const auto& t : enumerate(nu.weight()))
      total += ratio(character(mu, s) * character(nu, t) * character(rho, merged(s, t)), z_factor(s) * z_factor(t));
  return total;
}

}  // namespace

TEST(Characters, Examples) {
  for (const auto& nu : enumerate(4)) EXPECT_EQ(character(Partition({4}), nu), 1);
  EXPECT_EQ(character(Partition({1, 1, 1}), Partition({2, 1})), -1);
  EXPECT_EQ(character(Partition({2, 1}), Partition({1, 1, 1})), 2);
  EXPECT_EQ(character(Partition({2, 1}), Partition({3})), -1);
  EXPECT_EQ(character(Partition(), Partition()), 1);
  EXPECT_THROW(character(Partition({2}), Partition({1})), DomainError);
}

TEST(Characters, SignCharacterAndDimension) {
  for (int n = 1; n <= 7; ++n) {
    const Partition col(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& nu : enumerate(n)) {
      const int sign = ((n - nu.length()) % 2 == 0) ? 1 : -1;
      EXPECT_EQ(character(col, nu), sign);
    }
    for (const auto& mu : enumerate(n)) {
      BigInt prod = 1;
      for (int h : hooks(mu)) prod *= h;
      EXPECT_EQ(character(mu, col), factorial(static_cast<unsigned>(n)) / prod);
    }
  }
}

TEST(Characters, Orthogonality) {
  for (int n = 0; n <= 6; ++n) {
    const auto& ps = enumerate(n);
    for (const auto& lam : ps)
      for (const auto& mu : ps) {
        BigRational s = 0;
        for (const auto& nu : ps) s += ratio(character(lam, nu) * character(mu, nu), z_factor(nu));
        EXPECT_EQ(s, lam == mu ? 1 : 0) << lam.str() << " " << mu.str();
      }
  }
}

TEST(LittlewoodRichardson, Examples) {
  EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition(), Partition({2, 1})), 1);
  EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({2})), 1);
  EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})), 1);
  EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1, 1}), Partition({2, 1})), 1);
  EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})), 2);
  EXPECT_EQ(lr_coefficient(Partition({2}), Partition({2}), Partition({2, 1, 1})), 0);
  EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({3})), 0);
}

TEST(LittlewoodRichardson, SymmetryAndTransposeCovariance) {
  for (int w = 0; w <= 6; ++w)
    for (const auto& rho : enumerate(w))
      for (int a = 0; a <= w; ++a)
        for (const auto& mu : enumerate(a))
          for (const auto& nu : enumerate(w - a)) {
            const long c = lr_coefficient(mu, nu, rho);
            EXPECT_EQ(c, lr_coefficient(nu, mu, rho));
            EXPECT_EQ(c, lr_coefficient(transpose(mu), transpose(nu), transpose(rho)));
          }
}

TEST(LittlewoodRichardson, AgreesWithCharacterFormula) {
  for (int w = 0; w <= 5; ++w)
    for (const auto& rho : enumerate(w))
      for (int a = 0; a <= w; ++a)
        for (const auto& mu : enumerate(a))
          for (const auto& nu : enumerate(w - a))
            EXPECT_EQ(BigRational(lr_coefficient(mu, nu, rho)), lr_by_characters(mu, nu, rho))
                << mu.str() << " * " << nu.str() << " -> " << rho.str();
}

TEST(Schur, FromPowerSums) {
  const std::vector<BigRational> p{BigRational(3), BigRational(5), BigRational(7)};
  EXPECT_EQ(schur_from_power_sums(Partition(), p, BigRational(1)), 1);
  EXPECT_EQ(schur_from_power_sums(Partition({1}), p, BigRational(1)), 3);
  EXPECT_EQ(schur_from_power_sums(Partition({2}), p, BigRational(1)), BigRational(7));
  EXPECT_EQ(schur_from_power_sums(Partition({1, 1}), p, BigRational(1)), BigRational(2));
  EXPECT_THROW(schur_from_power_sums(Partition({4}), p, BigRational(1)), DomainError);
  // power sums of the variables (1, 2): s_mu is a genuine polynomial evaluation
  const std::vector<BigRational> q{BigRational(3), BigRational(5), BigRational(9), BigRational(17)};
  EXPECT_EQ(schur_from_power_sums(Partition({2}), q, BigRational(1)), 1 + 2 + 4);
  EXPECT_EQ(schur_from_power_sums(Partition({1, 1}), q, BigRational(1)), 2);
  EXPECT_EQ(schur_from_power_sums(Partition({1, 1, 1}), q, BigRational(1)), 0);
  const auto all = schur_all_from_power_sums(3, q, BigRational(1));
  for (std::size_t k = 0; k < all.size(); ++k)
    EXPECT_EQ(all[k], schur_from_power_sums(enumerate(3)[k], q, BigRational(1)));
}

TEST(QuantumDimension, Examples) {
  EXPECT_EQ(w_mu(Partition()), QRational(1));
  EXPECT_EQ(w_mu(Partition({1})), QRational(HalfLaurent(1), bracket(1)));
  EXPECT_EQ(w_mu(Partition({2})), QRational(HalfLaurent::monomial(1), bracket(1) * bracket(2)));
  EXPECT_EQ(w_mu(Partition({2})).evaluate(2), BigRational(16, 45));
}

TEST(QuantumDimension, PowerSumRouteMatchesHookFormula) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& mu : enumerate(n)) EXPECT_EQ(w_mu(mu), hook_closed_form(mu)) << mu.str();
}

TEST(QuantumDimension, TransposeRule) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& mu : enumerate(n))
      EXPECT_EQ(w_mu(transpose(mu)), QRational(HalfLaurent::monomial(-kappa(mu))) * w_mu(mu)) << mu.str();
}

TEST(QuantumDimension, Skew) {
  for (const auto& mu : enumerate_up_to(4)) EXPECT_EQ(w_skew(mu, Partition()), w_mu(mu));
  EXPECT_EQ(w_skew(Partition({2}), Partition({1})), w_mu(Partition({1})));
  EXPECT_TRUE(w_skew(Partition({1}), Partition({2})).is_zero());
  EXPECT_TRUE(w_skew(Partition({2}), Partition({1, 1})).is_zero());
  // s_{(2,1)/(1)} = s_2 + s_{11}
  EXPECT_EQ(w_skew(Partition({2, 1}), Partition({1})), w_mu(Partition({2})) + w_mu(Partition({1, 1})));
}
