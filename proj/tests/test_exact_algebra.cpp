#include <gtest/gtest.h>

#include <random>

#include "vertexcalc/bracket_fraction.hpp"
#include "vertexcalc/genus.hpp"
#include "vertexcalc/novikov_series.hpp"

using namespace vertexcalc;

namespace {

QRational inv_bracket_sq(int n, const BigRational& scale) {
  HalfLaurent b = bracket(n);
  return QRational(HalfLaurent(scale), b * b);
}

// Power-series helpers over Q used as independent oracles.
std::vector<BigRational> series_inverse(const std::vector<BigRational>& a) {
  std::vector<BigRational> r(a.size());
  r[0] = 1 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    BigRational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

std::vector<BigRational> series_mul(const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
  std::vector<BigRational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

HalfLaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), len(1, 4), low(-3, 3);
  std::map<int, BigRational> t;
  const int l = low(rng);
  const int n = len(rng);
  for (int k = 0; k < n; ++k) t[l + k] = BigRational(coef(rng), 1 + (k % 3));
  return HalfLaurent::from_terms(t);
}

std::vector<EdgeLabel> two_edges() { return {{1, 1}, {2, 1}}; }

Exponent ex(int a, int b = 0) {
  Exponent e{};
  e[0] = static_cast<std::uint8_t>(a);
  e[1] = static_cast<std::uint8_t>(b);
  return e;
}

}  // namespace

TEST(Bracket, Terms) {
  EXPECT_EQ(bracket(1), HalfLaurent::monomial(1) - HalfLaurent::monomial(-1));
  EXPECT_EQ(bracket(2), HalfLaurent::monomial(2) - HalfLaurent::monomial(-2));
  EXPECT_EQ(bracket(2).evaluate(2), BigRational(15, 4));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(bracket(n).evaluate(1), 0);
  EXPECT_THROW(bracket(0), DomainError);
  EXPECT_THROW(bracket(-2), DomainError);
}

TEST(QRational, CanonicalFormDecidesEquality) {
  QRational a(bracket(2), bracket(1));
  QRational b(HalfLaurent::monomial(1) + HalfLaurent::monomial(-1));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.is_laurent());
  EXPECT_EQ(a.den(), HalfLaurent(1));
  QRational c(HalfLaurent(BigRational(2, 3)), bracket(1) * BigRational(4));
  EXPECT_EQ(c.den().low_exponent(), 0);
  EXPECT_GT(c.den().coeff(c.den().high_exponent()), 0);
  EXPECT_EQ(c.evaluate(2), BigRational(2, 3) / (4 * BigRational(3, 2)));
  EXPECT_THROW(QRational(HalfLaurent(1), HalfLaurent()), DomainError);
}

TEST(QRational, FieldAxiomsOnRandomValues) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    QRational a(random_laurent(rng), random_laurent(rng) + HalfLaurent(7));
    QRational b(random_laurent(rng), bracket(1 + trial % 3));
    QRational c(random_laurent(rng), random_laurent(rng) + HalfLaurent(11, 2));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, QRational());
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    const BigRational x(3, 2);
    EXPECT_EQ((a * c).evaluate(x), a.evaluate(x) * c.evaluate(x));
  }
}

TEST(BracketFraction, AgreesWithQRational) {
  BracketFraction s;
  QRational ref;
  for (int n = 1; n <= 5; ++n) {
    BracketFraction t = BracketFraction::inverse_bracket(n, 2);
    t *= HalfLaurent::monomial(n, BigRational(1, n));
    s += t;
    ref += QRational(HalfLaurent::monomial(n, BigRational(1, n)), bracket(n) * bracket(n));
  }
  EXPECT_EQ(s.to_qrational(), ref);
  BracketFraction d = s;
  d /= QRational(HalfLaurent::monomial(1, 3), bracket(2));
  EXPECT_EQ(d.to_qrational(), ref * QRational(bracket(2), HalfLaurent::monomial(1, 3)));
  EXPECT_THROW(d /= QRational(bracket(1)), DomainError);
  EXPECT_TRUE((s - s).is_zero());
}

TEST(Genus, Bernoulli) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), BigRational(-1, 2));
  EXPECT_EQ(bernoulli(2), BigRational(1, 6));
  EXPECT_EQ(bernoulli(4), BigRational(-1, 30));
  EXPECT_EQ(bernoulli(12), BigRational(-691, 2730));
  EXPECT_EQ(bernoulli(7), 0);
  EXPECT_THROW(bernoulli(-2), DomainError);
}

TEST(Genus, CgMatchesSineSeries) {
  // (t/2 / sin(t/2))^2 in powers of s = t^2.
  const int G = 7;
  std::vector<BigRational> sinc(G);
  for (int k = 0; k < G; ++k) {
    BigRational term = BigRational(1, int_pow(4, static_cast<unsigned>(k))) / BigRational(factorial(2 * k + 1));
    sinc[k] = (k % 2 == 0) ? term : BigRational(-term);
  }
  auto inv = series_inverse(sinc);
  auto sq = series_mul(inv, inv);
  EXPECT_EQ(c_g(0), 1);
  EXPECT_EQ(c_g(1), BigRational(1, 12));
  EXPECT_EQ(c_g(2), BigRational(1, 240));
  for (int g = 0; g < G; ++g) EXPECT_EQ(c_g(g), sq[g]) << "g=" << g;
}

TEST(Genus, ExpansionOfMultipleCover) {
  // -1/(4 sinh^2(u/2)) by independent series division in v = u^2.
  const int G = 4;
  std::vector<BigRational> shc(G + 1);
  for (int k = 0; k <= G; ++k)
    shc[k] = BigRational(1, int_pow(4, static_cast<unsigned>(k))) / BigRational(factorial(2 * k + 1));
  auto inv = series_inverse(shc);
  auto sq = series_mul(inv, inv);  // (u/2 / sinh(u/2))^2 = u^2 * 1/(4 sinh^2)
  auto e = expand_genus(inv_bracket_sq(1, -1), G);
  for (int g = 0; g <= G; ++g) {
    EXPECT_EQ(e.at(2 * g - 2), -sq[g]) << "g=" << g;
    EXPECT_EQ(e.invariant(g), c_g(g)) << "g=" << g;
  }
  auto e2 = expand_genus(inv_bracket_sq(1, -1), 2);
  EXPECT_EQ(e2.invariant(0), 1);
  EXPECT_EQ(e2.invariant(1), BigRational(1, 12));
  EXPECT_EQ(e2.invariant(2), BigRational(1, 240));
}

TEST(Genus, ConstantAndDoubleCover) {
  auto one = expand_genus(QRational(1), 1);
  EXPECT_EQ(one.invariant(0), 0);
  EXPECT_EQ(one.invariant(1), 1);
  auto two = expand_genus(inv_bracket_sq(2, BigRational(-1, 2)), 1);
  EXPECT_EQ(two.invariant(0), BigRational(1, 8));
  EXPECT_EQ(two.invariant(1), BigRational(1, 24));
}

TEST(Genus, MulticoverFormulaForAllSmallN) {
  for (int n = 1; n <= 8; ++n) {
    auto e = expand_genus(inv_bracket_sq(n, BigRational(-1, n)), 4);
    for (int g = 0; g <= 4; ++g) {
      BigRational expect = c_g(g) * rational_pow(BigRational(n), 2 * g - 3);
      EXPECT_EQ(e.invariant(g), expect) << "n=" << n << " g=" << g;
    }
  }
}

TEST(Genus, RejectsHighPoles) {
  HalfLaurent b = bracket(1);
  EXPECT_THROW(expand_genus(QRational(HalfLaurent(1), b * b * b), 2), DomainError);
  EXPECT_THROW(expand_genus(QRational(HalfLaurent(1), b * b * b * b), 2), DomainError);
  // [1] alone has only odd orders in u
  EXPECT_THROW(expand_genus(QRational(b), 2), DomainError);
}

TEST(Novikov, ExpAndLogBasics) {
  Truncation t{2, {}};
  QSeries zero(two_edges(), t);
  EXPECT_EQ(series_exp(zero), QSeries::constant(two_edges(), t, QRational(1)));

  QSeries z = QSeries::constant(two_edges(), t, QRational(1));
  z.add_term(ex(1), QRational(1));
  auto l = series_log(z);
  EXPECT_EQ(l.coeff(ex(1)), QRational(1));
  EXPECT_EQ(l.coeff(ex(2)), QRational(BigRational(-1, 2)));
  EXPECT_EQ(l.terms().size(), 2u);

  QSeries f(two_edges(), t);
  const QRational a(bracket(1)), b(HalfLaurent::monomial(3, BigRational(2, 7)));
  f.add_term(ex(1, 0), a);
  f.add_term(ex(0, 1), b);
  EXPECT_EQ(series_exp(f).coeff(ex(1, 1)), a * b);

  EXPECT_THROW(series_exp(z), DomainError);
  EXPECT_THROW(series_log(f), DomainError);
}

TEST(Novikov, LogInvertsExpOnRandomSeries) {
  std::mt19937 rng(11);
  Truncation t{4, {}};
  for (int trial = 0; trial < 5; ++trial) {
    QSeries f(two_edges(), t);
    FastSeries ff(two_edges(), t);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j) {
        if (i + j == 0) continue;
        HalfLaurent p = random_laurent(rng);
        f.add_term(ex(i, j), QRational(p, bracket(1 + (i + j) % 3)));
        BracketFraction c(p);
        c.divide_by_bracket(1 + (i + j) % 3);
        ff.add_term(ex(i, j), c);
      }
    EXPECT_EQ(series_log(series_exp(f)), f);
    auto e = series_exp(ff);
    EXPECT_EQ(to_qseries(e), series_exp(f));
    EXPECT_EQ(to_qseries(series_log(e)), f);
  }
}

TEST(Novikov, TruncationAndCaps) {
  Truncation t{3, {1, -1}};
  QSeries s(two_edges(), t);
  s.add_term(ex(2, 0), QRational(1));
  s.add_term(ex(1, 3), QRational(1));
  s.add_term(ex(1, 2), QRational(1));
  EXPECT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.without_edge({1, 1}).terms().size(), 0u);
  QSeries other(two_edges(), Truncation{2, {}});
  EXPECT_THROW(s + other, DomainError);
}
