#include <gtest/gtest.h>

#include "vertexcalc/ftcy.hpp"
#include "vertexcalc/gv.hpp"

using namespace vertexcalc;

namespace {

Exponent cls(const ConfigSpec& cfg, std::string_view text) { return DegreeVector::parse(text).to_exponent(cfg.edges()); }

/// The class with legs cyclically shifted: leg i takes the degrees of leg i-1.
Exponent rotate(const ConfigSpec& cfg, const Exponent& e) {
  Exponent r{};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= cfg.length(i); ++j) {
      const int from = i == 1 ? 3 : i - 1;
      r[static_cast<std::size_t>(cfg.position(i, j))] = e[static_cast<std::size_t>(cfg.position(from, j))];
    }
  return r;
}

}  // namespace

TEST(GwInvariants, SuperRigidLine) {
  const auto cfg = ConfigSpec::chain(1, 3);
  const QSeries F = f1(cfg);
  Exponent one{}, three{};
  one[0] = 1;
  three[0] = 3;
  const auto n1 = gw_invariants(F, one, 3);
  const auto n3 = gw_invariants(F, three, 3);
  for (int g = 0; g <= 3; ++g) {
    EXPECT_EQ(n1[static_cast<std::size_t>(g)], c_g(g));
    EXPECT_EQ(n3[static_cast<std::size_t>(g)], c_g(g) * rational_pow(BigRational(3), 2 * g - 3));
  }
}

TEST(GwInvariants, ClosedVertex) {
  const auto cfg = ConfigSpec::closed_vertex(3);
  const auto n = gw_invariants(free_energy(z_closed_vertex(3)), cls(cfg, "1|1|1"), 2);
  EXPECT_EQ(n, (std::vector<BigRational>{c_g(0), c_g(1), c_g(2)}));
}

TEST(GvExtract, ChainRootPattern) {
  for (int N = 3; N <= 4; ++N) {
    const auto cfg = ConfigSpec::chain(N, 4);
    const QSeries F = f2(cfg);
    const GvTable t = gv_extract(F, 2);
    int roots = 0;
    for (const auto& [d, n] : t.entries) {
      // support must be an interval k1..k2 with 2 <= k1, all degrees 1
      int lo = -1, hi = -1;
      bool ones = true;
      for (int j = 1; j <= N; ++j)
        if (d[static_cast<std::size_t>(j - 1)] != 0) {
          if (lo < 0) lo = j;
          hi = j;
          ones = ones && d[static_cast<std::size_t>(j - 1)] == 1;
        }
      bool interval = lo >= 2 && ones;
      for (int j = lo; interval && j <= hi; ++j) interval = d[static_cast<std::size_t>(j - 1)] == 1;
      EXPECT_TRUE(interval);
      EXPECT_EQ(n[0], 1);
      for (std::size_t g = 1; g < n.size(); ++g) EXPECT_EQ(n[g], 0);
      ++roots;
    }
    EXPECT_EQ(roots, (N - 1) * N / 2);  // positive roots of A_{N-1}
  }
}

TEST(GvExtract, ResumReproducesSeries) {
  const auto cfg = ConfigSpec::trivalent({2, 1, 1}, 4);
  const QSeries F = free_energy(z_trivalent(cfg, Flavor::math));
  const GvTable t = gv_extract(F, 3);
  EXPECT_EQ(gv_resum(t, cfg.truncation()), F);
}

TEST(GvExtract, IntegralityFailureNamesClass) {
  QSeries F(ConfigSpec::chain(1, 2).edges(), Truncation{2, {}});
  Exponent e{};
  e[0] = 1;
  F.add_term(e, QRational(HalfLaurent(BigRational(1, 2)), bracket(1) * bracket(1)));
  try {
    gv_extract(F, 1);
    FAIL() << "expected an integrality failure";
  } catch (const GvIntegralityError& err) {
    EXPECT_NE(std::string(err.what()).find("1,1:1"), std::string::npos);
  }
  QSeries G(F.edges(), F.truncation());
  G.add_term(e, QRational(HalfLaurent(1), bracket(2)));
  EXPECT_THROW(gv_extract(G, 1), GvIntegralityError);
}

TEST(GvExtract, TrivalentTable) {
  // total degree 9 reaches (2,1),(2,1),(2,1); caps keep the series small
  const auto cfg = ConfigSpec::trivalent({2, 2, 2}, 9, {2, 1, 2, 1, 2, 1});
  const GvTable t = gv_extract(free_energy(z_trivalent(cfg, Flavor::math)), 3);
  const std::vector<std::pair<std::string, int>> expected{
      {"1,1|1,1|1,1", -1}, {"2,1|1,1|1,1", 1}, {"1,0|2,1|2,1", -2}, {"1,1|2,1|2,1", -2}, {"2,1|2,1|2,1", 4}};
  for (const auto& [text, n0] : expected) {
    Exponent d = cls(cfg, text);
    for (int r = 0; r < 3; ++r, d = rotate(cfg, d)) {
      EXPECT_EQ(t.at(d, 0), n0) << text << " rotated " << r;
      for (int g = 1; g <= 3; ++g) EXPECT_EQ(t.at(d, g), 0) << text << " g=" << g;
    }
  }
}

TEST(GvExtract, TrivalentCyclicSymmetry) {
  const auto cfg = ConfigSpec::trivalent({2, 2, 2}, 4);
  const GvTable t = gv_extract(free_energy(z_trivalent(cfg, Flavor::math)), 2);
  for (const auto& [d, n] : t.entries)
    for (int g = 0; g <= 2; ++g) EXPECT_EQ(t.at(rotate(cfg, d), g), n[static_cast<std::size_t>(g)]);
}
