#pragma once

/**
 * @file acceptance.hpp
 * @brief The eight acceptance criteria as runnable checks. Each returns a
 * pass/fail verdict with a one-line detail; nothing is assumed.
 */

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vertexcalc/cremona.hpp"
#include "vertexcalc/ftcy.hpp"
#include "vertexcalc/genus.hpp"
#include "vertexcalc/gv.hpp"
#include "vertexcalc/parallel.hpp"
#include "vertexcalc/symfunc.hpp"
#include "vertexcalc/vertex.hpp"

namespace vertexcalc::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  int jobs = 1;
  bool extended = false;  // vertex identity up to four boxes per leg
};

namespace detail {

/// Collects failures; keeps only the first few messages.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  Result result(std::string pass_detail) const {
    Result r;
    r.pass = failed == 0 && checked > 0;
    r.detail = r.pass ? std::move(pass_detail)
                      : std::to_string(failed) + " of " + std::to_string(checked) + " checks failed; first: " + first;
    return r;
  }
};

inline std::vector<BigRational> series_inverse(const std::vector<BigRational>& a) {
  std::vector<BigRational> r(a.size());
  r[0] = 1 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    BigRational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

inline std::vector<BigRational> series_square(const std::vector<BigRational>& a) {
  std::vector<BigRational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * a[j];
  return r;
}

inline QRational hook_closed_form(const Partition& mu) {
  HalfLaurent den(1);
  for (int h : hooks(mu)) den *= bracket(h);
  return QRational(HalfLaurent::monomial(kappa(mu) / 2), den);
}

}  // namespace detail

/// 1. Physical and mathematical vertices agree on every triple with |mu^i| <= K.
inline Result vertex_identity(const Options& opt) {
  const int K = opt.extended ? 4 : 3;
  const auto triples = triples_with_leg_bound(K);
  const auto equal = parallel_map(triples, opt.jobs, [](const PartitionTriple& t) {
    return w_three_physical(t) == w_three_math(t) ? 1 : 0;
  });
  detail::Tally t;
  for (std::size_t i = 0; i < triples.size(); ++i) t.check(equal[i] == 1, triples[i].str());
  return t.result(std::to_string(triples.size()) + " distinct triples with |mu^i| <= " + std::to_string(K) + " agree");
}

/// 2. Trivalent sum with one edge per leg equals the closed vertex.
inline Result closed_vertex(const Options& opt) {
  const QSeries closed = z_closed_vertex(4);
  const auto cfg = ConfigSpec::trivalent({1, 1, 1}, 4);
  detail::Tally t;
  t.check(z_trivalent(cfg, Flavor::physical, opt.jobs) == closed, "physical flavor");
  t.check(z_trivalent(cfg, Flavor::math, opt.jobs) == closed, "math flavor");
  return t.result("both flavors match the closed vertex at D = 4 (" + std::to_string(closed.terms().size()) + " terms)");
}

/// 3. The N = 2 GV table and its cyclic images; higher genus vanishes.
inline Result gv_table(const Options& opt) {
  const auto cfg = ConfigSpec::trivalent({2, 2, 2}, 9, {2, 1, 2, 1, 2, 1});
  detail::Tally t;
  GvTable table;
  try {
    table = gv_extract(free_energy(z_trivalent(cfg, Flavor::math, opt.jobs)), 3);
  } catch (const GvIntegralityError& e) {
    t.check(false, e.what());
    return t.result("");
  }
  const std::vector<std::pair<std::string, int>> expected{
      {"1,1|1,1|1,1", -1}, {"2,1|1,1|1,1", 1}, {"1,0|2,1|2,1", -2}, {"1,1|2,1|2,1", -2}, {"2,1|2,1|2,1", 4}};
  for (const auto& [text, n0] : expected) {
    DegreeVector d = DegreeVector::parse(text);
    for (int r = 0; r < 3; ++r) {
      const Exponent e = d.to_exponent(cfg.edges());
      const std::string name = d.str(cfg.lengths);
      t.check(table.at(e, 0) == n0, name + " n0 = " + table.at(e, 0).get_str());
      for (int g = 1; g <= 3; ++g) t.check(table.at(e, g) == 0, name + " g = " + std::to_string(g));
      DegreeVector next;
      for (const auto& [k, v] : d.d) next.d[{k.first % 3 + 1, k.second}] = v;
      d = next;
    }
  }
  return t.result("n0 = -1, 1, -2, -2, 4 on all 15 classes, n1..n3 = 0");
}

/// 4. The chain transfer-matrix sum equals exp(F^2_N).
inline Result chain_equivalence(const Options&) {
  detail::Tally t;
  for (int N = 2; N <= 4; ++N) {
    const auto cfg = ConfigSpec::chain(N, 3);
    t.check(z_chain_direct(cfg) == series_exp(f2(cfg)), "N = " + std::to_string(N));
  }
  return t.result("N = 2, 3, 4 at D = 3");
}

/// 5. Cremona reduction of trivalent and chain classes matches the super-rigid
/// dichotomy and the invariants read off the ftcy free energies.
inline Result cremona_reduction(const Options& opt) {
  detail::Tally t;
  int trivalent = 0, chains = 0;
  {
    const auto cfg = ConfigSpec::trivalent({2, 2, 2}, 9);
    const auto fcfg = ConfigSpec::trivalent({2, 2, 2}, 9, {1, 2, 1, 2, 1, 2});
    const QSeries F = free_energy(z_trivalent(fcfg, Flavor::math, opt.jobs));
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) {
          DegreeVector deg;
          deg.d = {{{1, 1}, 1}, {{2, 1}, 1}, {{3, 1}, 1}};
          if (a) deg.d[{1, 2}] = a;
          if (b) deg.d[{2, 2}] = b;
          if (c) deg.d[{3, 2}] = c;
          const std::string name = deg.str(cfg.lengths);
          const auto out = reduce(class_of_degrees(cfg, deg));
          const bool rigid = a <= 1 && b <= 1 && c <= 1;
          t.check(out.label() == (rigid ? "SuperRigid(1)" : "Zero"), name + " reduced to " + out.label());
          if (out.tag == ReductionTag::irreducible) continue;
          std::vector<BigRational> expected(3, 0);
          if (rigid) expected = {c_g(0), c_g(1), c_g(2)};
          t.check(local_invariants(out, 2) == expected, name + " local invariants");
          t.check(gw_invariants(F, deg.to_exponent(fcfg.edges()), 2) == expected, name + " ftcy invariants");
          ++trivalent;
        }
  }
  for (int N = 1; N <= 4; ++N) {
    const auto chain = ConfigSpec::chain(N, 3 * N);
    std::vector<int> caps(static_cast<std::size_t>(N), 3);
    caps.insert(caps.end(), {0, 0});
    const auto fcfg = ConfigSpec::trivalent({N, 1, 1}, 3 * N, caps);
    const QSeries F = free_energy(z_trivalent(fcfg, Flavor::math, opt.jobs));
    std::vector<int> v(static_cast<std::size_t>(N), 0);
    v[0] = 1;
    while (true) {
      DegreeVector deg;
      for (int j = 1; j <= N; ++j)
        if (v[static_cast<std::size_t>(j - 1)]) deg.d[{1, j}] = v[static_cast<std::size_t>(j - 1)];
      std::size_t k = 0;
      while (k < v.size() && v[k] == v[0]) ++k;
      bool step = true;
      for (std::size_t i = k; i < v.size(); ++i) step = step && v[i] == 0;
      const std::string name = deg.str(chain.lengths);
      const auto out = reduce(class_of_degrees(chain, deg));
      t.check(out.label() == (step ? "SuperRigid(" + std::to_string(v[0]) + ")" : "Zero"), name + " reduced to " + out.label());
      if (out.tag != ReductionTag::irreducible) {
        std::vector<BigRational> expected(3, 0);
        if (step)
          for (int g = 0; g <= 2; ++g) expected[static_cast<std::size_t>(g)] = c_g(g) * rational_pow(BigRational(v[0]), 2 * g - 3);
        t.check(local_invariants(out, 2) == expected, name + " local invariants");
        t.check(gw_invariants(F, deg.to_exponent(fcfg.edges()), 2) == expected, name + " ftcy invariants");
      }
      ++chains;
      std::size_t i = v.size();
      while (i > 0 && v[i - 1] == 3) v[--i] = 0;
      if (i == 0) break;
      ++v[i - 1];
    }
  }
  return t.result(std::to_string(trivalent) + " trivalent and " + std::to_string(chains) + " chain classes, g <= 2");
}

/// 6. C_g against the sine series and the multiple-cover expansion.
inline Result cg_consistency(const Options&) {
  const int G = 6;
  std::vector<BigRational> sinc(G + 1);
  for (int k = 0; k <= G; ++k) {
    const BigRational term = BigRational(1) / (BigRational(int_pow(4, static_cast<unsigned>(k))) * BigRational(factorial(2 * k + 1)));
    sinc[static_cast<std::size_t>(k)] = k % 2 == 0 ? term : BigRational(-term);
  }
  const auto sq = detail::series_square(detail::series_inverse(sinc));
  detail::Tally t;
  for (int g = 0; g <= G; ++g) t.check(c_g(g) == sq[static_cast<std::size_t>(g)], "sine series g = " + std::to_string(g));
  for (int n = 1; n <= 4; ++n) {
    const HalfLaurent b = bracket(n);
    const auto e = expand_genus(QRational(HalfLaurent(ratio(-1, n)), b * b), G);
    for (int g = 0; g <= G; ++g)
      t.check(e.invariant(g) * rational_pow(BigRational(n), 3 - 2 * g) == c_g(g),
              "n = " + std::to_string(n) + " g = " + std::to_string(g));
  }
  return t.result("g <= 6, both routes, n <= 4");
}

/// 7. Coherent-state pairing at D = 3 on ten seeded inputs.
inline Result coherent_pairing(const Options&) {
  const int D = 3;
  const std::vector<EdgeLabel> edges{{1, 1}, {2, 1}};
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), sh(-2, 2);
  detail::Tally t;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<QSeries> a, b;
    for (int n = 1; n <= D; ++n) {
      QSeries sa(edges, Truncation{D, {}}), sb(edges, Truncation{D, {}});
      Exponent ea{}, eb{};
      ea[0] = static_cast<std::uint8_t>(n);
      eb[1] = static_cast<std::uint8_t>(n);
      sa.add_term(ea, QRational(HalfLaurent::monomial(sh(rng), ratio(num(rng), den(rng)))));
      sb.add_term(eb, QRational(HalfLaurent(ratio(num(rng), den(rng))), bracket(n)));
      a.push_back(sa);
      b.push_back(sb);
    }
    const auto r = coherent_pairing_check(a, b, D);
    t.check(r.lhs == r.rhs, "trial " + std::to_string(trial));
  }
  return t.result("10 inputs at D = 3");
}

/// 8. Property suites.
inline Result properties(const Options& opt) {
  detail::Tally t;
  for (int n = 0; n <= 6; ++n) {
    const auto& ps = enumerate(n);
    for (const auto& lam : ps)
      for (const auto& mu : ps) {
        BigRational s = 0;
        for (const auto& nu : ps) s += ratio(character(lam, nu) * character(mu, nu), z_factor(nu));
        t.check(s == (lam == mu ? 1 : 0), "orthogonality " + lam.str() + " " + mu.str());
      }
  }
  for (int w = 0; w <= 6; ++w)
    for (const auto& rho : enumerate(w))
      for (int a = 0; a <= w; ++a)
        for (const auto& mu : enumerate(a))
          for (const auto& nu : enumerate(w - a)) {
            const long c = lr_coefficient(mu, nu, rho);
            t.check(c == lr_coefficient(nu, mu, rho), "LR symmetry " + mu.str() + " " + nu.str() + " " + rho.str());
            t.check(c == lr_coefficient(transpose(mu), transpose(nu), transpose(rho)), "LR transpose " + rho.str());
          }
  for (int n = 0; n <= 8; ++n)
    for (const auto& mu : enumerate(n)) {
      t.check(w_mu(mu) == detail::hook_closed_form(mu), "hook form " + mu.str());
      t.check(w_mu(transpose(mu)) == QRational(HalfLaurent::monomial(-kappa(mu))) * w_mu(mu), "qdimtrans " + mu.str());
    }
  const auto triples = triples_up_to_weight(6);
  const auto cyclic = parallel_map(triples, opt.jobs, [](const PartitionTriple& p) {
    return w_three_physical(p) == w_three_physical(p.rotated()) && w_three_math(p) == w_three_math(p.rotated()) ? 1 : 0;
  });
  for (std::size_t i = 0; i < triples.size(); ++i) t.check(cyclic[i] == 1, "cyclic " + triples[i].str());
  for (int n = 0; n <= 4; ++n)
    for (const auto& nu : enumerate(n))
      for (const auto& mu : enumerate(n))
        t.check(phi(nu, mu, 0) == (nu == mu ? QRational(ratio(1, z_factor(mu))) : QRational()), "phi " + nu.str() + " " + mu.str());
  {
    const auto cfg = ConfigSpec::trivalent({2, 2, 2}, 3);
    t.check(free_energy(z_trivalent(cfg, Flavor::math, opt.jobs)) == free_energy_pieces(cfg).total(), "route equality");
  }
  {
    const auto cfg = ConfigSpec::trivalent({2, 3, 2}, 4);
    const QSeries F = free_energy(z_trivalent(cfg, Flavor::math, opt.jobs));
    for (const auto& [e, c] : F.terms())
      t.check(!violates_monotonicity(cfg, e), "monotone vanishing " + DegreeVector::from_exponent(cfg.edges(), e).str(cfg.lengths));
  }
  return t.result(std::to_string(t.checked) + " property checks");
}

inline std::vector<std::pair<std::string, std::function<Result(const Options&)>>> criteria() {
  return {{"vertex identity", vertex_identity},     {"closed vertex", closed_vertex},
          {"N=2 GV table", gv_table},               {"chain equivalence", chain_equivalence},
          {"Cremona reduction", cremona_reduction}, {"C_g consistency", cg_consistency},
          {"coherent-state pairing", coherent_pairing}, {"property suites", properties}};
}

/// Runs every criterion; exceptions count as failures.
inline std::vector<Result> run_all(const Options& opt, const std::function<void(const Result&)>& on_result = {}) {
  std::vector<Result> out;
  int id = 0;
  for (const auto& [name, fn] : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = fn(opt);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = ++id;
    r.name = name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    out.push_back(r);
  }
  return out;
}

inline std::string format(const Result& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << " (" << r.seconds << " s)";
  return s.str();
}

}  // namespace vertexcalc::acceptance
