#pragma once

/**
 * @file vertex.hpp
 * @brief Two- and three-leg vertex amplitudes, framed amplitudes, connected
 * amplitudes, and the coherent-state pairing identity.
 *
 * Exponents of q are written in x = q^{1/2}: q^{kappa/2} = x^{kappa}.
 * Internal sums run on BracketFraction; public values are canonical QRational.
 */

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vertexcalc/genus.hpp"
#include "vertexcalc/memo.hpp"
#include "vertexcalc/novikov_series.hpp"
#include "vertexcalc/symfunc.hpp"

namespace vertexcalc {

enum class Flavor { physical, math };

inline std::string to_string(Flavor f) { return f == Flavor::physical ? "physical" : "math"; }

inline Flavor parse_flavor(std::string_view s) {
  if (s == "physical") return Flavor::physical;
  if (s == "math") return Flavor::math;
  throw DomainError("unknown vertex flavor '" + std::string(s) + "' (expected physical or math)");
}

// ---------------------------------------------------------------------------
// Two-leg vertex

/// W_{mu nu} = x^{kappa_mu + kappa_nu} sum_lambda W_{mu^t/lambda} W_{nu^t/lambda}.
inline BracketFraction w_two_fraction(const Partition& mu, const Partition& nu) {
  static detail::Memo<std::pair<Partition, Partition>, BracketFraction> memo;
  // symmetric in (mu, nu)
  auto key = mu < nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
  return memo.get_or_compute(key, [&] {
    const Partition mt = transpose(mu), nt = transpose(nu);
    BracketFraction total;
    for (int k = 0; k <= std::min(mt.weight(), nt.weight()); ++k)
      for (const auto& lam : enumerate(k)) {
        if (!contains(mt, lam) || !contains(nt, lam)) continue;
        total += w_skew_fraction(mt, lam) * w_skew_fraction(nt, lam);
      }
    total = total.shifted(kappa(mu) + kappa(nu));
    total.reduce();
    return total;
  });
}

inline QRational w_two(const Partition& mu, const Partition& nu) { return w_two_fraction(mu, nu).to_qrational(); }

// ---------------------------------------------------------------------------
// Three-leg vertex, both flavors

inline BracketFraction compute_w_three_physical(const PartitionTriple& t) {
  const Partition& m1 = t[0];
  const Partition& m2 = t[1];
  const Partition m2t = transpose(m2);
  const Partition m3t = transpose(t[2]);
  BracketFraction total;
  for (int k = 0; k <= std::min(m1.weight(), m3t.weight()); ++k)
    for (const auto& rho : enumerate(k)) {
      if (!contains(m1, rho) || !contains(m3t, rho)) continue;
      BracketFraction a, b;
      for (const auto& [r1, c1] : lr_complements(m1, rho)) a += w_two_fraction(m2t, r1) * BigRational(c1);
      for (const auto& [r3, c3] : lr_complements(m3t, rho)) b += w_two_fraction(m2, r3) * BigRational(c3);
      total += a * b;
    }
  total = total.shifted(kappa(m2) + kappa(t[2]));
  total /= w_mu(m2);
  return total;
}

/// sum over |sigma| = |eta1| of chi_{eta1}(sigma) chi_{eta3}(2 sigma) / z_sigma; zero unless |eta3| = 2|eta1|.
inline BigRational pair_sum(const Partition& eta1, const Partition& eta3) {
  if (eta3.weight() != 2 * eta1.weight()) return 0;
  BigRational s = 0;
  for (const auto& sigma : enumerate(eta1.weight()))
    s += ratio(character(eta1, sigma) * character(eta3, doubled(sigma)), z_factor(sigma));
  return s;
}

inline BracketFraction compute_w_three_math(const PartitionTriple& t) {
  const Partition& m1 = t[0];
  const Partition& m2 = t[1];
  const Partition& m3 = t[2];
  BracketFraction total;
  for (int a = 0; a <= m1.weight(); ++a) {
    // eta1 has weight |m1| - a, eta3 must have twice that
    const int b = m3.weight() - 2 * (m1.weight() - a);
    if (b < 0) continue;
    for (const auto& nu1 : enumerate(a)) {
      if (!contains(m1, nu1)) continue;
      const auto eta1s = lr_complements(m1, nu1);  // lambda = (eta1)^t
      const Partition nu1t = transpose(nu1);
      std::vector<std::pair<Partition, long>> plus;
      for (const auto& np : enumerate(a + m2.weight())) {
        const long c = lr_coefficient(nu1t, m2, np);
        if (c != 0) plus.emplace_back(np, c);
      }
      for (const auto& nu3 : enumerate(b)) {
        const Partition nu3t = transpose(nu3);
        if (!contains(m3, nu3t)) continue;
        BigRational pairing = 0;
        for (const auto& [lam1, c1] : eta1s) {
          const Partition eta1 = transpose(lam1);
          for (const auto& [eta3, c3] : lr_complements(m3, nu3t)) pairing += c1 * c3 * pair_sum(eta1, eta3);
        }
        if (pairing == 0) continue;
        BracketFraction s;
        for (const auto& [np, c] : plus) s += w_two_fraction(np, nu3).shifted(-2 * kappa(np)) * BigRational(c);
        total += s.shifted(-kappa(nu3) / 2) * pairing;
      }
    }
  }
  total = total.shifted(-kappa(m1) + 2 * kappa(m2) + kappa(m3) / 2);
  total.reduce();
  return total;
}

struct AmplitudeKey {
  Flavor flavor = Flavor::physical;
  PartitionTriple triple;

  std::string str() const { return to_string(flavor) + ":" + triple.str(); }
  friend auto operator<=>(const AmplitudeKey&, const AmplitudeKey&) = default;
  friend bool operator==(const AmplitudeKey&, const AmplitudeKey&) = default;
};

/// Process-wide amplitude memo. An optional listener sees every freshly
/// computed value (used for the persistent cache).
class AmplitudeStore {
 public:
  using Listener = std::function<void(const AmplitudeKey&, const QRational&)>;

  BracketFraction get(const AmplitudeKey& key) {
    if (auto hit = memo_.find(key)) return *hit;
    BracketFraction v = key.flavor == Flavor::physical ? compute_w_three_physical(key.triple)
                                                       : compute_w_three_math(key.triple);
    memo_.insert(key, v);
    Listener l;
    {
      std::lock_guard lock(listener_mu_);
      l = listener_;
    }
    if (l) l(key, v.to_qrational());
    return v;
  }

  /// Seeds the memo with a known value (e.g. from disk).
  void preload(const AmplitudeKey& key, const QRational& value) {
    BracketFraction f;
    if (!BracketFraction::from_qrational(value, f))
      throw DomainError("amplitude denominator is not a product of brackets: " + to_string(value));
    memo_.insert(key, f);
  }

  void set_listener(Listener l) {
    std::lock_guard lock(listener_mu_);
    listener_ = std::move(l);
  }

  std::size_t size() const { return memo_.size(); }

 private:
  detail::Memo<AmplitudeKey, BracketFraction> memo_;
  std::mutex listener_mu_;
  Listener listener_;
};

inline AmplitudeStore& amplitude_store() {
  static AmplitudeStore store;
  return store;
}

inline BracketFraction amplitude_fraction(Flavor f, const PartitionTriple& t) { return amplitude_store().get({f, t}); }
inline QRational amplitude(Flavor f, const PartitionTriple& t) { return amplitude_fraction(f, t).to_qrational(); }

/// Topological vertex W_{mu1 mu2 mu3}.
inline QRational w_three_physical(const PartitionTriple& t) { return amplitude(Flavor::physical, t); }
/// Mathematical vertex ~W_{mu1 mu2 mu3}.
inline QRational w_three_math(const PartitionTriple& t) { return amplitude(Flavor::math, t); }

// ---------------------------------------------------------------------------
// Framing

/// sum_eta x^{kappa_eta a} chi_eta(nu) chi_eta(mu) / (z_nu z_mu).
inline QRational phi(const Partition& nu, const Partition& mu, int a) {
  if (nu.weight() != mu.weight()) return QRational();
  std::map<int, BigRational> terms;
  const BigInt z = z_factor(nu) * z_factor(mu);
  for (const auto& eta : enumerate(nu.weight())) {
    const BigInt c = character(eta, nu) * character(eta, mu);
    if (c != 0) terms[kappa(eta) * a] += ratio(c, z);
  }
  return QRational(HalfLaurent::from_terms(terms));
}

/// Real disconnected framed amplitude
/// sum_{|nu^i| = |mu^i|} prod_i x^{kappa_{nu^i} n_i} chi_{nu^i}(mu^i)/z_{mu^i} ~W_nu.
inline BracketFraction framed_amplitude_fraction(const PartitionTriple& mu, const std::array<int, 3>& n) {
  std::array<std::vector<std::pair<Partition, BracketFraction>>, 3> legs;
  for (std::size_t i = 0; i < 3; ++i) {
    const BigInt z = z_factor(mu[i]);
    for (const auto& nu : enumerate(mu[i].weight())) {
      const BigInt chi = character(nu, mu[i]);
      if (chi == 0) continue;
      legs[i].emplace_back(nu, BracketFraction(HalfLaurent::monomial(kappa(nu) * n[i], ratio(chi, z))));
    }
  }
  BracketFraction total;
  for (const auto& [a, wa] : legs[0])
    for (const auto& [b, wb] : legs[1])
      for (const auto& [c, wc] : legs[2]) total += wa * wb * wc * amplitude_fraction(Flavor::math, {a, b, c});
  total.reduce();
  return total;
}

inline QRational framed_amplitude(const PartitionTriple& mu, const std::array<int, 3>& n) {
  return framed_amplitude_fraction(mu, n).to_qrational();
}

// ---------------------------------------------------------------------------
// Triple-partition monoid algebra

/// sum_mu c_mu p^1_{mu^1} p^2_{mu^2} p^3_{mu^3}, truncated at total weight `cutoff`.
template <class Coeff>
class TripleSeries {
 public:
  using Terms = std::map<PartitionTriple, Coeff>;

  explicit TripleSeries(int cutoff = 0) : cutoff_(cutoff) {
    if (cutoff < 0) throw DomainError("negative cutoff");
  }

  int cutoff() const { return cutoff_; }
  const Terms& terms() const { return terms_; }

  Coeff coeff(const PartitionTriple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(const PartitionTriple& t, const Coeff& c) {
    if (t.weight() > cutoff_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend TripleSeries operator*(const TripleSeries& a, const TripleSeries& b) {
    if (a.cutoff_ != b.cutoff_) throw DomainError("triple series with different cutoffs");
    TripleSeries r(a.cutoff_);
    for (const auto& [ta, ca] : a.terms_)
      for (const auto& [tb, cb] : b.terms_)
        if (ta.weight() + tb.weight() <= a.cutoff_) r.add_term(product(ta, tb), ca * cb);
    return r;
  }

  friend bool operator==(const TripleSeries& a, const TripleSeries& b) {
    return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

  /// The monoid product: legwise multiset union.
  static PartitionTriple product(const PartitionTriple& a, const PartitionTriple& b) {
    return {merged(a[0], b[0]), merged(a[1], b[1]), merged(a[2], b[2])};
  }

  std::vector<std::vector<std::pair<PartitionTriple, Coeff>>> graded() const {
    std::vector<std::vector<std::pair<PartitionTriple, Coeff>>> g(static_cast<std::size_t>(cutoff_ + 1));
    for (const auto& [t, c] : terms_) g[static_cast<std::size_t>(t.weight())].emplace_back(t, c);
    return g;
  }

 private:
  int cutoff_;
  Terms terms_;
};

using TripleIndexedSeries = TripleSeries<QRational>;

namespace detail {

template <class Coeff>
void accumulate_triples(std::map<PartitionTriple, Coeff>& acc, const std::vector<std::pair<PartitionTriple, Coeff>>& a,
                        const std::vector<std::pair<PartitionTriple, Coeff>>& b, const BigRational& w) {
  for (const auto& [ta, ca] : a) {
    const Coeff cw = ca * w;
    for (const auto& [tb, cb] : b) {
      auto key = TripleSeries<Coeff>::product(ta, tb);
      auto [it, inserted] = acc.try_emplace(key, cw * cb);
      if (!inserted) it->second += cw * cb;
    }
  }
}

}  // namespace detail

/// exp in the monoid algebra; f must have no empty-triple term.
template <class Coeff>
TripleSeries<Coeff> triple_exp(const TripleSeries<Coeff>& f) {
  if (!f.coeff(PartitionTriple()).is_zero()) throw DomainError("triple_exp requires a zero empty-triple term");
  const int D = f.cutoff();
  auto fg = f.graded();
  std::vector<std::vector<std::pair<PartitionTriple, Coeff>>> eg(static_cast<std::size_t>(D + 1));
  eg[0].emplace_back(PartitionTriple(), Coeff(1));
  for (int n = 1; n <= D; ++n) {
    std::map<PartitionTriple, Coeff> acc;
    for (int k = 1; k <= n; ++k)
      detail::accumulate_triples(acc, fg[static_cast<std::size_t>(k)], eg[static_cast<std::size_t>(n - k)], ratio(k, n));
    for (auto& [t, c] : acc)
      if (!c.is_zero()) eg[static_cast<std::size_t>(n)].emplace_back(t, c);
  }
  TripleSeries<Coeff> r(D);
  for (const auto& part : eg)
    for (const auto& [t, c] : part) r.add_term(t, c);
  return r;
}

/// Connected amplitudes: log in the monoid algebra; the empty-triple entry must be 1.
template <class Coeff>
TripleSeries<Coeff> connected(const TripleSeries<Coeff>& table) {
  if (!(table.coeff(PartitionTriple()) == Coeff(1))) throw DomainError("connected: the empty-triple amplitude must be 1");
  const int D = table.cutoff();
  auto zg = table.graded();
  std::vector<std::vector<std::pair<PartitionTriple, Coeff>>> lg(static_cast<std::size_t>(D + 1));
  for (int n = 1; n <= D; ++n) {
    std::map<PartitionTriple, Coeff> acc;
    for (const auto& [t, c] : zg[static_cast<std::size_t>(n)]) acc.emplace(t, c);
    for (int k = 1; k < n; ++k)
      detail::accumulate_triples(acc, lg[static_cast<std::size_t>(k)], zg[static_cast<std::size_t>(n - k)], ratio(-k, n));
    for (auto& [t, c] : acc)
      if (!c.is_zero()) lg[static_cast<std::size_t>(n)].emplace_back(t, c);
  }
  TripleSeries<Coeff> r(D);
  for (const auto& part : lg)
    for (const auto& [t, c] : part) r.add_term(t, c);
  return r;
}

/// Disconnected framed amplitudes for every triple of total weight <= cutoff.
inline TripleIndexedSeries framed_table(int cutoff, const std::array<int, 3>& n) {
  TripleIndexedSeries t(cutoff);
  for (const auto& mu : triples_up_to_weight(cutoff)) t.add_term(mu, framed_amplitude(mu, n));
  return t;
}

// ---------------------------------------------------------------------------
// Coherent-state pairing

struct CoherentPairing {
  QSeries lhs;
  QSeries rhs;
};

/// Both sides of
///   sum_{mu,nu} x^{-kappa_mu - kappa_nu} W_{mu nu} s_mu(t) s_nu(tbar)
///     = exp(sum_n (-1)^{n+1} (t_n + tbar_n)/(n [n]) + t_n tbar_n / n),
/// truncated at total degree D. t[n-1] = t_n; each t_n must have order >= n.
inline CoherentPairing coherent_pairing_check(const std::vector<QSeries>& t, const std::vector<QSeries>& tbar, int D) {
  if (static_cast<int>(t.size()) < D || static_cast<int>(tbar.size()) < D)
    throw DomainError("coherent_pairing_check: power sums must be given up to n = D");
  const QSeries& shape = t.front();
  const QSeries one = QSeries::constant(shape.edges(), shape.truncation(), QRational(1));
  if (one.max_total_degree() != D) throw DomainError("coherent_pairing_check: series truncation must equal D");

  std::vector<std::pair<Partition, QSeries>> s, sbar;
  for (int k = 0; k <= D; ++k) {
    const auto sk = schur_all_from_power_sums(k, t, one);
    const auto sbk = schur_all_from_power_sums(k, tbar, one);
    for (std::size_t i = 0; i < sk.size(); ++i) {
      s.emplace_back(enumerate(k)[i], sk[i]);
      sbar.emplace_back(enumerate(k)[i], sbk[i]);
    }
  }
  QSeries lhs(shape.edges(), shape.truncation());
  for (const auto& [mu, smu] : s) {
    if (smu.is_zero()) continue;
    for (const auto& [nu, snu] : sbar) {
      if (snu.is_zero()) continue;
      const QRational w = w_two_fraction(mu, nu).shifted(-kappa(mu) - kappa(nu)).to_qrational();
      lhs += (smu * snu) * w;
    }
  }

  QSeries f(shape.edges(), shape.truncation());
  for (int n = 1; n <= D; ++n) {
    const auto un = static_cast<std::size_t>(n - 1);
    const QRational c1(HalfLaurent(n % 2 == 1 ? ratio(1, n) : ratio(-1, n)), bracket(n));
    f += (t[un] + tbar[un]) * c1;
    f += (t[un] * tbar[un]) * QRational(ratio(1, n));
  }
  return {lhs, series_exp(f)};
}

}  // namespace vertexcalc
