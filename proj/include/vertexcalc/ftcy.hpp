#pragma once

/**
 * @file ftcy.hpp
 * @brief Partition functions and free energies of the closed vertex, chains,
 * two-leg and minimal trivalent configurations.
 *
 * Every quantity has two routes: a closed form or operator-formalism
 * simplification, and the raw vertex gluing sum. Work happens over
 * FastSeries (bracket-factored coefficients); results are published as QSeries.
 *
 * Truncation: a vertex term indexed by mu has Novikov weight >= sum |mu^i|, and
 * e^{-n(...)} has weight >= n, so every sum stops at the truncation degree.
 */

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "vertexcalc/novikov_series.hpp"
#include "vertexcalc/parallel.hpp"
#include "vertexcalc/vertex.hpp"

namespace vertexcalc {

enum class Shape { closed_vertex, chain, two_leg, trivalent };

inline std::string to_string(Shape s) {
  switch (s) {
    case Shape::closed_vertex: return "closed-vertex";
    case Shape::chain: return "chain";
    case Shape::two_leg: return "two-leg";
    case Shape::trivalent: return "trivalent";
  }
  return "?";
}

inline Shape parse_shape(std::string_view s) {
  if (s == "closed-vertex" || s == "closed_vertex") return Shape::closed_vertex;
  if (s == "chain") return Shape::chain;
  if (s == "two-leg" || s == "two_leg") return Shape::two_leg;
  if (s == "trivalent") return Shape::trivalent;
  throw DomainError("unknown configuration '" + std::string(s) + "'");
}

/// Configuration plus truncation. Legs absent from the shape have length 0.
struct ConfigSpec {
  Shape shape = Shape::trivalent;
  std::array<int, 3> lengths{1, 1, 1};
  int max_total_degree = 0;
  std::vector<int> caps;  // per edge in edges() order, negative = uncapped; empty = no caps

  static ConfigSpec closed_vertex(int D) { return make(Shape::closed_vertex, {1, 1, 1}, D); }
  static ConfigSpec chain(int N, int D) { return make(Shape::chain, {N, 0, 0}, D); }
  static ConfigSpec two_leg(int N1, int N2, int D) { return make(Shape::two_leg, {N1, N2, 0}, D); }
  static ConfigSpec trivalent(std::array<int, 3> lengths, int D, std::vector<int> caps = {}) {
    ConfigSpec c = make(Shape::trivalent, lengths, D);
    c.caps = std::move(caps);
    c.validate();
    return c;
  }

  int length(int leg) const { return lengths[static_cast<std::size_t>(leg - 1)]; }
  bool has_leg(int leg) const { return length(leg) > 0; }

  std::vector<EdgeLabel> edges() const {
    std::vector<EdgeLabel> e;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= length(i); ++j) e.push_back({i, j});
    return e;
  }

  int position(int leg, int j) const {
    if (leg < 1 || leg > 3 || j < 1 || j > length(leg)) return -1;
    int p = 0;
    for (int i = 1; i < leg; ++i) p += length(i);
    return p + j - 1;
  }

  /// Largest admissible exponent on edge (leg, j).
  int cap(int leg, int j) const {
    const int p = position(leg, j);
    if (p < 0) return 0;
    if (caps.empty() || caps[static_cast<std::size_t>(p)] < 0) return max_total_degree;
    return std::min(caps[static_cast<std::size_t>(p)], max_total_degree);
  }

  Truncation truncation() const { return Truncation{max_total_degree, caps}; }

  void validate() const {
    if (max_total_degree < 0) throw DomainError("negative truncation degree");
    for (int i = 1; i <= 3; ++i)
      if (length(i) < 0) throw DomainError("negative leg length");
    switch (shape) {
      case Shape::closed_vertex:
        if (lengths != std::array<int, 3>{1, 1, 1}) throw DomainError("closed vertex has lengths (1,1,1)");
        break;
      case Shape::chain:
        if (length(1) < 1 || length(2) != 0 || length(3) != 0) throw DomainError("chain uses leg 1 only");
        break;
      case Shape::two_leg:
        if (length(1) < 1 || length(2) < 1 || length(3) != 0) throw DomainError("two-leg uses legs 1 and 2");
        break;
      case Shape::trivalent:
        if (length(1) < 1 || length(2) < 1 || length(3) < 1) throw DomainError("trivalent lengths must be >= 1");
        break;
    }
    if (edges().size() > kMaxEdges) throw DomainError("too many edges");
    if (!caps.empty() && caps.size() != edges().size()) throw DomainError("caps must list one entry per edge");
  }

 private:
  static ConfigSpec make(Shape s, std::array<int, 3> l, int D) {
    ConfigSpec c;
    c.shape = s;
    c.lengths = l;
    c.max_total_degree = D;
    c.validate();
    return c;
  }
};

/// Effective multidegree; absent edges are 0.
struct DegreeVector {
  std::map<std::pair<int, int>, int> d;

  int at(int leg, int j) const {
    auto it = d.find({leg, j});
    return it == d.end() ? 0 : it->second;
  }
  int total() const {
    int s = 0;
    for (const auto& [k, v] : d) s += v;
    return s;
  }

  static DegreeVector from_exponent(const std::vector<EdgeLabel>& edges, const Exponent& e) {
    DegreeVector v;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (e[i] != 0) v.d[{edges[i].leg, edges[i].index}] = e[i];
    return v;
  }

  Exponent to_exponent(const std::vector<EdgeLabel>& edges) const {
    Exponent e{};
    for (const auto& [k, v] : d) {
      if (v < 0) throw DomainError("degree vectors are effective");
      if (v == 0) continue;
      std::size_t i = 0;
      while (i < edges.size() && !(edges[i].leg == k.first && edges[i].index == k.second)) ++i;
      if (i == edges.size())
        throw DomainError("degree on edge " + std::to_string(k.first) + "," + std::to_string(k.second) + " outside the configuration");
      if (v > 255) throw DomainError("degree too large");
      e[i] = static_cast<std::uint8_t>(v);
    }
    return e;
  }

  /// Per-leg lists "d11,d12|d21|..." up to the given lengths.
  std::string str(const std::array<int, 3>& lengths) const {
    std::string s;
    for (int i = 1; i <= 3; ++i) {
      if (i > 1) s += '|';
      for (int j = 1; j <= lengths[static_cast<std::size_t>(i - 1)]; ++j) {
        if (j > 1) s += ',';
        s += std::to_string(at(i, j));
      }
    }
    return s;
  }

  /// Parses the str() format; empty legs are allowed.
  static DegreeVector parse(std::string_view text) {
    DegreeVector v;
    int leg = 1, j = 1;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      int x = 0;
      try {
        std::size_t used = 0;
        x = std::stoi(cur, &used);
        if (used != cur.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw DomainError("bad degree '" + cur + "'");
      }
      if (x < 0) throw DomainError("degree vectors are effective");
      if (x > 0) v.d[{leg, j}] = x;
      cur.clear();
    };
    for (char c : text) {
      if (c == ',') {
        flush();
        ++j;
      } else if (c == '|') {
        flush();
        if (++leg > 3) throw DomainError("at most three legs");
        j = 1;
      } else if (c != ' ') {
        cur += c;
      }
    }
    flush();
    return v;
  }
};

namespace detail {

inline FastSeries zero_series(const ConfigSpec& cfg) { return FastSeries(cfg.edges(), cfg.truncation()); }
inline FastSeries one_series(const ConfigSpec& cfg) {
  return FastSeries::constant(cfg.edges(), cfg.truncation(), BracketFraction(1));
}

/// prod_{j=j1}^{j2} Q_{leg,j}^n added onto e.
inline void add_run(const ConfigSpec& cfg, Exponent& e, int leg, int j1, int j2, int n) {
  for (int j = j1; j <= j2; ++j) {
    const int p = cfg.position(leg, j);
    if (p < 0) throw DomainError("edge outside the configuration");
    e[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(e[static_cast<std::size_t>(p)] + n);
  }
}

inline Exponent run(const ConfigSpec& cfg, int leg, int j1, int j2, int n) {
  Exponent e{};
  add_run(cfg, e, leg, j1, j2, n);
  return e;
}

/// c / (n [n]^2).
inline BracketFraction multicover(int n, int sign) {
  return BracketFraction::inverse_bracket(n, 2) * ratio(sign, n);
}

inline bool fits(int n, int D) { return n <= std::min(D, 255); }

inline QSeries reduced(const FastSeries& s) { return to_qseries(s); }

inline FastSeries to_fast(const QSeries& s) {
  return s.map_coefficients([](const QRational& v) {
    BracketFraction b;
    if (!BracketFraction::from_qrational(v, b)) throw DomainError("coefficient denominator is not a product of brackets");
    return b;
  });
}

inline void reduce_all(FastSeries& s) {
  s = s.map_coefficients([](const BracketFraction& c) {
    BracketFraction r = c;
    r.reduce();
    return r;
  });
}

/// Schur values s_lambda(p) for all |lambda| <= top, keyed by lambda.
inline std::map<Partition, FastSeries> schur_table(const std::vector<FastSeries>& p, int top, const FastSeries& one) {
  std::map<Partition, FastSeries> out;
  for (int k = 0; k <= top; ++k) {
    const auto vals = schur_all_from_power_sums(k, p, one);
    for (std::size_t i = 0; i < vals.size(); ++i) out.emplace(enumerate(k)[i], vals[i]);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Building blocks

/// Q_n = sum over nonempty S of (-1)^{|S|+1} prod_{i in S} Q_{i,1}^n.
inline QSeries q_n(int n, const ConfigSpec& cfg) {
  if (n < 1) throw DomainError("q_n requires n >= 1");
  for (int i = 1; i <= 3; ++i)
    if (!cfg.has_leg(i)) throw DomainError("q_n needs the three first edges");
  QSeries s(cfg.edges(), cfg.truncation());
  for (int mask = 1; mask < 8; ++mask) {
    Exponent e{};
    int bits = 0;
    for (int i = 1; i <= 3; ++i)
      if (mask & (1 << (i - 1))) {
        detail::add_run(cfg, e, i, 1, 1, n);
        ++bits;
      }
    s.add_term(e, QRational(bits % 2 == 1 ? 1 : -1));
  }
  return s;
}

namespace detail {

/// u^i_n = (1/[n]) (1 + sum_{k=2}^{N_i} Q_{i,2}^n ... Q_{i,k}^n).
inline FastSeries u_power_sum_fast(int leg, int n, const ConfigSpec& cfg) {
  FastSeries s = zero_series(cfg);
  const BracketFraction c = BracketFraction::inverse_bracket(n);
  s.add_term(Exponent{}, c);
  for (int k = 2; k <= cfg.length(leg); ++k) s.add_term(run(cfg, leg, 2, k, n), c);
  return s;
}

inline FastSeries f1_fast(const ConfigSpec& cfg, int leg) {
  FastSeries s = zero_series(cfg);
  for (int n = 1; fits(n, cfg.max_total_degree); ++n)
    for (int k = 1; k <= cfg.length(leg); ++k) s.add_term(run(cfg, leg, 1, k, n), multicover(n, -1));
  return s;
}

inline FastSeries f2_fast(const ConfigSpec& cfg, int leg) {
  FastSeries s = zero_series(cfg);
  for (int n = 1; fits(n, cfg.max_total_degree); ++n)
    for (int k1 = 2; k1 <= cfg.length(leg); ++k1)
      for (int k2 = k1; k2 <= cfg.length(leg); ++k2) s.add_term(run(cfg, leg, k1, k2, n), multicover(n, 1));
  return s;
}

inline FastSeries f5_fast(const ConfigSpec& cfg, int a, int b) {
  FastSeries s = zero_series(cfg);
  for (int n = 1; fits(n, cfg.max_total_degree); ++n)
    for (int k = 1; k <= cfg.length(b); ++k) {
      Exponent e = run(cfg, b, 1, k, n);
      add_run(cfg, e, a, 1, 1, n);
      s.add_term(e, multicover(n, 1));
    }
  return s;
}

}  // namespace detail

inline QSeries u_power_sum(int leg, int n, const ConfigSpec& cfg) {
  if (leg < 1 || leg > 3 || !cfg.has_leg(leg)) throw DomainError("u_power_sum: leg outside the configuration");
  if (n < 1) throw DomainError("u_power_sum requires n >= 1");
  return detail::reduced(detail::u_power_sum_fast(leg, n, cfg));
}

/// sum_n -1/(n[n]^2) sum_{k <= N} (Q_{leg,1} ... Q_{leg,k})^n.
inline QSeries f1(const ConfigSpec& cfg, int leg = 1) { return detail::reduced(detail::f1_fast(cfg, leg)); }

/// sum_n 1/(n[n]^2) sum_{2 <= k1 <= k2 <= N} (Q_{leg,k1} ... Q_{leg,k2})^n.
inline QSeries f2(const ConfigSpec& cfg, int leg = 1) { return detail::reduced(detail::f2_fast(cfg, leg)); }

/// sum_n 1/(n[n]^2) sum_{k <= N_b} Q_{a,1}^n (Q_{b,1} ... Q_{b,k})^n.
inline QSeries f5(const ConfigSpec& cfg, int a = 1, int b = 2) { return detail::reduced(detail::f5_fast(cfg, a, b)); }

/// Drops monomials on edges the target lacks and re-indexes onto its edge list.
inline QSeries restrict_to(const QSeries& s, const ConfigSpec& target) {
  const auto edges = target.edges();
  QSeries r(edges, target.truncation());
  for (const auto& [e, c] : s.terms()) {
    Exponent out{};
    bool keep = true;
    for (std::size_t i = 0; i < s.edges().size() && keep; ++i) {
      if (e[i] == 0) continue;
      const int p = target.position(s.edges()[i].leg, s.edges()[i].index);
      if (p < 0)
        keep = false;
      else
        out[static_cast<std::size_t>(p)] = e[i];
    }
    if (keep) r.add_term(out, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Partition functions

/// exp(sum_n Q_n / (-n [n]^2)).
inline QSeries z_closed_vertex(int D) {
  const ConfigSpec cfg = ConfigSpec::closed_vertex(D);
  FastSeries f = detail::zero_series(cfg);
  for (int n = 1; detail::fits(n, D); ++n) {
    const QSeries qn = q_n(n, cfg);
    for (const auto& [e, c] : qn.terms()) {
      BracketFraction b = detail::multicover(n, -1);
      b *= c.num().coeff(0);
      f.add_term(e, b);
    }
  }
  return detail::reduced(series_exp(f));
}

/// exp(sum_i F^2(t_i)) sum_mu V_mu prod_i (-1)^{|mu^i|} Q_{i,1}^{|mu^i|} s_{(mu^i)^t}(u^i),
/// V = W (physical) or ~W (math). Also accepts closed-vertex configurations.
inline QSeries z_trivalent(const ConfigSpec& cfg, Flavor flavor, int jobs = 1) {
  if (cfg.shape != Shape::trivalent && cfg.shape != Shape::closed_vertex)
    throw DomainError("z_trivalent needs a trivalent configuration");
  const FastSeries one = detail::one_series(cfg);
  std::array<std::map<Partition, FastSeries>, 3> legs;
  for (int i = 1; i <= 3; ++i) {
    const int top = cfg.cap(i, 1);
    std::vector<FastSeries> p;
    for (int n = 1; n <= top; ++n) p.push_back(detail::u_power_sum_fast(i, n, cfg));
    const auto s = detail::schur_table(p, top, one);
    for (const auto& [mu, smu] : s) {
      const int w = mu.weight();
      FastSeries mono = detail::zero_series(cfg);
      mono.add_term(detail::run(cfg, i, 1, 1, w), BracketFraction(w % 2 == 0 ? 1 : -1));
      FastSeries term = mono * s.at(transpose(mu));
      if (!term.is_zero()) legs[static_cast<std::size_t>(i - 1)].emplace(mu, std::move(term));
    }
  }
  std::vector<PartitionTriple> triples;
  for (const auto& t : triples_up_to_weight(cfg.max_total_degree)) {
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i) ok = legs[i].count(t[i]) > 0;
    if (ok) triples.push_back(t);
  }
  const auto terms = parallel_map(triples, jobs, [&](const PartitionTriple& t) {
    FastSeries s = legs[0].at(t[0]) * legs[1].at(t[1]);
    s = s * legs[2].at(t[2]);
    return s * amplitude_fraction(flavor, t);
  });
  FastSeries sum = detail::zero_series(cfg);
  for (const auto& s : terms) sum += s;
  FastSeries f2sum = detail::zero_series(cfg);
  for (int i = 1; i <= 3; ++i) f2sum += detail::f2_fast(cfg, i);
  FastSeries z = series_exp(f2sum) * sum;
  return detail::reduced(z);
}

/// Gluing sum over mu^2..mu^N of prod_{i=2}^{N+1} x^{-kappa_{mu^{i-1}}} W_{mu^{i-1} mu^i} x^{-kappa_{mu^i}} Q_{1,i}^{|mu^i|},
/// with mu^1 = mu^{N+1} = empty, evaluated as a transfer matrix along the chain.
inline QSeries z_chain_direct(const ConfigSpec& cfg) {
  if (cfg.shape != Shape::chain) throw DomainError("z_chain_direct needs a chain configuration");
  const int N = cfg.length(1);
  std::map<Partition, FastSeries> state;
  state.emplace(Partition(), detail::one_series(cfg));
  for (int i = 2; i <= N + 1; ++i) {
    std::vector<Partition> next;
    if (i <= N)
      next = enumerate_up_to(cfg.cap(1, i));
    else
      next = {Partition()};
    std::map<Partition, FastSeries> out;
    for (const auto& nu : next) {
      FastSeries acc = detail::zero_series(cfg);
      for (const auto& [mu, s] : state) {
        BracketFraction w = w_two_fraction(mu, nu).shifted(-kappa(mu) - kappa(nu));
        acc += s * w;
      }
      if (i <= N) {
        FastSeries mono = detail::zero_series(cfg);
        mono.add_term(detail::run(cfg, 1, i, i, nu.weight()), BracketFraction(1));
        acc = acc * mono;
      }
      if (!acc.is_zero()) out.emplace(nu, std::move(acc));
    }
    state = std::move(out);
  }
  auto it = state.find(Partition());
  return it == state.end() ? QSeries(cfg.edges(), cfg.truncation()) : detail::reduced(it->second);
}

inline QSeries z_chain_direct(int N, int D) { return z_chain_direct(ConfigSpec::chain(N, D)); }

/// Closed form of the chain: exp(F^2_N(t_1)).
inline QSeries z_chain_closed(const ConfigSpec& cfg) {
  return detail::reduced(series_exp(detail::f2_fast(cfg, 1)));
}

/// exp(F^1_{N2}(t_2) + F^2_{N1}(t_1) + F^2_{N2}(t_2)) sum_mu x^{-kappa_mu} (-1)^{|mu|} Q_{1,1}^{|mu|} s_mu(^u^2) s_mu(u^1),
/// ^u^2_n = (1/[n]) (1 - sum_{k=1}^{N2} (Q_{2,1} ... Q_{2,k})^n).
inline QSeries z_two_leg(const ConfigSpec& cfg) {
  if (cfg.shape != Shape::two_leg) throw DomainError("z_two_leg needs a two-leg configuration");
  const int top = cfg.cap(1, 1);
  const FastSeries one = detail::one_series(cfg);
  std::vector<FastSeries> u1, uhat;
  for (int n = 1; n <= top; ++n) {
    u1.push_back(detail::u_power_sum_fast(1, n, cfg));
    FastSeries h = detail::zero_series(cfg);
    const BracketFraction c = BracketFraction::inverse_bracket(n);
    h.add_term(Exponent{}, c);
    for (int k = 1; k <= cfg.length(2); ++k) h.add_term(detail::run(cfg, 2, 1, k, n), -c);
    uhat.push_back(std::move(h));
  }
  const auto s1 = detail::schur_table(u1, top, one);
  const auto s2 = detail::schur_table(uhat, top, one);
  FastSeries sum = detail::zero_series(cfg);
  for (const auto& [mu, a] : s1) {
    const int w = mu.weight();
    FastSeries mono = detail::zero_series(cfg);
    mono.add_term(detail::run(cfg, 1, 1, 1, w), BracketFraction(HalfLaurent::monomial(-kappa(mu), w % 2 == 0 ? 1 : -1)));
    sum += (mono * a) * s2.at(mu);
  }
  FastSeries f = detail::f1_fast(cfg, 2) + detail::f2_fast(cfg, 1) + detail::f2_fast(cfg, 2);
  return detail::reduced(series_exp(f) * sum);
}

/// Free energy log Z.
inline QSeries free_energy(const QSeries& z) { return detail::reduced(series_log(detail::to_fast(z))); }

// ---------------------------------------------------------------------------
// Free energy assembled from connected amplitudes

/// F = sum_i f1_i + sum_i f2_i + sum_{pairs} f3 + f4. The f1 entries are the
/// closed forms; f1_vertex holds the one-leg parts of the connected-amplitude
/// sum, which must agree with them.
struct FreeEnergyPieces {
  std::array<QSeries, 3> f1, f1_vertex, f2;
  std::map<std::pair<int, int>, QSeries> f3;
  QSeries f4;

  QSeries total() const {
    QSeries t = f4;
    for (std::size_t i = 0; i < 3; ++i) t += f1[i] + f2[i];
    for (const auto& [k, s] : f3) t += s;
    return t;
  }
};

/// sum over mu != empty of ~F_mu(0,0,0) prod_i (-1)^{l(mu^i)} Q_{i,1}^{|mu^i|} u^i_{mu^i}, split by support.
inline FreeEnergyPieces free_energy_pieces(const ConfigSpec& cfg) {
  if (cfg.shape != Shape::trivalent) throw DomainError("free_energy_pieces needs a trivalent configuration");
  const int D = cfg.max_total_degree;
  int vertex_bound = 0;
  for (int i = 1; i <= 3; ++i) vertex_bound += cfg.cap(i, 1);
  vertex_bound = std::min(vertex_bound, D);
  const auto F = connected(framed_table(vertex_bound, {0, 0, 0}));

  std::array<std::vector<QSeries>, 3> u;
  for (int i = 1; i <= 3; ++i)
    for (int n = 1; n <= cfg.cap(i, 1); ++n) u[static_cast<std::size_t>(i - 1)].push_back(u_power_sum(i, n, cfg));
  const QSeries one = QSeries::constant(cfg.edges(), cfg.truncation(), QRational(1));

  FreeEnergyPieces out;
  const QSeries zero(cfg.edges(), cfg.truncation());
  out.f4 = zero;
  for (std::size_t i = 0; i < 3; ++i) {
    out.f1[i] = f1(cfg, static_cast<int>(i + 1));
    out.f2[i] = f2(cfg, static_cast<int>(i + 1));
    out.f1_vertex[i] = zero;
  }
  for (auto pr : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}}) out.f3[pr] = zero;

  for (const auto& [mu, c] : F.terms()) {
    QSeries term = one;
    std::vector<int> support;
    bool ok = true;
    for (int i = 1; i <= 3 && ok; ++i) {
      const Partition& m = mu[static_cast<std::size_t>(i - 1)];
      if (m.weight() == 0) continue;
      if (m.weight() > cfg.cap(i, 1)) {
        ok = false;
        break;
      }
      support.push_back(i);
      QSeries leg(cfg.edges(), cfg.truncation());
      leg.add_term(detail::run(cfg, i, 1, 1, m.weight()), QRational(m.length() % 2 == 0 ? 1 : -1));
      for (int part : m.parts()) leg = leg * u[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(part - 1)];
      term = term * leg;
    }
    if (!ok || support.empty()) continue;
    term *= c;
    if (support.size() == 1)
      out.f1_vertex[static_cast<std::size_t>(support[0] - 1)] += term;
    else if (support.size() == 2)
      out.f3[{support[0], support[1]}] += term;
    else
      out.f4 += term;
  }
  return out;
}

inline QSeries f3(const ConfigSpec& cfg, int a, int b) {
  if (a > b) std::swap(a, b);
  return free_energy_pieces(cfg).f3.at({a, b});
}

inline QSeries f4(const ConfigSpec& cfg) { return free_energy_pieces(cfg).f4; }

// ---------------------------------------------------------------------------
// Structural checks

/// Classes violating d_{i,1} >= d_{i,2} >= ... on some leg with d_{i,1} > 0.
inline bool violates_monotonicity(const ConfigSpec& cfg, const Exponent& e) {
  for (int i = 1; i <= 3; ++i) {
    if (!cfg.has_leg(i)) continue;
    const auto at = [&](int j) { return static_cast<int>(e[static_cast<std::size_t>(cfg.position(i, j))]); };
    if (at(1) == 0) continue;
    for (int j = 1; j < cfg.length(i); ++j)
      if (at(j) < at(j + 1)) return true;
  }
  return false;
}

}  // namespace vertexcalc
