#pragma once

/**
 * @file novikov_series.hpp
 * @brief Truncated multivariate power series in edge variables Q_{i,j} = e^{-t_{i,j}}.
 *
 * Truncation is by total degree, optionally refined by per-edge caps. The set of
 * discarded monomials is an ideal, so products, exp and log are exact on every
 * retained coefficient.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "vertexcalc/bracket_fraction.hpp"
#include "vertexcalc/qrational.hpp"

namespace vertexcalc {

inline constexpr std::size_t kMaxEdges = 16;

struct EdgeLabel {
  int leg = 1;    // i in {1,2,3}
  int index = 1;  // j in 1..N_i
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
  std::string str() const { return std::to_string(leg) + "," + std::to_string(index); }
};

using Exponent = std::array<std::uint8_t, kMaxEdges>;

inline int total_degree(const Exponent& e) {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

/// Total degree first, then lexicographic on the exponent vector.
struct DegLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

struct Truncation {
  int max_total_degree = 0;
  std::vector<int> caps;  // per edge; negative = uncapped

  bool admits(const Exponent& e, std::size_t edges) const {
    if (total_degree(e) > max_total_degree) return false;
    for (std::size_t i = 0; i < caps.size() && i < edges; ++i)
      if (caps[i] >= 0 && e[i] > caps[i]) return false;
    return true;
  }
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

template <class Coeff>
class NovikovSeries {
 public:
  using Terms = std::map<Exponent, Coeff, DegLexLess>;

  NovikovSeries() = default;
  NovikovSeries(std::vector<EdgeLabel> edges, Truncation trunc) : edges_(std::move(edges)), trunc_(std::move(trunc)) {
    if (edges_.size() > kMaxEdges) throw DomainError("too many Novikov edge variables");
    if (trunc_.max_total_degree < 0) throw DomainError("negative truncation degree");
    if (!trunc_.caps.empty() && trunc_.caps.size() != edges_.size())
      throw DomainError("per-edge caps must match the edge list");
  }

  static NovikovSeries constant(std::vector<EdgeLabel> edges, Truncation trunc, const Coeff& c) {
    NovikovSeries s(std::move(edges), std::move(trunc));
    s.add_term(Exponent{}, c);
    return s;
  }

  const std::vector<EdgeLabel>& edges() const { return edges_; }
  const Truncation& truncation() const { return trunc_; }
  int max_total_degree() const { return trunc_.max_total_degree; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int edge_position(const EdgeLabel& e) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i] == e) return static_cast<int>(i);
    return -1;
  }

  bool admits(const Exponent& e) const { return trunc_.admits(e, edges_.size()); }

  Coeff coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }

  Coeff constant_term() const { return coeff(Exponent{}); }

  /// Adds c * Q^e; silently dropped beyond the truncation.
  void add_term(const Exponent& e, const Coeff& c) {
    if (!admits(e) || is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  NovikovSeries& operator+=(const NovikovSeries& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  NovikovSeries& operator-=(const NovikovSeries& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  NovikovSeries operator-() const {
    NovikovSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  NovikovSeries& operator*=(const Coeff& c) {
    if (is_zero_coeff(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries& b) { return a += b; }
  friend NovikovSeries operator-(NovikovSeries a, const NovikovSeries& b) { return a -= b; }
  friend NovikovSeries operator*(NovikovSeries a, const Coeff& c) { return a *= c; }

  friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
    a.check_compatible(b);
    NovikovSeries r(a.edges_, a.trunc_);
    for (const auto& [ea, ca] : a.terms_) {
      const int da = total_degree(ea);
      for (const auto& [eb, cb] : b.terms_) {
        if (da + total_degree(eb) > a.trunc_.max_total_degree) break;  // b is degree-sorted
        Exponent e;
        for (std::size_t i = 0; i < kMaxEdges; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        if (!r.admits(e)) continue;
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  NovikovSeries& operator*=(const NovikovSeries& o) { return *this = *this * o; }

  /// Coefficientwise equality (exact for both coefficient types).
  friend bool operator==(const NovikovSeries& a, const NovikovSeries& b) {
    if (!(a.edges_ == b.edges_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      if (!(ia->second == ib->second)) return false;
    }
    return true;
  }

  /// Drops every monomial containing the given edge (the t -> infinity limit).
  NovikovSeries without_edge(const EdgeLabel& edge) const {
    const int pos = edge_position(edge);
    NovikovSeries r(edges_, trunc_);
    for (const auto& [e, c] : terms_)
      if (pos < 0 || e[static_cast<std::size_t>(pos)] == 0) r.terms_.emplace(e, c);
    return r;
  }

  /// Same terms under a coarser truncation.
  NovikovSeries truncated(Truncation t) const {
    NovikovSeries r(edges_, std::move(t));
    for (const auto& [e, c] : terms_)
      if (r.admits(e)) r.terms_.emplace(e, c);
    return r;
  }

  template <class Fn>
  auto map_coefficients(Fn&& fn) const {
    using Out = std::decay_t<decltype(fn(std::declval<const Coeff&>()))>;
    NovikovSeries<Out> r(edges_, trunc_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  /// Homogeneous components indexed by total degree.
  std::vector<std::vector<std::pair<Exponent, Coeff>>> graded() const {
    std::vector<std::vector<std::pair<Exponent, Coeff>>> g(static_cast<std::size_t>(trunc_.max_total_degree + 1));
    for (const auto& [e, c] : terms_) g[static_cast<std::size_t>(total_degree(e))].emplace_back(e, c);
    return g;
  }

 private:
  template <class>
  friend class NovikovSeries;

  static bool is_zero_coeff(const Coeff& c) { return c.is_zero(); }

  void check_compatible(const NovikovSeries& o) const {
    if (!(edges_ == o.edges_) || !(trunc_ == o.trunc_))
      throw DomainError("Novikov series with different edge sets or truncations");
  }

  std::vector<EdgeLabel> edges_;
  Truncation trunc_;
  Terms terms_;
};

namespace detail {

template <class Coeff>
using Graded = std::vector<std::map<Exponent, Coeff, DegLexLess>>;

template <class Coeff>
void accumulate_product(std::map<Exponent, Coeff, DegLexLess>& out, const std::vector<std::pair<Exponent, Coeff>>& a,
                        const std::vector<std::pair<Exponent, Coeff>>& b, const BigRational& weight,
                        const NovikovSeries<Coeff>& shape) {
  for (const auto& [ea, ca] : a) {
    Coeff wa = ca * weight;
    for (const auto& [eb, cb] : b) {
      Exponent e;
      for (std::size_t i = 0; i < kMaxEdges; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      if (!shape.admits(e)) continue;
      Coeff term = wa * cb;
      auto [it, inserted] = out.try_emplace(e, term);
      if (!inserted) it->second += term;
    }
  }
}

template <class Coeff>
std::vector<std::pair<Exponent, Coeff>> flatten(const std::map<Exponent, Coeff, DegLexLess>& m) {
  std::vector<std::pair<Exponent, Coeff>> v;
  for (const auto& [e, c] : m)
    if (!c.is_zero()) v.emplace_back(e, c);
  return v;
}

}  // namespace detail

/// exp(f) for f with zero constant term, via n E_n = sum_k k f_k E_{n-k}.
template <class Coeff>
NovikovSeries<Coeff> series_exp(const NovikovSeries<Coeff>& f) {
  if (!f.constant_term().is_zero()) throw DomainError("series_exp requires a zero constant term");
  const int D = f.max_total_degree();
  auto fg = f.graded();
  std::vector<std::vector<std::pair<Exponent, Coeff>>> eg(static_cast<std::size_t>(D + 1));
  eg[0].emplace_back(Exponent{}, Coeff(1));
  for (int n = 1; n <= D; ++n) {
    std::map<Exponent, Coeff, DegLexLess> acc;
    for (int k = 1; k <= n; ++k) {
      if (fg[static_cast<std::size_t>(k)].empty() || eg[static_cast<std::size_t>(n - k)].empty()) continue;
      detail::accumulate_product(acc, fg[static_cast<std::size_t>(k)], eg[static_cast<std::size_t>(n - k)],
                                 ratio(k, n), f);
    }
    eg[static_cast<std::size_t>(n)] = detail::flatten(acc);
  }
  NovikovSeries<Coeff> r(f.edges(), f.truncation());
  for (const auto& part : eg)
    for (const auto& [e, c] : part) r.add_term(e, c);
  return r;
}

/// log(Z) for Z with constant term exactly 1, via n L_n = n Z_n - sum_{k<n} k L_k Z_{n-k}.
template <class Coeff>
NovikovSeries<Coeff> series_log(const NovikovSeries<Coeff>& z) {
  if (!(z.constant_term() == Coeff(1))) throw DomainError("series_log requires constant term 1");
  const int D = z.max_total_degree();
  auto zg = z.graded();
  std::vector<std::vector<std::pair<Exponent, Coeff>>> lg(static_cast<std::size_t>(D + 1));
  for (int n = 1; n <= D; ++n) {
    std::map<Exponent, Coeff, DegLexLess> acc;
    for (const auto& [e, c] : zg[static_cast<std::size_t>(n)]) acc.emplace(e, c);
    for (int k = 1; k < n; ++k) {
      if (lg[static_cast<std::size_t>(k)].empty() || zg[static_cast<std::size_t>(n - k)].empty()) continue;
      detail::accumulate_product(acc, lg[static_cast<std::size_t>(k)], zg[static_cast<std::size_t>(n - k)],
                                 ratio(-k, n), z);
    }
    lg[static_cast<std::size_t>(n)] = detail::flatten(acc);
  }
  NovikovSeries<Coeff> r(z.edges(), z.truncation());
  for (const auto& part : lg)
    for (const auto& [e, c] : part) r.add_term(e, c);
  return r;
}

using QSeries = NovikovSeries<QRational>;
using FastSeries = NovikovSeries<BracketFraction>;

inline QSeries to_qseries(const FastSeries& s) {
  return s.map_coefficients([](const BracketFraction& c) { return c.to_qrational(); });
}

}  // namespace vertexcalc
