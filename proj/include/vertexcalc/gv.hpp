#pragma once

/**
 * @file gv.hpp
 * @brief Genus expansion of free-energy coefficients and Gopakumar-Vafa extraction.
 *
 * GV form: F = sum_{l,g,d} n^g_d (1/l) [l]^{2g-2} Q^{l d}. Classes are processed
 * in increasing total degree; after removing multicovers of smaller classes the
 * remainder times [1]^2 must be an integer polynomial in y = [1]^2.
 */

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vertexcalc/genus.hpp"
#include "vertexcalc/novikov_series.hpp"

namespace vertexcalc {

/// Raised when a class has no integral GV expansion.
class GvIntegralityError : public std::runtime_error {
 public:
  explicit GvIntegralityError(const std::string& what) : std::runtime_error(what) {}
};

/// N^0 .. N^G of the class Q^d in F.
inline std::vector<BigRational> gw_invariants(const QSeries& F, const Exponent& d, int max_genus) {
  const GenusSeries s = expand_genus(F.coeff(d), max_genus);
  std::vector<BigRational> out;
  for (int g = 0; g <= max_genus; ++g) out.push_back(s.invariant(g));
  return out;
}

struct GvTable {
  std::vector<EdgeLabel> edges;
  std::map<Exponent, std::vector<BigInt>, DegLexLess> entries;  // n^g for g = 0 .. max_genus_found

  /// n^g_d; 0 for classes or genera not present.
  BigInt at(const Exponent& d, int g) const {
    auto it = entries.find(d);
    if (it == entries.end() || g < 0 || g >= static_cast<int>(it->second.size())) return 0;
    return it->second[static_cast<std::size_t>(g)];
  }

  int max_genus_found(const Exponent& d) const {
    auto it = entries.find(d);
    return it == entries.end() ? -1 : static_cast<int>(it->second.size()) - 1;
  }
};

namespace detail {

inline std::string class_label(const std::vector<EdgeLabel>& edges, const Exponent& d) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (d[i] == 0) continue;
    if (!first) s += ", ";
    first = false;
    s += edges[i].str() + ":" + std::to_string(d[i]);
  }
  return s + "}";
}

inline HalfLaurent y_power(int g) { return (bracket(1) * bracket(1)).pow(static_cast<unsigned>(g)); }

/// sum_g n^g [l]^{2g-2} / l.
inline QRational multicover_term(const std::vector<BigInt>& n, int l) {
  const HalfLaurent bl = bracket(l);
  HalfLaurent num;
  for (std::size_t g = 0; g < n.size(); ++g)
    if (n[g] != 0) num += (bl * bl).pow(static_cast<unsigned>(g)) * BigRational(n[g]);
  return QRational(num, bl * bl * BigRational(l));
}

/// Coefficients of a polynomial in y; false if r is not one with integer coefficients.
inline bool y_expansion(HalfLaurent r, std::vector<BigInt>& out) {
  out.clear();
  while (!r.is_zero()) {
    const int top = r.high_exponent();
    if (top < 0 || top % 2 != 0) return false;
    const BigRational c = r.coeff(top);
    if (c.get_den() != 1) return false;
    const auto g = static_cast<std::size_t>(top / 2);
    if (out.size() <= g) out.resize(g + 1, 0);
    out[g] = c.get_num();
    r -= y_power(static_cast<int>(g)) * c;
  }
  return true;
}

}  // namespace detail

/// Extracts n^g_d for every class within F's truncation. Throws GvIntegralityError
/// naming the class when a remainder is not an integer polynomial in y.
inline GvTable gv_extract(const QSeries& F, int max_genus) {
  if (!F.constant_term().is_zero()) throw DomainError("gv_extract requires a zero constant term");
  GvTable table;
  table.edges = F.edges();
  std::set<Exponent, DegLexLess> todo;
  for (const auto& [e, c] : F.terms()) todo.insert(e);
  for (auto it = todo.begin(); it != todo.end(); ++it) {
    const Exponent& d = *it;
    int content = 0;
    for (auto v : d) content = std::gcd(content, static_cast<int>(v));
    QRational rest = F.coeff(d);
    for (int l = 2; l <= content; ++l) {
      if (content % l != 0) continue;
      Exponent base;
      for (std::size_t i = 0; i < kMaxEdges; ++i) base[i] = static_cast<std::uint8_t>(d[i] / l);
      auto found = table.entries.find(base);
      if (found != table.entries.end()) rest = rest - detail::multicover_term(found->second, l);
    }
    if (rest.is_zero()) continue;
    const QRational scaled = rest * QRational(bracket(1) * bracket(1));
    std::vector<BigInt> n;
    bool ok = scaled.is_laurent();
    if (ok) {
      const int k = scaled.den().low_exponent();
      HalfLaurent r = scaled.num().shifted(-k);
      r /= scaled.den().coeff(k);
      ok = detail::y_expansion(r, n);
    }
    if (!ok)
      throw GvIntegralityError("GV integrality failure at class " + detail::class_label(table.edges, d) + ": " +
                               to_string(rest));
    n.resize(static_cast<std::size_t>(std::max<int>(static_cast<int>(n.size()), max_genus + 1)), 0);
    table.entries.emplace(d, n);
    for (int l = 2;; ++l) {
      Exponent m{};
      bool fits = true;
      for (std::size_t i = 0; i < kMaxEdges && fits; ++i) {
        const int v = d[i] * l;
        fits = v <= 255;
        m[i] = static_cast<std::uint8_t>(fits ? v : 0);
      }
      if (!fits || !F.admits(m)) break;
      todo.insert(m);
    }
  }
  return table;
}

/// Re-sums the GV form over the given edge layout and truncation.
inline QSeries gv_resum(const GvTable& table, const Truncation& trunc) {
  QSeries out(table.edges, trunc);
  for (const auto& [d, n] : table.entries)
    for (int l = 1;; ++l) {
      Exponent m{};
      bool fits = true;
      for (std::size_t i = 0; i < kMaxEdges && fits; ++i) {
        const int v = d[i] * l;
        fits = v <= 255;
        m[i] = static_cast<std::uint8_t>(fits ? v : 0);
      }
      if (!fits || !out.admits(m)) break;
      out.add_term(m, detail::multicover_term(n, l));
    }
  return out;
}

}  // namespace vertexcalc
