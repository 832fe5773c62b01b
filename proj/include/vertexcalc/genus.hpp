#pragma once

/**
 * @file genus.hpp
 * @brief Genus expansion of q-rational coefficients and the constants C_g.
 *
 * lambda enters through q = e^{i lambda}. We substitute the real proxy q = e^u
 * (x = e^{u/2}) and convert with lambda^{2g-2} <-> (-1)^{g-1} u^{2g-2}.
 */

#include <vector>

#include "vertexcalc/qrational.hpp"

namespace vertexcalc {

/// B_n with B_1 = -1/2; odd n > 1 give 0.
inline BigRational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli: negative index");
  if (n > 1 && n % 2 == 1) return 0;
  std::vector<BigRational> b(static_cast<std::size_t>(n + 1));
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigRational s = 0;
    for (int k = 0; k < m; ++k) s += BigRational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(k))) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -s / (m + 1);
  }
  return b[static_cast<std::size_t>(n)];
}

/// C_g = |B_{2g} (2g-1)| / (2g)!.
inline BigRational c_g(int g) {
  if (g < 0) throw DomainError("c_g: negative genus");
  BigRational v = bernoulli(2 * g) * (2 * g - 1) / BigRational(factorial(static_cast<unsigned>(2 * g)));
  return abs(v);
}

/// Coefficients of u^{-2}, u^{-1}, ..., u^{2G-2}.
struct GenusSeries {
  int min_order = -2;
  std::vector<BigRational> coefficients;

  BigRational at(int order) const {
    const int i = order - min_order;
    if (i < 0 || i >= static_cast<int>(coefficients.size())) return 0;
    return coefficients[static_cast<std::size_t>(i)];
  }
  int max_order() const { return min_order + static_cast<int>(coefficients.size()) - 1; }

  /// N^g = (-1)^{g-1} [u^{2g-2}].
  BigRational invariant(int g) const {
    BigRational c = at(2 * g - 2);
    return (g % 2 == 1) ? c : BigRational(-c);
  }
};

namespace detail {

/// Taylor coefficients of p(e^{u/2}) in u, orders 0..count-1.
inline std::vector<BigRational> laurent_u_series(const HalfLaurent& p, int count) {
  std::vector<BigRational> out(static_cast<std::size_t>(std::max(count, 0)));
  const auto terms = p.terms();
  BigRational fact = 1;
  for (int j = 0; j < count; ++j) {
    if (j > 0) fact *= j;
    BigRational s = 0;
    for (const auto& [k, c] : terms) s += c * rational_pow(ratio(k, 2), j);
    out[static_cast<std::size_t>(j)] = s / fact;
  }
  return out;
}

inline int u_order(const HalfLaurent& p) {
  // a nonzero Laurent polynomial with t terms has a nonzero moment among the first t
  const int t = static_cast<int>(p.terms().size());
  auto s = laurent_u_series(p, t + 1);
  for (int j = 0; j < static_cast<int>(s.size()); ++j)
    if (s[static_cast<std::size_t>(j)] != 0) return j;
  throw DomainError("u_order of the zero polynomial");
}

}  // namespace detail

/// Expansion of v under x = e^{u/2}, orders -2 .. 2*max_genus-2.
inline GenusSeries expand_genus(const QRational& v, int max_genus) {
  if (max_genus < 0) throw DomainError("expand_genus: negative genus bound");
  GenusSeries out;
  out.coefficients.assign(static_cast<std::size_t>(2 * max_genus + 1), BigRational(0));
  if (v.is_zero()) return out;
  const int mn = detail::u_order(v.num());
  const int md = detail::u_order(v.den());
  const int pole = md - mn;
  if (pole > 2) throw DomainError("not a connected free-energy coefficient: pole order " + std::to_string(pole));
  const int top = 2 * max_genus - 2;
  const int count = top + pole + 1;  // quotient terms u^{-pole} .. u^{top}
  if (count > 0) {
    auto n = detail::laurent_u_series(v.num(), mn + count);
    auto d = detail::laurent_u_series(v.den(), md + count);
    std::vector<BigRational> q(static_cast<std::size_t>(count));
    const BigRational d0 = d[static_cast<std::size_t>(md)];
    for (int i = 0; i < count; ++i) {
      BigRational s = n[static_cast<std::size_t>(mn + i)];
      for (int j = 1; j <= i; ++j) s -= d[static_cast<std::size_t>(md + j)] * q[static_cast<std::size_t>(i - j)];
      q[static_cast<std::size_t>(i)] = s / d0;
    }
    for (int i = 0; i < count; ++i) {
      const int order = i - pole;
      if (order < out.min_order) continue;
      out.coefficients[static_cast<std::size_t>(order - out.min_order)] = q[static_cast<std::size_t>(i)];
    }
  }
  for (int order = -1; order <= top; order += 2)
    if (out.at(order) != 0)
      throw DomainError("internal inconsistency: odd-order term u^" + std::to_string(order) + " in genus expansion");
  return out;
}

}  // namespace vertexcalc
