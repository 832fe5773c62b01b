#pragma once

/**
 * @file symfunc.hpp
 * @brief Symmetric-group characters, Littlewood-Richardson coefficients, Schur
 * functions from power sums, and the principal specialization W_mu(q).
 *
 * All memo tables are process-wide and thread-safe.
 */

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "vertexcalc/bracket_fraction.hpp"
#include "vertexcalc/memo.hpp"
#include "vertexcalc/partitions.hpp"

namespace vertexcalc {

namespace detail {

/// Removes every rim hook of length r from lambda; returns (lambda', sign) pairs.
inline std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r) {
  const int l = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);
  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < l; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > target && c < b) ++between;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts;
    for (int k = 0; k < l; ++k) {
      const int v = nb[static_cast<std::size_t>(k)] - (l - 1 - k);
      if (v > 0) parts.push_back(v);
    }
    out.emplace_back(Partition(std::move(parts)), between % 2 == 0 ? 1 : -1);
  }
  return out;
}

inline Memo<std::pair<Partition, Partition>, BigInt>& character_memo() {
  static Memo<std::pair<Partition, Partition>, BigInt> memo;
  return memo;
}

inline BigInt character_unchecked(const Partition& lambda, const Partition& nu) {
  if (nu.empty()) return 1;
  const auto key = std::make_pair(lambda, nu);
  if (auto hit = character_memo().find(key)) return *hit;
  // strip the largest cycle first
  const std::vector<int> rest_parts(nu.parts().begin() + 1, nu.parts().end());
  const Partition rest(rest_parts);
  BigInt total = 0;
  for (const auto& [smaller, sign] : remove_rim_hooks(lambda, nu[0])) total += sign * character_unchecked(smaller, rest);
  return character_memo().insert(key, total);
}

}  // namespace detail

/// chi_lambda(nu) by the Murnaghan-Nakayama rule.
inline BigInt character(const Partition& lambda, const Partition& nu) {
  if (lambda.weight() != nu.weight()) throw DomainError("character: weight mismatch");
  return detail::character_unchecked(lambda, nu);
}

namespace detail {

struct LrSearch {
  const Partition& mu;
  const Partition& nu;
  const Partition& rho;
  std::vector<std::vector<int>> grid;
  std::vector<std::pair<int, int>> cells;
  std::vector<int> count;
  long found = 0;

  LrSearch(const Partition& m, const Partition& n, const Partition& r) : mu(m), nu(n), rho(r) {
    grid.resize(static_cast<std::size_t>(rho.length()));
    for (int i = 0; i < rho.length(); ++i) {
      grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(rho[static_cast<std::size_t>(i)]), 0);
      // reverse reading word: rows top to bottom, each right to left
      for (int j = rho[static_cast<std::size_t>(i)] - 1; j >= mu[static_cast<std::size_t>(i)]; --j) cells.emplace_back(i, j);
    }
    count.assign(static_cast<std::size_t>(nu.length() + 1), 0);
  }

  void run(std::size_t k) {
    if (k == cells.size()) {
      ++found;
      return;
    }
    const auto [i, j] = cells[k];
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    int hi = std::min(nu.length(), i + 1);
    if (uj + 1 < grid[ui].size() && j + 1 >= mu[ui]) hi = std::min(hi, grid[ui][uj + 1]);
    int lo = 1;
    if (i > 0 && j >= mu[ui - 1]) lo = grid[ui - 1][uj] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (count[uv] >= nu[uv - 1]) continue;
      if (v > 1 && count[uv] + 1 > count[uv - 1]) continue;
      ++count[uv];
      grid[ui][uj] = v;
      run(k + 1);
      grid[ui][uj] = 0;
      --count[uv];
    }
  }
};

using LrKey = std::array<Partition, 3>;

inline Memo<LrKey, long>& lr_memo() {
  static Memo<LrKey, long> memo;
  return memo;
}

}  // namespace detail

/// c^rho_{mu nu}: number of LR tableaux of shape rho/mu and content nu.
inline long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& rho) {
  if (mu.weight() + nu.weight() != rho.weight()) return 0;
  if (!contains(rho, mu) || !contains(rho, nu)) return 0;
  if (mu.empty()) return nu == rho ? 1 : 0;
  if (nu.empty()) return mu == rho ? 1 : 0;
  const detail::LrKey key{mu, nu, rho};
  return detail::lr_memo().get_or_compute(key, [&] {
    detail::LrSearch s(mu, nu, rho);
    s.run(0);
    return s.found;
  });
}

/// All lambda with c^rho_{mu lambda} != 0, paired with the coefficient.
inline std::vector<std::pair<Partition, long>> lr_complements(const Partition& rho, const Partition& mu) {
  std::vector<std::pair<Partition, long>> out;
  if (!contains(rho, mu)) return out;
  for (const auto& lam : enumerate(rho.weight() - mu.weight())) {
    if (!contains(rho, lam)) continue;
    const long c = lr_coefficient(mu, lam, rho);
    if (c != 0) out.emplace_back(lam, c);
  }
  return out;
}

/// s_mu from power sums: sum over |nu| = |mu| of chi_mu(nu)/z_nu * p_nu, with p[n-1] = p_n.
template <class T>
T schur_from_power_sums(const Partition& mu, const std::vector<T>& p, const T& one) {
  const int n = mu.weight();
  if (static_cast<int>(p.size()) < n) throw DomainError("schur_from_power_sums: missing power sum p_" + std::to_string(p.size() + 1));
  T total = one * BigRational(0);
  for (const auto& nu : enumerate(n)) {
    const BigInt chi = character(mu, nu);
    if (chi == 0) continue;
    T term = one;
    for (int part : nu.parts()) term = term * p[static_cast<std::size_t>(part - 1)];
    total = total + term * ratio(chi, z_factor(nu));
  }
  return total;
}

/// s_mu for every |mu| = n, in enumerate(n) order; each power-sum product is formed once.
template <class T>
std::vector<T> schur_all_from_power_sums(int n, const std::vector<T>& p, const T& one) {
  if (static_cast<int>(p.size()) < n) throw DomainError("schur_from_power_sums: missing power sum p_" + std::to_string(p.size() + 1));
  const auto& parts = enumerate(n);
  std::vector<T> pnu;
  pnu.reserve(parts.size());
  for (const auto& nu : parts) {
    T term = one;
    for (int part : nu.parts()) term = term * p[static_cast<std::size_t>(part - 1)];
    pnu.push_back(std::move(term));
  }
  std::vector<T> out;
  out.reserve(parts.size());
  for (const auto& mu : parts) {
    T total = one * BigRational(0);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const BigInt chi = character(mu, parts[k]);
      if (chi != 0) total = total + pnu[k] * ratio(chi, z_factor(parts[k]));
    }
    out.push_back(std::move(total));
  }
  return out;
}

namespace detail {

inline Memo<Partition, BracketFraction>& w_mu_memo() {
  static Memo<Partition, BracketFraction> memo;
  return memo;
}

}  // namespace detail

/// W_mu with the denominator kept as a product of brackets.
inline BracketFraction w_mu_fraction(const Partition& mu) {
  return detail::w_mu_memo().get_or_compute(mu, [&] {
    BracketFraction total;
    for (const auto& nu : enumerate(mu.weight())) {
      const BigInt chi = character(mu, nu);
      if (chi == 0) continue;
      BracketFraction term(ratio(chi, z_factor(nu)));
      for (int part : nu.parts()) term.divide_by_bracket(part);
      total += term;
    }
    total.reduce();
    return total;
  });
}

/// W_mu(q) = s_mu(x_i = q^{-i+1/2}), through p_n = 1/[n].
inline QRational w_mu(const Partition& mu) { return w_mu_fraction(mu).to_qrational(); }

/// W_{mu/nu} = sum_lambda c^mu_{nu lambda} W_lambda.
inline BracketFraction w_skew_fraction(const Partition& mu, const Partition& nu) {
  static detail::Memo<std::pair<Partition, Partition>, BracketFraction> memo;
  return memo.get_or_compute({mu, nu}, [&] {
    BracketFraction total;
    for (const auto& [lam, c] : lr_complements(mu, nu)) total += w_mu_fraction(lam) * BigRational(c);
    total.reduce();
    return total;
  });
}

inline QRational w_skew(const Partition& mu, const Partition& nu) { return w_skew_fraction(mu, nu).to_qrational(); }

}  // namespace vertexcalc
