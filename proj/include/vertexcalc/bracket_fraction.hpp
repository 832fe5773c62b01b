#pragma once

/**
 * @file bracket_fraction.hpp
 * @brief Working representation P(x) / prod_n [n]^{e_n} used inside sums.
 *
 * Every amplitude in this library has a denominator that is a product of
 * brackets [n] = x^n - x^{-n}. Keeping that product factored makes addition a
 * matter of multiplying numerators by missing brackets, with no polynomial gcd.
 * The representation is not unique; convert with to_qrational() to compare or
 * publish a value.
 */

#include <algorithm>
#include <vector>

#include "vertexcalc/qrational.hpp"

namespace vertexcalc {

namespace detail {

/// p * [n], computed as x^n p - x^{-n} p.
inline HalfLaurent times_bracket(const HalfLaurent& p, int n) { return p.shifted(n) - p.shifted(-n); }

/// p / [n] when exact.
inline bool divide_by_bracket(const HalfLaurent& p, int n, HalfLaurent& out) {
  if (p.is_zero()) {
    out = HalfLaurent();
    return true;
  }
  // p = x^low * a(x); [n] = x^{-n} (x^{2n} - 1)
  const auto& a = p.int_coeffs();
  const std::size_t step = static_cast<std::size_t>(2 * n);
  if (a.size() <= step) return false;
  IntPoly rem = a;
  IntPoly q(a.size() - step);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = rem[k + step];
    rem[k] += q[k];
    rem[k + step] = 0;
  }
  for (std::size_t i = 0; i < step; ++i)
    if (rem[i] != 0) return false;
  out = HalfLaurent::from_int_poly(std::move(q), p.low_exponent() + n, p.denominator());
  return true;
}

}  // namespace detail

class BracketFraction {
 public:
  BracketFraction() = default;
  BracketFraction(const BigRational& c) : num_(c) {}  // NOLINT
  BracketFraction(int c) : num_(c) {}                 // NOLINT
  BracketFraction(HalfLaurent num, std::vector<int> exps = {}) : num_(std::move(num)), exps_(std::move(exps)) {  // NOLINT
    tidy();
  }

  /// 1 / [n]^k.
  static BracketFraction inverse_bracket(int n, int k = 1) {
    if (n <= 0) throw DomainError("bracket [n] requires n >= 1");
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e.back() = k;
    return BracketFraction(HalfLaurent(1), std::move(e));
  }

  const HalfLaurent& numerator() const { return num_; }
  const std::vector<int>& bracket_exponents() const { return exps_; }
  bool is_zero() const { return num_.is_zero(); }

  HalfLaurent denominator() const {
    HalfLaurent d(1);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      for (int k = 0; k < exps_[i]; ++k) d = detail::times_bracket(d, static_cast<int>(i + 1));
    return d;
  }

  QRational to_qrational() const { return QRational(num_, denominator()); }

  /// Factors the denominator of v into brackets; false if it is not such a product.
  static bool from_qrational(const QRational& v, BracketFraction& out) {
    HalfLaurent den = v.den();
    std::vector<int> exps;
    // a bracket [m] carries the cyclotomic factor of order 2m, so the largest
    // bracket present is the first one (from the top) that divides exactly
    for (int n = (den.high_exponent() - den.low_exponent()) / 2; n >= 1;) {
      HalfLaurent q;
      if (detail::divide_by_bracket(den, n, q)) {
        if (exps.size() < static_cast<std::size_t>(n)) exps.resize(static_cast<std::size_t>(n), 0);
        ++exps[static_cast<std::size_t>(n - 1)];
        den = std::move(q);
        n = std::min(n, (den.high_exponent() - den.low_exponent()) / 2);
      } else {
        --n;
      }
    }
    if (!den.is_monomial()) return false;
    const int k = den.low_exponent();
    HalfLaurent num = v.num().shifted(-k);
    num /= den.coeff(k);
    out = BracketFraction(std::move(num), std::move(exps));
    return true;
  }

  BracketFraction shifted(int k) const {
    BracketFraction r = *this;
    r.num_ = r.num_.shifted(k);
    return r;
  }

  BracketFraction operator-() const {
    BracketFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  BracketFraction& operator+=(const BracketFraction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const std::size_t m = std::max(exps_.size(), o.exps_.size());
    std::vector<int> e(m, 0);
    for (std::size_t i = 0; i < m; ++i) e[i] = std::max(exp_at(i), o.exp_at(i));
    HalfLaurent a = lift(num_, exps_, e);
    a += lift(o.num_, o.exps_, e);
    num_ = std::move(a);
    exps_ = std::move(e);
    tidy();
    return *this;
  }
  BracketFraction& operator-=(const BracketFraction& o) { return *this += -o; }

  BracketFraction& operator*=(const BracketFraction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = BracketFraction();
    num_ *= o.num_;
    if (o.exps_.size() > exps_.size()) exps_.resize(o.exps_.size(), 0);
    for (std::size_t i = 0; i < o.exps_.size(); ++i) exps_[i] += o.exps_[i];
    tidy();
    return *this;
  }
  BracketFraction& operator*=(const BigRational& c) {
    num_ *= c;
    if (num_.is_zero()) exps_.clear();
    return *this;
  }
  BracketFraction& operator*=(const HalfLaurent& p) {
    num_ *= p;
    if (num_.is_zero()) exps_.clear();
    return *this;
  }

  /// Division by a value whose canonical numerator is a monomial.
  BracketFraction& operator/=(const QRational& v) {
    if (v.is_zero()) throw DomainError("division by zero amplitude");
    if (!v.num().is_monomial())
      throw DomainError("BracketFraction division requires a monomial numerator");
    const int k = v.num().low_exponent();
    num_ = num_.shifted(-k);
    num_ /= v.num().coeff(k);
    num_ *= v.den();
    reduce();
    return *this;
  }

  BracketFraction& divide_by_bracket(int n, int k = 1) {
    if (exps_.size() < static_cast<std::size_t>(n)) exps_.resize(static_cast<std::size_t>(n), 0);
    exps_[static_cast<std::size_t>(n - 1)] += k;
    return *this;
  }

  friend BracketFraction operator+(BracketFraction a, const BracketFraction& b) { return a += b; }
  friend BracketFraction operator-(BracketFraction a, const BracketFraction& b) { return a -= b; }
  friend BracketFraction operator*(BracketFraction a, const BracketFraction& b) { return a *= b; }
  friend BracketFraction operator*(BracketFraction a, const BigRational& c) { return a *= c; }
  friend BracketFraction operator*(const BigRational& c, BracketFraction a) { return a *= c; }

  /// Exact value comparison by cross-multiplication.
  friend bool operator==(const BracketFraction& a, const BracketFraction& b) {
    const std::size_t m = std::max(a.exps_.size(), b.exps_.size());
    std::vector<int> e(m, 0);
    for (std::size_t i = 0; i < m; ++i) e[i] = std::max(a.exp_at(i), b.exp_at(i));
    return lift(a.num_, a.exps_, e) == lift(b.num_, b.exps_, e);
  }

  /// Cancels brackets that divide the numerator exactly.
  void reduce() {
    for (std::size_t i = exps_.size(); i-- > 0;) {
      while (exps_[i] > 0) {
        HalfLaurent q;
        if (!detail::divide_by_bracket(num_, static_cast<int>(i + 1), q)) break;
        num_ = std::move(q);
        --exps_[i];
      }
    }
    tidy();
  }

 private:
  int exp_at(std::size_t i) const { return i < exps_.size() ? exps_[i] : 0; }

  static HalfLaurent lift(const HalfLaurent& p, const std::vector<int>& from, const std::vector<int>& to) {
    HalfLaurent r = p;
    for (std::size_t i = 0; i < to.size(); ++i) {
      const int have = i < from.size() ? from[i] : 0;
      for (int k = have; k < to[i]; ++k) r = detail::times_bracket(r, static_cast<int>(i + 1));
    }
    return r;
  }

  void tidy() {
    if (num_.is_zero()) {
      exps_.clear();
      return;
    }
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  }

  HalfLaurent num_;
  std::vector<int> exps_;
};

}  // namespace vertexcalc
