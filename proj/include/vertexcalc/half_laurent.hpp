#pragma once

/**
 * @file half_laurent.hpp
 * @brief Laurent polynomials in x = q^{1/2} with exact rational coefficients.
 *
 * Storage is dense: an integer coefficient vector starting at exponent low_,
 * sharing one positive denominator. The representation is kept normalized:
 * no leading/trailing zeros, gcd(coefficients, denominator) = 1. Zero has no
 * coefficients.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vertexcalc/rational.hpp"

namespace vertexcalc {

namespace detail {

/// Dense integer polynomial, index i holds the coefficient of x^i.
using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

/// Pseudo-remainder of a by b (b nonzero): lc(b)^k * a mod b.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    BigInt la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

inline IntPoly primitive_part(IntPoly p) {
  trim(p);
  if (p.empty()) return p;
  BigInt g = content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

/// Primitive gcd over Z[x] with positive leading coefficient.
inline IntPoly gcd(IntPoly a, IntPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Exact quotient a / b over Z[x]; returns false if b does not divide a
/// with an integer quotient.
inline bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
  quotient.clear();
  if (a.empty()) return true;
  if (b.empty() || a.size() < b.size()) return false;
  IntPoly rem = a;
  const std::size_t db = b.size() - 1;
  quotient.assign(a.size() - db, BigInt(0));
  BigInt q, r;
  for (std::size_t k = quotient.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    if (r != 0) return false;
    quotient[k] = q;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db && i < rem.size(); ++i)
    if (rem[i] != 0) return false;
  trim(quotient);
  return true;
}

}  // namespace detail

class HalfLaurent {
 public:
  HalfLaurent() = default;

  HalfLaurent(const BigRational& c, int exponent = 0) {  // NOLINT: implicit scalar embedding
    if (c == 0) return;
    low_ = exponent;
    coeffs_.push_back(c.get_num());
    den_ = c.get_den();
  }

  HalfLaurent(long c) : HalfLaurent(BigRational(c)) {}  // NOLINT
  HalfLaurent(int c) : HalfLaurent(BigRational(c)) {}   // NOLINT

  static HalfLaurent monomial(int exponent, const BigRational& c = 1) { return HalfLaurent(c, exponent); }

  /// x^n - x^{-n}, i.e. q^{n/2} - q^{-n/2}.
  static HalfLaurent bracket(int n) {
    if (n <= 0) throw DomainError("bracket [n] requires n >= 1");
    HalfLaurent r;
    r.low_ = -n;
    r.coeffs_.assign(2 * n + 1, BigInt(0));
    r.coeffs_.front() = -1;
    r.coeffs_.back() = 1;
    return r;
  }

  static HalfLaurent from_terms(const std::map<int, BigRational>& terms) {
    HalfLaurent r;
    for (const auto& [k, c] : terms) r += HalfLaurent(c, k);
    return r;
  }

  /// Integer polynomial shifted by `low`, divided by `den`.
  static HalfLaurent from_int_poly(detail::IntPoly coeffs, int low, BigInt den = 1) {
    HalfLaurent r;
    r.low_ = low;
    r.coeffs_ = std::move(coeffs);
    r.den_ = std::move(den);
    r.normalize();
    return r;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const detail::IntPoly& int_coeffs() const { return coeffs_; }
  const BigInt& denominator() const { return den_; }

  bool is_monomial() const { return coeffs_.size() == 1; }

  BigRational coeff(int k) const {
    if (is_zero() || k < low_ || k > high_exponent()) return 0;
    BigRational r(coeffs_[static_cast<std::size_t>(k - low_)], den_);
    r.canonicalize();
    return r;
  }

  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, BigRational>> terms() const {
    std::vector<std::pair<int, BigRational>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      BigRational c(coeffs_[i], den_);
      c.canonicalize();
      out.emplace_back(low_ + static_cast<int>(i), c);
    }
    return out;
  }

  HalfLaurent shifted(int k) const {
    HalfLaurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// x -> x^{-1}.
  HalfLaurent reflected() const {
    HalfLaurent r;
    if (is_zero()) return r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.low_ = -high_exponent();
    r.den_ = den_;
    return r;
  }

  BigRational evaluate(const BigRational& x) const {
    if (is_zero()) return 0;
    if (x == 0 && low_ < 0) throw DomainError("evaluating a Laurent polynomial with negative powers at 0");
    BigRational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + BigRational(coeffs_[i]);
    acc *= rational_pow(x, low_);
    acc /= den_;
    return acc;
  }

  HalfLaurent operator-() const {
    HalfLaurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  HalfLaurent& operator+=(const HalfLaurent& o) { return accumulate(o, false); }
  HalfLaurent& operator-=(const HalfLaurent& o) { return accumulate(o, true); }

  HalfLaurent& operator*=(const HalfLaurent& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = HalfLaurent();
    coeffs_ = detail::multiply(coeffs_, o.coeffs_);
    low_ += o.low_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  HalfLaurent& operator*=(const BigRational& c) {
    if (c == 0) return *this = HalfLaurent();
    for (auto& x : coeffs_) x *= c.get_num();
    den_ *= c.get_den();
    normalize();
    return *this;
  }

  HalfLaurent& operator/=(const BigRational& c) {
    if (c == 0) throw DomainError("division of a Laurent polynomial by zero");
    return *this *= BigRational(1 / c);
  }

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(HalfLaurent a, const HalfLaurent& b) { return a *= b; }
  friend HalfLaurent operator*(HalfLaurent a, const BigRational& c) { return a *= c; }
  friend HalfLaurent operator*(const BigRational& c, HalfLaurent a) { return a *= c; }

  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
    return a.low_ == b.low_ && a.den_ == b.den_ && a.coeffs_ == b.coeffs_;
  }

  HalfLaurent pow(unsigned e) const {
    HalfLaurent r(1), b = *this;
    while (e) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e) b *= b;
    }
    return r;
  }

 private:
  void normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      den_ = 1;
      return;
    }
    if (first) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
      low_ += static_cast<int>(first);
    }
    detail::trim(coeffs_);
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : coeffs_) c = -c;
    }
    if (den_ != 1) {
      BigInt g = den_;
      for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
      }
      if (g != 1) {
        for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
      }
    }
  }

  HalfLaurent& accumulate(const HalfLaurent& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high_exponent(), o.high_exponent());
    BigInt l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    const BigInt sa = l / den_;
    const BigInt sb = l / o.den_;
    detail::IntPoly r(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      mpz_mul(r[i + static_cast<std::size_t>(low_ - lo)].get_mpz_t(), coeffs_[i].get_mpz_t(), sa.get_mpz_t());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      auto& slot = r[i + static_cast<std::size_t>(o.low_ - lo)];
      if (subtract)
        mpz_submul(slot.get_mpz_t(), o.coeffs_[i].get_mpz_t(), sb.get_mpz_t());
      else
        mpz_addmul(slot.get_mpz_t(), o.coeffs_[i].get_mpz_t(), sb.get_mpz_t());
    }
    coeffs_ = std::move(r);
    low_ = lo;
    den_ = l;
    normalize();
    return *this;
  }

  int low_ = 0;
  detail::IntPoly coeffs_;
  BigInt den_ = 1;
};

/// [n] = q^{n/2} - q^{-n/2} as a Laurent polynomial in x = q^{1/2}.
inline HalfLaurent bracket(int n) { return HalfLaurent::bracket(n); }

}  // namespace vertexcalc
