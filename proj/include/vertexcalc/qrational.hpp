#pragma once

/**
 * @file qrational.hpp
 * @brief Canonical rational functions in x = q^{1/2} over the rationals.
 *
 * Canonical form: num and den have integer coefficients, no common polynomial
 * factor, joint content 1, den has lowest exponent 0 (x is a unit) and a
 * positive top coefficient. Two values are equal iff their canonical forms
 * are identical.
 */

#include <ostream>
#include <string>
#include <utility>

#include "vertexcalc/half_laurent.hpp"

namespace vertexcalc {

class QRational {
 public:
  QRational() : num_(), den_(1) {}
  QRational(const BigRational& c) : num_(c), den_(1) { canonicalize(); }  // NOLINT
  QRational(int c) : QRational(BigRational(c)) {}         // NOLINT
  QRational(const HalfLaurent& p) : num_(p), den_(1) { canonicalize(); }  // NOLINT
  QRational(const HalfLaurent& num, const HalfLaurent& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DomainError("QRational with zero denominator");
    canonicalize();
  }

  const HalfLaurent& num() const { return num_; }
  const HalfLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// True when the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }

  /// The value as a Laurent polynomial; throws unless is_laurent().
  HalfLaurent as_laurent() const {
    if (!is_laurent()) throw DomainError("QRational is not a Laurent polynomial");
    HalfLaurent r = num_;
    r /= den_.coeff(0);
    return r;
  }

  QRational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero QRational");
    return QRational(den_, num_);
  }

  BigRational evaluate(const BigRational& x) const {
    BigRational d = den_.evaluate(x);
    if (d == 0) throw DomainError("QRational evaluated at a pole");
    return num_.evaluate(x) / d;
  }

  QRational operator-() const {
    QRational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend QRational operator+(const QRational& a, const QRational& b) {
    if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
    return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }
  friend QRational operator*(const QRational& a, const QRational& b) {
    return QRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend QRational operator/(const QRational& a, const QRational& b) {
    if (b.is_zero()) throw DomainError("QRational division by zero");
    return QRational(a.num_ * b.den_, a.den_ * b.num_);
  }
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  QRational& operator/=(const QRational& o) { return *this = *this / o; }

  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  QRational pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return QRational(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = HalfLaurent(1);
      return;
    }
    // value = (N / nd) x^{nl} / ((D / dd) x^{dl}) = (N * dd) / (D * nd) * x^{nl - dl}
    detail::IntPoly n = num_.int_coeffs();
    detail::IntPoly d = den_.int_coeffs();
    const int shift = num_.low_exponent() - den_.low_exponent();
    const BigInt nd = num_.denominator();
    const BigInt dd = den_.denominator();
    if (dd != 1)
      for (auto& c : n) c *= dd;
    if (nd != 1)
      for (auto& c : d) c *= nd;
    if (d.size() > 1 && n.size() > 1) {
      detail::IntPoly g = detail::gcd(n, d);
      if (g.size() > 1) {
        detail::IntPoly qn, qd;
        detail::divide_exact(n, g, qn);
        detail::divide_exact(d, g, qd);
        n = std::move(qn);
        d = std::move(qd);
      }
    }
    BigInt c = detail::content(n);
    BigInt cd = detail::content(d);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
    if (d.back() < 0) c = -c;
    for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    num_ = HalfLaurent::from_int_poly(std::move(n), shift);
    den_ = HalfLaurent::from_int_poly(std::move(d), 0);
  }

  HalfLaurent num_;
  HalfLaurent den_;
};

inline QRational operator/(const HalfLaurent& a, const HalfLaurent& b) { return QRational(a, b); }

/// Plain polynomial text, e.g. "x^2 - 1/3*x^-1"; "0" for zero.
inline std::string to_string(const HalfLaurent& p) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [k, c] = *it;
    BigRational a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      s += to_string(a);
      continue;
    }
    if (a != 1) s += to_string(a) + "*";
    s += k == 1 ? std::string("x") : "x^" + std::to_string(k);
  }
  return s;
}

inline std::string to_string(const QRational& v) {
  if (v.den() == HalfLaurent(1)) return to_string(v.num());
  return "(" + to_string(v.num()) + ")/(" + to_string(v.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const HalfLaurent& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const QRational& v) { return os << to_string(v); }

}  // namespace vertexcalc
