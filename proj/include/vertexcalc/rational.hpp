#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace vertexcalc {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// "p/q" or "p"; the result is canonical.
inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  BigRational r;
  if (r.set_str(s, 10) != 0) throw DomainError("malformed rational literal: " + s);
  if (r.get_den() == 0) throw DomainError("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

/// a/b in canonical form (mpq_class(a, b) alone does not reduce).
inline BigRational ratio(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DomainError("ratio with zero denominator");
  BigRational r(a, b);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRational& r) { return r.get_str(10); }
inline std::string to_string(const BigInt& z) { return z.get_str(10); }

inline BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline BigInt int_pow(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRational rational_pow(const BigRational& base, int e) {
  BigRational r(1);
  BigRational b = base;
  if (e < 0) {
    if (b == 0) throw DomainError("zero to a negative power");
    b = 1 / b;
    e = -e;
  }
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace vertexcalc
