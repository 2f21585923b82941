#pragma once

#include <string>

#include "k3atlas/integer.hpp"
#include "k3atlas/rational.hpp"

namespace k3atlas {

// Raised when a FixedReal operation leaves its domain: division by a value
// indistinguishable from zero, square root of a negative, mismatched
// precisions, or error growth that would make the result meaningless.
class PrecisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Ordering3 { less, greater, indistinguishable };

// Fixed-point binary number mantissa * 2^-P with a tracked error radius.
//
// Invariant: if the inputs of an operation satisfy |stored - true| <= err *
// 2^-P, so does the output. The radius `err` is an integer count of ulps
// (2^-P). Every operation adds its own rounding error (at most one ulp for
// the arithmetic operations, two for the transcendental ones) to the
// propagated input error.
class FixedReal {
 public:
  explicit FixedReal(int precision) : prec_(check_precision(precision)) {}
  FixedReal(Integer mantissa, int precision, Integer err_ulps = 0);

  static FixedReal from_integer(const Integer &n, int precision);
  static FixedReal from_rational(const Rational &q, int precision);

  int precision() const noexcept { return prec_; }
  const Integer &mantissa() const noexcept { return mant_; }
  const Integer &error_ulps() const noexcept { return err_; }
  bool is_exact() const noexcept { return sgn(err_) == 0; }

  // Re-expresses the value with `bits` of fraction. Narrowing rounds and
  // widens the radius; widening is exact.
  FixedReal with_precision(int bits) const;

  FixedReal operator-() const { return FixedReal(-mant_, prec_, err_, Raw{}); }
  FixedReal &operator+=(const FixedReal &rhs);
  FixedReal &operator-=(const FixedReal &rhs);
  FixedReal &operator*=(const FixedReal &rhs);
  FixedReal &operator/=(const FixedReal &rhs);
  FixedReal &operator*=(const Integer &k);
  FixedReal &operator/=(const Integer &k);

  friend FixedReal operator+(FixedReal a, const FixedReal &b) { return a += b; }
  friend FixedReal operator-(FixedReal a, const FixedReal &b) { return a -= b; }
  friend FixedReal operator*(FixedReal a, const FixedReal &b) { return a *= b; }
  friend FixedReal operator/(FixedReal a, const FixedReal &b) { return a /= b; }
  friend FixedReal operator*(FixedReal a, const Integer &k) { return a *= k; }
  friend FixedReal operator*(const Integer &k, FixedReal a) { return a *= k; }
  friend FixedReal operator/(FixedReal a, const Integer &k) { return a /= k; }

  FixedReal abs() const;
  // Upper bound of |true value| in ulps: |mantissa| + err.
  Integer magnitude_bound_ulps() const { return ::abs(mant_) + err_; }
  // True when every value inside the error ball has |v| < 2^log2_bound.
  bool certainly_below_pow2(long log2_bound) const;
  // Nearest integer to the stored value (ties away from zero).
  Integer round_to_integer() const;

  double to_double() const;
  // Stored value in scientific notation with `digits` significant digits.
  std::string to_scientific(int digits = 6) const;
  // Stored value with `digits` decimals after the point.
  std::string to_fixed(int digits) const;
  // Error radius err * 2^-P in scientific notation.
  std::string radius_string(int digits = 3) const;

 private:
  struct Raw {};
  FixedReal(Integer mantissa, int precision, Integer err, Raw)
      : mant_(std::move(mantissa)), err_(std::move(err)), prec_(precision) {}
  static int check_precision(int p);
  void require_same_precision(const FixedReal &rhs) const;

  Integer mant_;
  Integer err_;
  int prec_;
};

Ordering3 compare(const FixedReal &a, const FixedReal &b);

FixedReal sqrt(const FixedReal &x);
// Real cube root; negative inputs give negative results.
FixedReal cbrt(const FixedReal &x);
FixedReal exp(const FixedReal &x);
// pi to the requested precision via Machin's arctangent formula, carried
// internally with 48 guard bits.
FixedReal pi(int precision);

}  // namespace k3atlas
