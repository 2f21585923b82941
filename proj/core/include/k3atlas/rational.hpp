#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "k3atlas/integer.hpp"

namespace k3atlas {

// Exact fraction num/den, always in canonical form: den > 0 and
// gcd(|num|, den) = 1. Every constructor and operation re-establishes the
// canonical form, so equality is plain structural equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT
  // Throws DivisionByZero when den == 0.
  Rational(Integer num, Integer den);

  // Accepts "p", "-p", "p/q" (q may carry a sign; result is reduced).
  static Rational parse(std::string_view text);

  const Integer &num() const noexcept { return num_; }
  const Integer &den() const noexcept { return den_; }

  int sign() const noexcept { return sgn(num_); }
  bool is_zero() const noexcept { return sgn(num_) == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const;
  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  // Throws DivisionByZero when rhs == 0.
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

  Rational reciprocal() const;
  Rational abs() const;
  Rational pow(unsigned e) const;

  // "p" for integers, "p/q" otherwise; always lowest terms.
  std::string to_string() const;

  // Largest integer <= value, and nearest integer (ties away from zero).
  Integer floor() const;
  Integer round() const;

  std::size_t hash() const noexcept;

 private:
  struct Canonical {};
  Rational(Integer num, Integer den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Integer num_;
  Integer den_;
};

// Nonnegative rational square root of x if x is the square of a rational,
// empty otherwise (negative inputs included). Uses exact integer square
// roots of numerator and denominator separately.
std::optional<Rational> rational_sqrt(const Rational &x);

// Height max(|num|, den), the size measure used by the point search.
Integer height(const Rational &x);

std::ostream &operator<<(std::ostream &os, const Rational &x);
inline std::string to_string(const Rational &x) { return x.to_string(); }

}  // namespace k3atlas

template <>
struct std::hash<k3atlas::Rational> {
  std::size_t operator()(const k3atlas::Rational &x) const noexcept { return x.hash(); }
};
