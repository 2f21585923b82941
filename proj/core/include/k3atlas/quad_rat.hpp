#pragma once

#include <ostream>
#include <string>

#include "k3atlas/rational.hpp"

namespace k3atlas {

// a + b*sqrt(m) in the real quadratic field Q(sqrt(m)), m > 1 squarefree.
// The radicand travels with each value; combining values with different
// radicands throws MixedRadicand.
class QuadRat {
 public:
  // Throws std::invalid_argument unless m > 1 and squarefree.
  QuadRat(Integer m, Rational a, Rational b = Rational());

  // The rational c viewed inside the same field as `like`.
  static QuadRat embed(const QuadRat &like, Rational c) {
    return QuadRat(like.m_, std::move(c), Rational(), Trusted{});
  }

  const Integer &radicand() const noexcept { return m_; }
  const Rational &a() const noexcept { return a_; }
  const Rational &b() const noexcept { return b_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }

  QuadRat conj() const { return QuadRat(m_, a_, -b_, Trusted{}); }
  // a^2 - m b^2
  Rational norm() const;

  QuadRat operator-() const { return QuadRat(m_, -a_, -b_, Trusted{}); }
  QuadRat &operator+=(const QuadRat &rhs);
  QuadRat &operator-=(const QuadRat &rhs);
  QuadRat &operator*=(const QuadRat &rhs);
  // Multiplies by the conjugate; throws DivisionByZero when rhs == 0.
  QuadRat &operator/=(const QuadRat &rhs);

  friend QuadRat operator+(QuadRat x, const QuadRat &y) { return x += y; }
  friend QuadRat operator-(QuadRat x, const QuadRat &y) { return x -= y; }
  friend QuadRat operator*(QuadRat x, const QuadRat &y) { return x *= y; }
  friend QuadRat operator/(QuadRat x, const QuadRat &y) { return x /= y; }

  // Values from different fields compare unequal.
  friend bool operator==(const QuadRat &x, const QuadRat &y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  // "a + b*sqrt(m)" with a, b as p/q.
  std::string to_string() const;

 private:
  struct Trusted {};
  QuadRat(Integer m, Rational a, Rational b, Trusted)
      : m_(std::move(m)), a_(std::move(a)), b_(std::move(b)) {}
  void require_same_field(const QuadRat &rhs) const;

  Integer m_;
  Rational a_;
  Rational b_;
};

std::ostream &operator<<(std::ostream &os, const QuadRat &x);
inline std::string to_string(const QuadRat &x) { return x.to_string(); }

}  // namespace k3atlas
