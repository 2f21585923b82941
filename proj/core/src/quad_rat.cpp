#include "k3atlas/quad_rat.hpp"

#include <stdexcept>

#include "k3atlas/errors.hpp"

namespace k3atlas {

QuadRat::QuadRat(Integer m, Rational a, Rational b)
    : m_(std::move(m)), a_(std::move(a)), b_(std::move(b)) {
  if (m_ <= 1 || !is_squarefree(m_))
    throw std::invalid_argument("radicand must be squarefree and > 1, got " + m_.get_str());
}

void QuadRat::require_same_field(const QuadRat &rhs) const {
  if (m_ != rhs.m_)
    throw MixedRadicand("sqrt(" + m_.get_str() + ") and sqrt(" + rhs.m_.get_str() + ") mixed");
}

Rational QuadRat::norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

QuadRat &QuadRat::operator+=(const QuadRat &rhs) {
  require_same_field(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadRat &QuadRat::operator-=(const QuadRat &rhs) {
  require_same_field(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadRat &QuadRat::operator*=(const QuadRat &rhs) {
  require_same_field(rhs);
  Rational a = a_ * rhs.a_ + Rational(m_) * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadRat &QuadRat::operator/=(const QuadRat &rhs) {
  require_same_field(rhs);
  const Rational n = rhs.norm();
  // m is not a square, so the norm vanishes only at zero.
  if (n.is_zero()) throw DivisionByZero("division by zero in Q(sqrt(" + m_.get_str() + "))");
  const QuadRat c = rhs.conj();
  *this *= c;
  a_ /= n;
  b_ /= n;
  return *this;
}

std::string QuadRat::to_string() const {
  const std::string root = "sqrt(" + m_.get_str() + ")";
  if (b_.is_zero()) return a_.to_string();
  const Rational mag = b_.abs();
  const std::string term = mag == Rational(1) ? root : mag.to_string() + "*" + root;
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + term;
  return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + term;
}

std::ostream &operator<<(std::ostream &os, const QuadRat &x) { return os << x.to_string(); }

}  // namespace k3atlas
