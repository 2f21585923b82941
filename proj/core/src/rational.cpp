#include "k3atlas/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "k3atlas/errors.hpp"

namespace k3atlas {

namespace {

std::size_t hash_integer(const Integer &n) {
  // Low limb and size are enough to spread canonical values.
  const auto *z = n.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  if (z->_mp_size != 0) h ^= static_cast<std::size_t>(z->_mp_d[0]) * 0x9E3779B97F4A7C15ull;
  return h;
}

}  // namespace

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw DivisionByZero("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) throw std::invalid_argument("malformed rational: " + std::string(text));
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const { return Rational(-num_, den_, Canonical{}); }

Rational &Rational::operator+=(const Rational &rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
  // rhs may alias *this.
  Integer n = num_ * rhs.den_;
  Integer d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero("reciprocal of zero");
  if (sgn(num_) < 0) return Rational(-den_, -num_, Canonical{});
  return Rational(den_, num_, Canonical{});
}

Rational Rational::abs() const { return Rational(::abs(num_), den_, Canonical{}); }

Rational Rational::pow(unsigned e) const {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), e);
  return Rational(std::move(n), std::move(d), Canonical{});
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

Integer Rational::round() const {
  // floor((2|num| + den) / (2 den)) with the sign reapplied.
  Integer a = ::abs(num_);
  Integer q;
  Integer twice_num = 2 * a + den_;
  Integer twice_den = 2 * den_;
  mpz_fdiv_q(q.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
  return sgn(num_) < 0 ? Integer(-q) : q;
}

std::size_t Rational::hash() const noexcept {
  return hash_integer(num_) * 31u + hash_integer(den_);
}

std::optional<Rational> rational_sqrt(const Rational &x) {
  if (x.sign() < 0) return std::nullopt;
  auto n = exact_sqrt(x.num());
  if (!n) return std::nullopt;
  auto d = exact_sqrt(x.den());
  if (!d) return std::nullopt;
  // Square roots of coprime integers stay coprime.
  return Rational(std::move(*n), std::move(*d));
}

Integer height(const Rational &x) {
  Integer a = ::abs(x.num());
  return a > x.den() ? a : x.den();
}

std::ostream &operator<<(std::ostream &os, const Rational &x) { return os << x.to_string(); }

}  // namespace k3atlas
