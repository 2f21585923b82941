#include "k3atlas/fixed_real.hpp"

#include <cmath>
#include <stdexcept>

namespace k3atlas {

namespace {

Integer pow2(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

// round(v / 2^k), reporting whether anything was discarded.
Integer shift_round(const Integer &v, unsigned long k, bool &inexact) {
  if (k == 0) {
    inexact = false;
    return v;
  }
  Integer q, r;
  Integer biased = v + pow2(k - 1);
  mpz_fdiv_q_2exp(q.get_mpz_t(), biased.get_mpz_t(), k);
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  inexact = sgn(r) != 0;
  return q;
}

Integer shift_ceil(const Integer &v, unsigned long k) {
  Integer q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), v.get_mpz_t(), k);
  return q;
}

Integer cdiv(const Integer &a, const Integer &b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// round(a / b) for b > 0.
Integer div_round(const Integer &a, const Integer &b, bool &inexact) {
  Integer q, r;
  Integer twice = 2 * a + b;
  Integer twice_b = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twice_b.get_mpz_t());
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  inexact = sgn(r) != 0;
  return q;
}

std::string format_mpf(const Integer &mant, int prec, int digits) {
  if (sgn(mant) == 0) return "0";
  mpf_class v(0, static_cast<mp_bitcnt_t>(prec) + 64);
  mpf_set_z(v.get_mpf_t(), mant.get_mpz_t());
  mpf_div_2exp(v.get_mpf_t(), v.get_mpf_t(), static_cast<mp_bitcnt_t>(prec));
  mp_exp_t e10 = 0;
  std::string d = v.get_str(e10, 10, static_cast<std::size_t>(digits));
  std::string sign;
  if (!d.empty() && d[0] == '-') {
    sign = "-";
    d.erase(0, 1);
  }
  std::string out = sign + d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  out += "e" + std::to_string(static_cast<long>(e10) - 1);
  return out;
}

}  // namespace

int FixedReal::check_precision(int p) {
  if (p < 1) throw std::invalid_argument("FixedReal precision must be >= 1");
  return p;
}

FixedReal::FixedReal(Integer mantissa, int precision, Integer err_ulps)
    : mant_(std::move(mantissa)), err_(std::move(err_ulps)), prec_(check_precision(precision)) {
  if (sgn(err_) < 0) throw std::invalid_argument("negative error radius");
}

FixedReal FixedReal::from_integer(const Integer &n, int precision) {
  Integer m;
  mpz_mul_2exp(m.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(check_precision(precision)));
  return FixedReal(std::move(m), precision, 0, Raw{});
}

FixedReal FixedReal::from_rational(const Rational &q, int precision) {
  Integer scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), q.num().get_mpz_t(),
               static_cast<mp_bitcnt_t>(check_precision(precision)));
  bool inexact = false;
  Integer m = div_round(scaled, q.den(), inexact);
  return FixedReal(std::move(m), precision, inexact ? 1 : 0, Raw{});
}

FixedReal FixedReal::with_precision(int bits) const {
  check_precision(bits);
  if (bits >= prec_) {
    const auto k = static_cast<mp_bitcnt_t>(bits - prec_);
    Integer m, e;
    mpz_mul_2exp(m.get_mpz_t(), mant_.get_mpz_t(), k);
    mpz_mul_2exp(e.get_mpz_t(), err_.get_mpz_t(), k);
    return FixedReal(std::move(m), bits, std::move(e), Raw{});
  }
  const auto k = static_cast<unsigned long>(prec_ - bits);
  bool inexact = false;
  Integer m = shift_round(mant_, k, inexact);
  Integer e = shift_ceil(err_, k) + (inexact ? 1 : 0);
  return FixedReal(std::move(m), bits, std::move(e), Raw{});
}

void FixedReal::require_same_precision(const FixedReal &rhs) const {
  if (prec_ != rhs.prec_)
    throw PrecisionError("FixedReal precision mismatch: " + std::to_string(prec_) + " vs " +
                         std::to_string(rhs.prec_));
}

FixedReal &FixedReal::operator+=(const FixedReal &rhs) {
  require_same_precision(rhs);
  mant_ += rhs.mant_;
  err_ += rhs.err_;
  return *this;
}

FixedReal &FixedReal::operator-=(const FixedReal &rhs) {
  require_same_precision(rhs);
  mant_ -= rhs.mant_;
  err_ += rhs.err_;
  return *this;
}

FixedReal &FixedReal::operator*=(const FixedReal &rhs) {
  require_same_precision(rhs);
  const auto p = static_cast<unsigned long>(prec_);
  // |xy - x~y~| <= |x~| e_y + |y~| e_x + e_x e_y
  Integer spread = ::abs(mant_) * rhs.err_ + ::abs(rhs.mant_) * err_ + err_ * rhs.err_;
  bool inexact = false;
  Integer prod = mant_ * rhs.mant_;
  mant_ = shift_round(prod, p, inexact);
  err_ = shift_ceil(spread, p) + (inexact ? 1 : 0);
  return *this;
}

FixedReal &FixedReal::operator/=(const FixedReal &rhs) {
  require_same_precision(rhs);
  const Integer den = ::abs(rhs.mant_);
  if (den <= rhs.err_) throw PrecisionError("divisor indistinguishable from zero");
  const auto p = static_cast<mp_bitcnt_t>(prec_);
  // |x/y - x~/y~| <= (e_x |y~| + |x~| e_y) / (|y~| (|y~| - e_y))
  Integer spread = err_ * den + ::abs(mant_) * rhs.err_;
  mpz_mul_2exp(spread.get_mpz_t(), spread.get_mpz_t(), p);
  Integer scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), mant_.get_mpz_t(), p);
  if (sgn(rhs.mant_) < 0) scaled = -scaled;
  bool inexact = false;
  mant_ = div_round(scaled, den, inexact);
  Integer spread_den = den * (den - rhs.err_);
  err_ = cdiv(spread, spread_den) + (inexact ? 1 : 0);
  return *this;
}

FixedReal &FixedReal::operator*=(const Integer &k) {
  mant_ *= k;
  err_ *= ::abs(k);
  return *this;
}

FixedReal &FixedReal::operator/=(const Integer &k) {
  if (sgn(k) == 0) throw PrecisionError("FixedReal division by integer zero");
  const Integer den = ::abs(k);
  bool inexact = false;
  Integer m = sgn(k) < 0 ? Integer(-mant_) : mant_;
  mant_ = div_round(m, den, inexact);
  err_ = cdiv(err_, den) + (inexact ? 1 : 0);
  return *this;
}

FixedReal FixedReal::abs() const { return FixedReal(::abs(mant_), prec_, err_, Raw{}); }

bool FixedReal::certainly_below_pow2(long log2_bound) const {
  const long shift = static_cast<long>(prec_) + log2_bound;
  if (shift < 0) return false;  // bound smaller than one ulp
  return magnitude_bound_ulps() < pow2(static_cast<unsigned long>(shift));
}

Integer FixedReal::round_to_integer() const {
  bool inexact = false;
  return shift_round(mant_, static_cast<unsigned long>(prec_), inexact);
}

double FixedReal::to_double() const {
  long e = 0;
  const double d = mpz_get_d_2exp(&e, mant_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(e - prec_));
}

std::string FixedReal::to_scientific(int digits) const { return format_mpf(mant_, prec_, digits); }

std::string FixedReal::to_fixed(int digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  bool inexact = false;
  Integer v = shift_round(Integer(mant_ * scale), static_cast<unsigned long>(prec_), inexact);
  const bool neg = sgn(v) < 0;
  std::string s = Integer(::abs(v)).get_str();
  if (s.size() <= static_cast<std::size_t>(digits))
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (neg ? "-" : "") + s;
}

std::string FixedReal::radius_string(int digits) const { return format_mpf(err_, prec_, digits); }

Ordering3 compare(const FixedReal &a, const FixedReal &b) {
  const FixedReal d = a - b;
  if (::abs(d.mantissa()) <= d.error_ulps()) return Ordering3::indistinguishable;
  return sgn(d.mantissa()) < 0 ? Ordering3::less : Ordering3::greater;
}

FixedReal sqrt(const FixedReal &x) {
  const int prec = x.precision();
  const auto p = static_cast<mp_bitcnt_t>(prec);
  const Integer &m = x.mantissa();
  const Integer &e = x.error_ulps();
  if (sgn(m) < 0 && -m > e) throw PrecisionError("square root of a negative value");
  if (sgn(m) <= 0 || m <= e) {
    // The true value lies in [0, m + e]; report the midpoint-free bound.
    Integer top = m + e;
    if (sgn(top) < 0) top = 0;
    mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), p);
    return FixedReal(0, prec, isqrt(top) + 1);
  }
  Integer scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), m.get_mpz_t(), p);
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
  // Floor root is within one ulp; |sqrt(x) - sqrt(x~)| <= e_x / sqrt(x~).
  Integer err = sgn(rem) != 0 ? 1 : 0;
  if (sgn(e) != 0) {
    Integer num;
    mpz_mul_2exp(num.get_mpz_t(), e.get_mpz_t(), p);
    err += cdiv(num, root);
  }
  return FixedReal(std::move(root), prec, std::move(err));
}

FixedReal cbrt(const FixedReal &x) {
  const int prec = x.precision();
  const auto p2 = static_cast<mp_bitcnt_t>(2 * prec);
  const Integer &m = x.mantissa();
  const Integer &e = x.error_ulps();
  const bool neg = sgn(m) < 0;
  Integer scaled;
  Integer am = ::abs(m);
  mpz_mul_2exp(scaled.get_mpz_t(), am.get_mpz_t(), p2);
  Integer root;
  const bool exact = mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), 3) != 0;
  Integer err = exact ? 0 : 1;
  if (sgn(e) != 0) {
    if (am > e && sgn(root) > 0) {
      // |cbrt(x) - cbrt(x~)| <= e_x / cbrt(x~)^2
      Integer num;
      mpz_mul_2exp(num.get_mpz_t(), e.get_mpz_t(), p2);
      err += cdiv(num, Integer(root * root));
    } else {
      // Hoelder bound |cbrt(a) - cbrt(b)| <= 2 |a - b|^(1/3).
      Integer num;
      mpz_mul_2exp(num.get_mpz_t(), e.get_mpz_t(), p2);
      Integer r;
      mpz_root(r.get_mpz_t(), num.get_mpz_t(), 3);
      err += 2 * (r + 1);
    }
  }
  return FixedReal(neg ? Integer(-root) : root, prec, std::move(err));
}

FixedReal exp(const FixedReal &x) {
  const int prec = x.precision();
  const Integer &m = x.mantissa();
  const Integer &e = x.error_ulps();
  // Input error beyond one unit would make e^err - 1 <= 2 err invalid.
  if (e > pow2(static_cast<unsigned long>(prec)))
    throw PrecisionError("exp argument error radius exceeds 1");

  // Reduce: r = x / 2^s with |r| < 2^-8, then exp(x) = exp(r)^(2^s).
  const long mag_bits = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
  const long s = std::max(0L, mag_bits - prec + 8);
  const double xv = x.to_double();
  const long grow = xv > 0 ? static_cast<long>(std::ceil(xv * 1.4426950408889634)) + 1 : 0;
  const long log_p = static_cast<long>(std::ceil(std::log2(static_cast<double>(prec) + 2)));
  const long wp = prec + s + 2 * log_p + 32 + grow;
  const auto w = static_cast<unsigned long>(wp);

  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(wp - prec - s));
  const Integer one = pow2(w);
  Integer sum = one;
  Integer term = one;
  bool inexact = false;
  for (unsigned long k = 1; sgn(term) != 0; ++k) {
    Integer t = term * r;
    term = shift_round(t, w, inexact);
    Integer kk = k;
    term = div_round(term, kk, inexact);
    sum += term;
  }
  for (long i = 0; i < s; ++i) {
    Integer sq = sum * sum;
    sum = shift_round(sq, w, inexact);
  }
  Integer mant = shift_round(sum, w - static_cast<unsigned long>(prec), inexact);
  // Evaluation error is below one ulp at `prec`; rounding adds half an ulp.
  Integer err = 2;
  if (sgn(e) != 0) {
    // |e^x - e^x~| <= e^x~ (e^e_x - 1) <= 2 e^x~ e_x for e_x <= 1
    Integer spread = 2 * (::abs(mant) + 1) * e;
    err += shift_ceil(spread, static_cast<unsigned long>(prec));
  }
  return FixedReal(std::move(mant), prec, std::move(err));
}

namespace {

// arctan(1/n) * 2^w by the alternating series; absolute error below
// (terms + 1) units.
Integer arctan_inverse(unsigned long n, unsigned long w) {
  const Integer n2 = n * n;
  Integer power = pow2(w) / n;  // 2^w / n^(2k+1)
  Integer sum = power;
  for (unsigned long k = 1; sgn(power) != 0; ++k) {
    power /= n2;
    Integer t = power / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= t;
    } else {
      sum += t;
    }
  }
  return sum;
}

}  // namespace

FixedReal pi(int precision) {
  if (precision < 1) throw std::invalid_argument("FixedReal precision must be >= 1");
  const auto w = static_cast<unsigned long>(precision) + 16 + 32;
  Integer v = 16 * arctan_inverse(5, w) - 4 * arctan_inverse(239, w);
  bool inexact = false;
  Integer mant = shift_round(v, w - static_cast<unsigned long>(precision), inexact);
  return FixedReal(std::move(mant), precision, 1);
}

}  // namespace k3atlas
