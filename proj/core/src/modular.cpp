#include "k3atlas/modular.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "k3atlas/curves.hpp"
#include "k3atlas/maps.hpp"

namespace k3atlas {

namespace {

long ceil_half(int p) { return (p + 1) / 2; }
constexpr std::size_t kMaxCandidates = 64;

long ceil_quarter(int p) { return (p + 3) / 4; }

double log2_ulps(const Integer &ulps, int prec) {
  if (sgn(ulps) == 0) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpz_get_d_2exp(&e, ulps.get_mpz_t());
  return std::log2(m) + static_cast<double>(e - prec);
}

// X^3 - c2 X^2 + c1 X - c0 with integer coefficients.
FixedReal monic_cubic(const FixedReal &x, const Integer &c2, const Integer &c1, const Integer &c0) {
  const int p = x.precision();
  FixedReal acc = x - FixedReal::from_integer(c2, p);
  acc *= x;
  acc += FixedReal::from_integer(c1, p);
  acc *= x;
  acc -= FixedReal::from_integer(c0, p);
  return acc;
}

Integer require_integer(const Rational &r, const char *what) {
  if (!r.is_integer()) throw std::invalid_argument(std::string(what) + " is not integral");
  return r.num();
}

FixedReal w_working(const ModularContext &ctx) {
  const int wp = ctx.working_precision();
  FixedReal prod = FixedReal::from_integer(1, wp);
  FixedReal power = ctx.t();
  const FixedReal one = FixedReal::from_integer(1, wp);
  for (int n = 1; n <= ctx.terms(); ++n) {
    if (n > 1) power *= ctx.t();
    prod *= (n % 2 == 0) ? one + power : one - power;
  }
  FixedReal w = prod * prod * prod;
  w *= ctx.t_eighth();
  w *= Integer(4);
  // Truncation tail: relative deviation < 7 t^(N+1) < 2^-(P+5) by the
  // choice of N, and W < 4.
  return FixedReal(w.mantissa(), wp, w.error_ulps() + 1);
}

}  // namespace

int default_precision(long d) {
  const double bits = 1.5 * std::numbers::pi * std::sqrt(static_cast<double>(d)) / std::numbers::ln2;
  return std::max(128, static_cast<int>(std::ceil(bits)) + 64);
}

ModularContext::ModularContext(long d, std::optional<int> bits)
    : d_(d), prec_(0), terms_(0), t_(1), t8_(1) {
  if (d <= 0) throw std::invalid_argument("d must be positive");
  if (d % 8 != 3) throw std::invalid_argument("d must be 3 mod 8, got " + std::to_string(d));
  if (!is_squarefree(Integer(d))) throw std::invalid_argument("d must be squarefree");
  prec_ = bits.value_or(default_precision(d));
  if (prec_ < 16) throw std::invalid_argument("precision must be at least 16 bits");

  const double decay_bits = std::numbers::pi * std::sqrt(static_cast<double>(d)) / std::numbers::ln2;
  terms_ = static_cast<int>(std::ceil(prec_ / decay_bits)) + 4;
  // 7 t^(N+1) < 2^-(P+8) must hold with margin in double arithmetic.
  if ((terms_ + 1) * decay_bits - 3.0 < prec_ + 8 + 1)
    throw std::logic_error("series truncation bound violated");

  const int wp = working_precision();
  const FixedReal pid = pi(wp) * sqrt(FixedReal::from_integer(d, wp));
  t_ = exp(-pid);
  t8_ = exp(-(pid / Integer(8)));
}

FixedReal schlafli_w(const ModularContext &ctx) {
  return w_working(ctx).with_precision(ctx.precision());
}

RecoveredPair recover_pair(const ModularContext &ctx, long bound) {
  const int p = ctx.precision();
  const int wp = ctx.working_precision();
  const FixedReal w = w_working(ctx);
  // b3 = C + a3 W with C = (8 - W^3) / (2W)
  const FixedReal c = (FixedReal::from_integer(8, wp) - w * w * w) / (w * Integer(2));

  const auto shift = static_cast<mp_bitcnt_t>(wp);
  Integer threshold;  // 2^-ceil(P/4) in working ulps
  mpz_ui_pow_ui(threshold.get_mpz_t(), 2, static_cast<unsigned long>(wp - ceil_quarter(p)));
  Integer half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(wp - 1));
  Integer unit = half * 2;

  // W a rational integer r: C + a W has the same fractional part for every
  // a, so the scan cannot separate candidates. All conjugates of W then
  // coincide, and the cubic must be (X - r)^3, forcing r = 2, (a3, b3) = (3, 6).
  {
    Integer wfrac;
    mpz_fdiv_r_2exp(wfrac.get_mpz_t(), w.mantissa().get_mpz_t(), shift);
    if (wfrac > half) wfrac = unit - wfrac;
    if (wfrac < threshold) {
      const Integer r = w.round_to_integer();
      const FixedReal defect = (w - FixedReal::from_integer(r, wp)).abs().with_precision(p);
      if (r == 2 && is_on_curve(CurveId::K3, RatPoint{Rational(3), Rational(6)}))
        return {Integer(3), Integer(6), defect};
      throw RecoveryError(RecoveryError::Kind::no_pair,
                          "W is integral but not 2 for d=" + std::to_string(ctx.d()),
                          log2_ulps(wfrac, wp));
    }
  }

  Integer v = c.mantissa() - Integer(bound) * w.mantissa();
  Integer frac, best = unit;
  std::vector<long> candidates;
  for (long a = -bound; a <= bound; ++a, v += w.mantissa()) {
    // distance from v to the nearest multiple of 2^wp
    mpz_fdiv_r_2exp(frac.get_mpz_t(), v.get_mpz_t(), shift);
    if (frac > half) frac = unit - frac;
    if (frac < best) best = frac;
    if (frac < threshold && candidates.size() < kMaxCandidates) candidates.push_back(a);
  }

  std::vector<RecoveredPair> on_curve;
  for (long a : candidates) {
    FixedReal val = c + w * Integer(a);
    Integer b = val.round_to_integer();
    FixedReal defect = (val - FixedReal::from_integer(b, wp)).abs();
    if (is_on_curve(CurveId::K3, RatPoint{Rational(Integer(a)), Rational(b)}))
      on_curve.push_back({Integer(a), b, defect.with_precision(p)});
  }
  const double best_log2 = log2_ulps(best, wp);
  if (on_curve.size() == 1) return on_curve.front();
  if (on_curve.size() > 1)
    throw RecoveryError(RecoveryError::Kind::multiple_candidates,
                        "several integral pairs on K3 for d=" + std::to_string(ctx.d()),
                        best_log2);
  // A uniform defect over 2*bound+1 trials has expected minimum around
  // 1/(2*bound+1); far below that is a near miss.
  const double chance = -std::log2(2.0 * static_cast<double>(bound) + 1.0);
  const bool near_miss = !candidates.empty() || best_log2 < chance - 8.0;
  throw RecoveryError(
      near_miss ? RecoveryError::Kind::precision_exhausted : RecoveryError::Kind::no_pair,
      "no integral pair on K3 for d=" + std::to_string(ctx.d()) + " (best defect 2^" +
          std::to_string(best_log2) + ")",
      best_log2);
}

namespace {

struct JWorking {
  FixedReal u;
  FixedReal value;
};

JWorking j_working(const FixedReal &w) {
  const int wp = w.precision();
  FixedReal u = w * w;
  u *= u;
  u *= u;
  u /= Integer(16);
  FixedReal value = u * u - u * Integer(48) + FixedReal::from_integer(768, wp) -
                    FixedReal::from_integer(4096, wp) / u;
  return {u, value};
}

}  // namespace

JInvariant j_invariant(const ModularContext &ctx) {
  const int p = ctx.precision();
  const JWorking jw = j_working(w_working(ctx));
  const Integer j = jw.value.round_to_integer();
  const FixedReal defect = (jw.value - FixedReal::from_integer(j, jw.value.precision())).abs();
  // The stored defect itself, not its error ball, is the integrality test.
  if (!FixedReal(defect.mantissa(), defect.precision()).certainly_below_pow2(-ceil_quarter(p)))
    throw IntegralityError("j(d=" + std::to_string(ctx.d()) + ") is not within 2^-" +
                           std::to_string(ceil_quarter(p)) + " of an integer");
  return {j, jw.value.with_precision(p), defect.with_precision(p), exact_cbrt(j)};
}

std::optional<TowerLabels> published_tower_labels(long d) {
  std::optional<int> label = static_cast<int>(d);
  std::optional<RatPoint> k3, k1;
  for (const auto &r : published_points(CurveId::K3))
    if (r.d == label) k3 = r.pt;
  for (const auto &r : published_points(CurveId::K1))
    if (r.d == label) k1 = r.pt;
  if (!k3 || !k1) return std::nullopt;
  return TowerLabels{k3->u.num(), k3->v.num(), k1->u.num(), k1->v.num()};
}

bool TowerReport::all_passed() const {
  if (!pair_matches_labels) return false;
  for (const auto &[id, r] : residuals)
    if (!r.passed) return false;
  return true;
}

TowerReport verify_tower(const ModularContext &ctx, const TowerLabels &labels) {
  const int p = ctx.precision();
  const int wp = ctx.working_precision();
  const FixedReal w = w_working(ctx);
  const JWorking jw = j_working(w);
  const Integer j = jw.value.round_to_integer();
  const std::optional<Integer> gamma2 = exact_cbrt(j);

  const FixedReal sqrt2 = sqrt(FixedReal::from_integer(2, wp));
  const FixedReal t = w * w / Integer(2);
  const FixedReal eps = cbrt(w / sqrt2);
  const FixedReal s = sqrt2 * eps;
  const FixedReal z = eps * eps;
  const FixedReal v = t * cbrt(t);

  const AbstractPair a2b2 = cover_k3_to_k6({Rational(labels.a3), Rational(labels.b3)});
  const AbstractPair ab2 = k1_params_to_k2_params({Rational(labels.alpha3), Rational(labels.beta3)});

  TowerReport rep{ctx.d(),
                  p,
                  w.with_precision(p),
                  t.with_precision(p),
                  jw.u.with_precision(p),
                  s.with_precision(p),
                  z.with_precision(p),
                  v.with_precision(p),
                  labels.a3,
                  labels.b3,
                  a2b2.first,
                  a2b2.second,
                  labels.alpha3,
                  labels.beta3,
                  ab2.first,
                  ab2.second,
                  j,
                  gamma2,
                  false,
                  {}};

  auto record = [&](const std::string &id, const FixedReal &r) {
    FixedReal narrowed = r.with_precision(p);
    const bool ok = narrowed.certainly_below_pow2(-ceil_half(p));
    rep.residuals.emplace(id, Residual{std::move(narrowed), ok});
  };

  const Integer two_a2 = require_integer(Rational(2) * a2b2.first, "2 a2");
  const Integer two_b2 = require_integer(Rational(2) * a2b2.second, "2 b2");
  record("U", monic_cubic(jw.u, 48, Integer(768 - j), 4096));
  record("W", monic_cubic(w, 2 * labels.a3, 2 * labels.b3, 8));
  record("T", monic_cubic(t, two_a2, two_b2, 8));
  if (gamma2) {
    record("V", monic_cubic(v, 0, Integer(-*gamma2), 16));
  } else {
    rep.residuals.emplace("V", Residual{FixedReal(0, p, 0), false});
  }
  if (ctx.d() % 3 != 0) {
    const Integer two_al2 = require_integer(Rational(2) * ab2.first, "2 alpha2");
    const Integer two_be2 = require_integer(Rational(2) * ab2.second, "2 beta2");
    record("Z", monic_cubic(z, two_al2, two_be2, 2));
    record("S", monic_cubic(s, 2 * labels.alpha3, 2 * labels.beta3, 4));
  }

  // The integral pair must be recoverable from W alone.
  try {
    const RecoveredPair rp = recover_pair(ctx);
    rep.pair_matches_labels = rp.a3 == labels.a3 && rp.b3 == labels.b3;
  } catch (const RecoveryError &) {
    rep.pair_matches_labels = false;
  }
  return rep;
}

FixedReal weber_product_selftest(int precision) {
  if (precision < 16) throw std::invalid_argument("precision must be at least 16 bits");
  const int wp = precision + ModularContext::kGuardBits;
  const FixedReal pi_w = pi(wp);
  const FixedReal q = exp(-pi_w);
  const FixedReal one = FixedReal::from_integer(1, wp);
  const FixedReal q2 = q * q;

  // q^(2N) < 2^-(P+12): log2(1/q) = pi / ln 2.
  const double decay_bits = std::numbers::pi / std::numbers::ln2;
  const int n_terms = static_cast<int>(std::ceil((precision + 12) / (2.0 * decay_bits))) + 2;

  FixedReal sigma = exp(pi_w / Integer(24));
  FixedReal sigma1 = sigma;
  FixedReal sigma2 = sqrt(FixedReal::from_integer(2, wp)) * exp(-(pi_w / Integer(12)));
  FixedReal odd = q;   // q^(2n-1)
  FixedReal even = q2; // q^(2n)
  for (int n = 1; n <= n_terms; ++n) {
    if (n > 1) {
      odd *= q2;
      even *= q2;
    }
    sigma *= one + odd;
    sigma1 *= one - odd;
    sigma2 *= one + even;
  }
  // Tails: each product deviates by less than 3 q^(2N) relative.
  FixedReal prod = sigma * sigma1 * sigma2;
  prod = FixedReal(prod.mantissa(), wp, prod.error_ulps() + 1);
  return (prod - sqrt(FixedReal::from_integer(2, wp))).with_precision(precision);
}

}  // namespace k3atlas
