#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3atlas/fixed_real.hpp"
#include "k3atlas/integer.hpp"
#include "k3atlas/rational.hpp"

namespace k3atlas {

// The six discriminants d = 3 (mod 8) with class number one.
inline constexpr long kClassNumberOneD[] = {3, 11, 19, 43, 67, 163};

// max(128, ceil(1.5 * pi * sqrt(d) / ln 2) + 64)
int default_precision(long d);

// Evaluation context at omega = (3 + sqrt(-d)) / 2. All series are carried
// at precision() + guard_bits() and rounded to precision() on output.
class ModularContext {
 public:
  static constexpr int kGuardBits = 32;

  // Throws std::invalid_argument unless d > 0, d = 3 (mod 8), d squarefree.
  explicit ModularContext(long d, std::optional<int> bits = std::nullopt);

  long d() const noexcept { return d_; }
  int precision() const noexcept { return prec_; }
  int working_precision() const noexcept { return prec_ + kGuardBits; }
  int terms() const noexcept { return terms_; }
  // t = exp(-pi sqrt d) and t^(1/8), both at working precision.
  const FixedReal &t() const noexcept { return t_; }
  const FixedReal &t_eighth() const noexcept { return t8_; }

 private:
  long d_;
  int prec_;
  int terms_;
  FixedReal t_;
  FixedReal t8_;
};

// W = sqrt(2) * phi = 4 t^(1/8) prod_{n=1..N} (1 + (-1)^n t^n)^3, rounded to
// ctx.precision(). The neglected tail is folded into the error radius.
FixedReal schlafli_w(const ModularContext &ctx);

struct RecoveredPair {
  Integer a3;
  Integer b3;
  FixedReal defect;  // |C + a3 W - b3| before rounding
};

class RecoveryError : public std::runtime_error {
 public:
  enum class Kind { no_pair, precision_exhausted, multiple_candidates };
  RecoveryError(Kind kind, const std::string &what, double best_defect_log2)
      : std::runtime_error(what), kind_(kind), best_defect_log2_(best_defect_log2) {}
  Kind kind() const noexcept { return kind_; }
  double best_defect_log2() const noexcept { return best_defect_log2_; }

 private:
  Kind kind_;
  double best_defect_log2_;
};

inline constexpr long kDefaultPairSearchBound = 1'000'000;

// Integer pair (a3, b3) with W^3 - 2 a3 W^2 + 2 b3 W - 8 = 0. Scans
// a3 in [-bound, bound], sets b3 = round((8 + 2 a3 W^2 - W^3) / (2 W)),
// keeps candidates whose rounding defect is below 2^-(P/4), and returns the
// unique one lying exactly on K3. Throws RecoveryError.
RecoveredPair recover_pair(const ModularContext &ctx, long bound = kDefaultPairSearchBound);

class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JInvariant {
  Integer j;
  FixedReal value;   // (U^3 - 48 U^2 + 768 U - 4096) / U before rounding
  FixedReal defect;  // |value - j|
  std::optional<Integer> gamma2;  // exact integer cube root of j
};

// Throws IntegralityError when the defect is not below 2^-(P/4).
JInvariant j_invariant(const ModularContext &ctx);

struct TowerLabels {
  Integer a3, b3;          // K3 point
  Integer alpha3, beta3;   // K1 point
};

// Published labels for the six class-number-one d, empty otherwise.
std::optional<TowerLabels> published_tower_labels(long d);

struct Residual {
  FixedReal value;
  bool passed;  // |value| + radius < 2^-ceil(P/2)
};

struct TowerReport {
  long d;
  int precision;
  FixedReal W, T, U, S, Z, V;
  Integer a3, b3;
  Rational a2, b2;
  Integer alpha3, beta3;
  Rational alpha2, beta2;
  Integer j;
  std::optional<Integer> gamma2;
  bool pair_matches_labels;  // recover_pair agrees with the supplied (a3, b3)
  // Keyed by the cubic's variable: "U", "W", "T", "V", "Z", "S". Z and S
  // are omitted when 3 | d.
  std::map<std::string, Residual> residuals;

  bool all_passed() const;
};

// Evaluates one cubic per variable, keyed by that variable:
//   U^3 - 48 U^2 + (768 - j) U - 4096,     U = W^8 / 16
//   W^3 - 2 a3 W^2 + 2 b3 W - 8
//   T^3 - 2 a2 T^2 + 2 b2 T - 8,           T = W^2 / 2
//   V^3 - gamma2 V - 16,                   V = T^(4/3)
//   Z^3 - 2 al2 Z^2 + 2 be2 Z - 2,         Z = eps^2
//   S^3 - 2 al3 S^2 + 2 be3 S - 4,         S = sqrt(2) eps
// with eps = (W / sqrt 2)^(1/3), (a2, b2) from (a3, b3) and (al2, be2) from
// (al3, be3) via the covering maps.
TowerReport verify_tower(const ModularContext &ctx, const TowerLabels &labels);

// sigma(i) sigma1(i) sigma2(i) - sqrt(2) with q = exp(-pi); should vanish.
FixedReal weber_product_selftest(int precision);

}  // namespace k3atlas
