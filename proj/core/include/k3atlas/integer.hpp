#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace k3atlas {

// Unbounded signed integer. GMP's C++ class is used directly; all other
// exact types are built on top of it.
using Integer = mpz_class;

inline std::string to_string(const Integer &n) { return n.get_str(); }

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer &n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Exact square root if n is a perfect square (n >= 0), empty otherwise.
inline std::optional<Integer> exact_sqrt(const Integer &n) {
  if (sgn(n) < 0) return std::nullopt;
  Integer r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return r;
}

// Exact real cube root if n is a perfect cube (any sign), empty otherwise.
inline std::optional<Integer> exact_cbrt(const Integer &n) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
  return r;
}

// n = core * root^2 with core squarefree (n > 0). Trial division, so only
// meant for radicands of moderate size (up to ~10^18).
struct SquarefreeSplit {
  Integer core;
  Integer root;
};
SquarefreeSplit squarefree_split(const Integer &n);

bool is_squarefree(const Integer &n);

}  // namespace k3atlas
