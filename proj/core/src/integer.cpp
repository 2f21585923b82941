#include "k3atlas/integer.hpp"

#include <stdexcept>

namespace k3atlas {

SquarefreeSplit squarefree_split(const Integer &n) {
  if (sgn(n) <= 0) throw std::invalid_argument("squarefree_split needs a positive integer");
  Integer rest = n;
  Integer core = 1;
  Integer root = 1;
  auto strip = [&](const Integer &p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) root *= p;
    if (e % 2 == 1) core *= p;
  };
  strip(Integer(2));
  // Once p^3 > rest, rest is 1, a prime, a prime square, or a product of
  // two distinct primes; only the square case contributes to the root.
  for (Integer p = 3; p * p * p <= rest; p += 2) strip(p);
  if (rest > 1) {
    if (auto r = exact_sqrt(rest)) {
      root *= *r;
    } else {
      core *= rest;
    }
  }
  return {core, root};
}

bool is_squarefree(const Integer &n) {
  if (sgn(n) <= 0) return false;
  return squarefree_split(n).root == 1;
}

}  // namespace k3atlas
