#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3atlas/integer.hpp"
#include "k3atlas/quad_rat.hpp"
#include "k3atlas/rational.hpp"

namespace k3atlas {

// Embedding of integer constants into the coordinate fields. `like` carries
// the field context (the radicand, for QuadRat).
inline Rational lift(const Rational & /*like*/, const Integer &c) { return Rational(c); }
inline QuadRat lift(const QuadRat &like, const Integer &c) {
  return QuadRat::embed(like, Rational(c));
}

// Sum of c_ij x^i y^j with integer coefficients, stored sparsely. Zero
// coefficients are never stored.
class BivarPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;
  struct Term {
    unsigned i;
    unsigned j;
    long coeff;
  };

  BivarPoly() = default;
  BivarPoly(std::initializer_list<Term> terms);

  static BivarPoly constant(Integer c);
  static BivarPoly x_var() { return monomial(1, 0, 1); }
  static BivarPoly y_var() { return monomial(0, 1, 1); }
  static BivarPoly monomial(unsigned i, unsigned j, Integer c);

  // Parses a sum of monomials such as "8 x^8 - 32 x^6 y + y^4 - 24".
  // Factors may be separated by spaces or '*'. `xname`/`yname` are the
  // single-character variable names. Throws std::invalid_argument.
  static BivarPoly parse(std::string_view text, char xname = 'x', char yname = 'y');

  const std::map<Exponents, Integer> &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(unsigned i, unsigned j) const;
  unsigned degree_x() const;
  unsigned degree_y() const;
  unsigned total_degree() const;

  BivarPoly operator-() const;
  BivarPoly &operator+=(const BivarPoly &rhs);
  BivarPoly &operator-=(const BivarPoly &rhs);
  BivarPoly &operator*=(const BivarPoly &rhs);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly &b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly &b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const BivarPoly &b) { return a *= b; }
  friend bool operator==(const BivarPoly &, const BivarPoly &) = default;

  BivarPoly pow(unsigned e) const;
  BivarPoly diff_x() const;
  BivarPoly diff_y() const;

  // Coefficients of y^0..y^deg after substituting an integer for x.
  std::map<unsigned, Integer> specialize_x(const Integer &x) const;

  // Exact value at (x, y). Horner in y within each x-row, then Horner in x
  // across rows, skipping absent powers.
  template <class K>
  K eval(const K &x, const K &y) const;

  std::string to_string(char xname = 'x', char yname = 'y') const;

 private:
  void add_term(unsigned i, unsigned j, const Integer &c);

  std::map<Exponents, Integer> terms_;
};

template <class K>
K BivarPoly::eval(const K &x, const K &y) const {
  K result = lift(x, Integer(0));
  if (terms_.empty()) return result;
  // terms_ is ordered by (i, j); walk rows from the highest x-degree down.
  auto it = terms_.rbegin();
  unsigned prev_i = it->first.first;
  bool first_row = true;
  while (it != terms_.rend()) {
    const unsigned i = it->first.first;
    if (!first_row) {
      for (unsigned k = i; k < prev_i; ++k) result *= x;
    }
    K row = lift(x, Integer(0));
    unsigned prev_j = it->first.second;
    bool first_col = true;
    for (; it != terms_.rend() && it->first.first == i; ++it) {
      const unsigned j = it->first.second;
      if (!first_col) {
        for (unsigned k = j; k < prev_j; ++k) row *= y;
      }
      row += lift(x, it->second);
      prev_j = j;
      first_col = false;
    }
    for (unsigned k = 0; k < prev_j; ++k) row *= y;
    result += row;
    prev_i = i;
    first_row = false;
  }
  for (unsigned k = 0; k < prev_i; ++k) result *= x;
  return result;
}

// Univariate integer polynomial helpers used by the integral-point search.
using UniPoly = std::map<unsigned, Integer>;  // degree -> nonzero coefficient

Integer eval_uni(const UniPoly &p, const Integer &t);
UniPoly derivative(const UniPoly &p);
// Every integer t with p(t) = 0. p must be nonzero; found by bisection on
// the monotone stretches between critical points inside the Cauchy bound.
std::vector<Integer> integer_roots(const UniPoly &p);

}  // namespace k3atlas
