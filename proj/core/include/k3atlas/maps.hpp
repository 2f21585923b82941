#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "k3atlas/bivar_poly.hpp"
#include "k3atlas/curves.hpp"
#include "k3atlas/errors.hpp"
#include "k3atlas/rational.hpp"

namespace k3atlas {

enum class MapId { K3toK6, K1toK2, K1toK3, K2toK6, K1toKs, KstoK3, K3toKs };

struct MapEnds {
  CurveId source;
  CurveId target;
};
MapEnds map_ends(MapId m);
std::string_view map_name(MapId m);

// A pair of cubic-coefficient parameters: (a3, b3), (alpha3, beta3),
// (alpha2, beta2) or (a2, b2) depending on context.
struct AbstractPair {
  Rational first;
  Rational second;
  friend bool operator==(const AbstractPair &, const AbstractPair &) = default;
};

inline AbstractPair as_pair(const RatPoint &p) { return {p.u, p.v}; }
inline RatPoint as_point(const AbstractPair &p) { return {p.first, p.second}; }

// Pell parametrization of a point (a2, b2) of K6:
//   b2 = k (a2 - 1) + 2,  u = k/2 - (a2 + 1),  v = (a2 + 1)/2.
struct PellTriple {
  Rational k;
  Rational u;
  Rational v;
  Rational pell_value() const { return u * u - Rational(2) * v * v; }
};

struct PellParams {
  bool on_k6;                         // G(a2, b2) == 0
  std::optional<PellTriple> triple;   // empty when a2 == 1 (k undefined)
};

// (a3, b3) -> (a2, b2) = (a3^2 - b3, (b3^2 - 8 a3) / 2).
AbstractPair cover_k3_to_k6(const AbstractPair &a3b3);

PellParams pell_params(const AbstractPair &a2b2);

// Substitutes (a2, b2) = cover_k3_to_k6(a3, b3) into
// z^4 - 2 a2 z^2 - 8 z + (a2^2 - 2 b2) and tests that z = a3 is a root.
bool euler_resolvent_check(const AbstractPair &a3b3);

// (alpha3, beta3) -> (alpha2, beta2) = (alpha3^2 - beta3, (beta3^2 - 4 alpha3) / 2).
AbstractPair k1_params_to_k2_params(const AbstractPair &alpha3beta3);

// K1 -> K2 in curve coordinates: (x, y) = (alpha2, beta2 - 2 alpha2^2).
RatPoint cover_k1_to_k2(const AbstractPair &alpha3beta3);

// a3 = 2 al^3 - 3 al be + 3,  b3 = be^3 - 6 al be + 6.
AbstractPair k1_to_k3(const AbstractPair &alpha3beta3);

// Takes the (alpha2, beta2) parameter pair, not K2's (x, y):
// a2 = 4 al^3 - 6 al be + 3,  b2 = 4 be^3 - 12 al be + 6.
AbstractPair k2_to_k6(const AbstractPair &alpha2beta2);

// z = beta3 / alpha3^2 - 1, y = 1 / alpha3^3, w = 4 (z - 2) y - 2 (3 z^2 - 2 z - 1).
// Throws MapDomainError (factor "alpha3") when alpha3 == 0.
RatPoint k1_to_ks(const AbstractPair &alpha3beta3);

// Polynomials of the birational pair Ks <-> K3.
struct BirationalPolys {
  BivarPoly x_num;  // x = -x_num / den
  BivarPoly den;    // z^4 + 4z^3 - 2z^2 - 12z + 1
  BivarPoly p8;     // y = 2 P8 / den^2
  BivarPoly z_num;  // z = 1 - z_num / z_den
  BivarPoly z_den;
  BivarPoly p12;    // w = -2 P12 / w_den, w_den factored below
  BivarPoly w_den_factors[5];  // x - 1, x^2 + 1, x^2 - 2x - 1, x^2 + 2x + 3, x + 1 (fifth power)
};
const BirationalPolys &birational_polys();

// Factor names reported by MapDomainError.
inline constexpr std::string_view kKsDenominator = "z^4+4z^3-2z^2-12z+1";
inline constexpr std::string_view kK3ZDenominator = "2x^4+2x^3-3x^2y-2xy+6x-y+2";
inline constexpr std::string_view kW8Factor = "2z+6";
inline constexpr std::string_view kWDenominatorFactors[5] = {"x-1", "x^2+1", "x^2-2x-1",
                                                             "x^2+2x+3", "x+1"};

template <class K>
Point2<K> ks_to_k3(const Point2<K> &zw);

// Printed inverse formulas only. Throws MapDomainError listing every
// vanishing factor of either denominator.
template <class K>
Point2<K> k3_to_ks_printed(const Point2<K> &xy);

// Inverse map Ks <- K3. Uses the printed formulas; where only the
// w-denominator vanishes, w is recovered from the x-formula of ks_to_k3,
// which is linear in w:
//   w = -(x * den(z) + z^4 + 8z^3 + 18z^2 - 3) / (2z + 6).
// Throws MapDomainError when z itself is undefined or 2z + 6 = 0.
template <class K>
Point2<K> k3_to_ks(const Point2<K> &xy);

// --- template definitions ---

namespace detail {
template <class K>
K zero_like(const K &like) {
  return lift(like, Integer(0));
}
}  // namespace detail

template <class K>
Point2<K> ks_to_k3(const Point2<K> &zw) {
  const BirationalPolys &bp = birational_polys();
  const K den = bp.den.eval(zw.u, zw.v);
  if (den.is_zero()) throw MapDomainError("ks_to_k3", {std::string(kKsDenominator)});
  const K x = detail::zero_like(den) - bp.x_num.eval(zw.u, zw.v) / den;
  const K y = lift(den, Integer(2)) * bp.p8.eval(zw.u, zw.v) / (den * den);
  return {x, y};
}

template <class K>
Point2<K> k3_to_ks_printed(const Point2<K> &xy) {
  const BirationalPolys &bp = birational_polys();
  std::vector<std::string> vanishing;
  const K z_den = bp.z_den.eval(xy.u, xy.v);
  if (z_den.is_zero()) vanishing.emplace_back(kK3ZDenominator);
  K w_den = lift(xy.u, Integer(1));
  for (std::size_t i = 0; i < 5; ++i) {
    const K f = bp.w_den_factors[i].eval(xy.u, xy.v);
    if (f.is_zero()) vanishing.emplace_back(kWDenominatorFactors[i]);
    w_den *= f;
    if (i == 4) {
      for (int r = 0; r < 4; ++r) w_den *= f;
    }
  }
  if (!vanishing.empty()) throw MapDomainError("k3_to_ks", std::move(vanishing));
  const K z = lift(z_den, Integer(1)) - bp.z_num.eval(xy.u, xy.v) / z_den;
  const K w = lift(z_den, Integer(-2)) * bp.p12.eval(xy.u, xy.v) / w_den;
  return {z, w};
}

template <class K>
Point2<K> k3_to_ks(const Point2<K> &xy) {
  try {
    return k3_to_ks_printed(xy);
  } catch (const MapDomainError &err) {
    if (err.involves(std::string(kK3ZDenominator))) throw;
    const BirationalPolys &bp = birational_polys();
    const K z_den = bp.z_den.eval(xy.u, xy.v);
    const K z = lift(z_den, Integer(1)) - bp.z_num.eval(xy.u, xy.v) / z_den;
    const K lin = lift(z, Integer(2)) * z + lift(z, Integer(6));
    if (lin.is_zero()) {
      auto factors = err.factors();
      factors.emplace_back(kW8Factor);
      throw MapDomainError("k3_to_ks", std::move(factors));
    }
    const K zero = detail::zero_like(z);
    const K den = bp.den.eval(z, zero);
    // x_num(z, w) = x_num(z, 0) + (2z + 6) w
    const K rest = bp.x_num.eval(z, zero);
    const K w = detail::zero_like(z) - (xy.u * den + rest) / lin;
    return {z, w};
  }
}

}  // namespace k3atlas
