#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3atlas/bivar_poly.hpp"
#include "k3atlas/errors.hpp"
#include "k3atlas/quad_rat.hpp"
#include "k3atlas/rational.hpp"

namespace k3atlas {

// The five plane curves of the atlas.
//   K1: genus 9 cover of the Heegner curve, coordinates (x, y)
//   K2: Heegner curve y^2 = 2x(x^3 - 1), coordinates (x, y)
//   K3: genus 2 curve whose integral points carry the class-number-one
//       fields, coordinates (x, y)
//   K6: quotient of K3 attached to the Pell conic, coordinates (a2, b2)
//   Ks: Weierstrass model w^2 = 2z(z^4 + 4z^3 - 2z^2 + 4z + 1), coordinates
//       (z, w)
enum class CurveId { K1, K2, K3, K6, Ks };

inline constexpr CurveId kAllCurves[] = {CurveId::K1, CurveId::K2, CurveId::K3, CurveId::K6,
                                         CurveId::Ks};

std::string_view curve_name(CurveId c);
// Case-insensitive "K1", "k3", "ks", ...; throws std::invalid_argument.
CurveId parse_curve(std::string_view name);
// Coordinate names in canonical order, e.g. {"z", "w"} for Ks.
std::pair<std::string_view, std::string_view> coordinate_names(CurveId c);

template <class K>
struct Point2 {
  K u;
  K v;
  friend bool operator==(const Point2 &, const Point2 &) = default;
};

template <>
struct Point2<Rational> {
  Rational u;
  Rational v;
  friend bool operator==(const Point2 &, const Point2 &) = default;
  friend std::strong_ordering operator<=>(const Point2 &a, const Point2 &b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

using RatPoint = Point2<Rational>;
using QuadPoint = Point2<QuadRat>;

std::string to_string(const RatPoint &p);
std::string to_string(const QuadPoint &p);

enum class Provenance { published, search, map_image };
std::string_view provenance_name(Provenance p);

template <class K>
struct BasicPointRecord {
  CurveId curve;
  Point2<K> pt;
  Provenance provenance;
  std::optional<int> d;  // discriminant label, only when the source gives one
};

using PointRecord = BasicPointRecord<Rational>;
using QuadPointRecord = BasicPointRecord<QuadRat>;

// Exact integer polynomial whose zero set is the affine curve. K6 uses the
// denominator-free form
//   G(a2, b2) = (b2 - 2 - 2(a2^2 - 1))^2 - 2(a2^2 - 1)^2 - 4(a2 - 1)^2
// obtained by clearing k = (b2 - 2)/(a2 - 1) from the Pell conic
//   (k/2 - (a2 + 1))^2 - 2((a2 + 1)/2)^2 = 1.
const BivarPoly &defining_poly(CurveId c);
const BivarPoly &defining_partial_x(CurveId c);
const BivarPoly &defining_partial_y(CurveId c);

template <class K>
bool is_on_curve(CurveId c, const Point2<K> &p) {
  return defining_poly(c).eval(p.u, p.v).is_zero();
}

// Both formal partials vanish at p. Throws PreconditionError when p is not
// on the curve.
template <class K>
bool is_singular_point(CurveId c, const Point2<K> &p) {
  if (!is_on_curve(c, p))
    throw PreconditionError("is_singular_point: point is not on " + std::string(curve_name(c)));
  return defining_partial_x(c).eval(p.u, p.v).is_zero() &&
         defining_partial_y(c).eval(p.u, p.v).is_zero();
}

// Published point tables, verified against the curve equations on first
// use (a mismatch throws std::logic_error). Ks points are stored as (z, w).
// K2 and K6 have no published tables and return an empty list.
const std::vector<PointRecord> &published_points(CurveId c);
// The three real quadratic points of K3 for d = 51, 123, 267.
const std::vector<QuadPointRecord> &published_quadratic_points();

}  // namespace k3atlas
