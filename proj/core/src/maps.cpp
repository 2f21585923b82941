#include "k3atlas/maps.hpp"

#include <algorithm>

namespace k3atlas {

MapDomainError::MapDomainError(std::string map, std::vector<std::string> factors)
    : std::domain_error([&] {
        std::string msg = map + ": vanishing denominator factor(s):";
        for (const auto &f : factors) msg += " " + f;
        return msg;
      }()),
      map_(std::move(map)),
      factors_(std::move(factors)) {}

bool MapDomainError::involves(const std::string &factor) const {
  return std::find(factors_.begin(), factors_.end(), factor) != factors_.end();
}

MapEnds map_ends(MapId m) {
  using enum CurveId;
  switch (m) {
    case MapId::K3toK6: return {K3, K6};
    case MapId::K1toK2: return {K1, K2};
    case MapId::K1toK3: return {K1, K3};
    case MapId::K2toK6: return {K2, K6};
    case MapId::K1toKs: return {K1, Ks};
    case MapId::KstoK3: return {Ks, K3};
    case MapId::K3toKs: return {K3, Ks};
  }
  return {K1, K1};
}

std::string_view map_name(MapId m) {
  switch (m) {
    case MapId::K3toK6: return "cover_k3_to_k6";
    case MapId::K1toK2: return "cover_k1_to_k2";
    case MapId::K1toK3: return "k1_to_k3";
    case MapId::K2toK6: return "k2_to_k6";
    case MapId::K1toKs: return "k1_to_ks";
    case MapId::KstoK3: return "ks_to_k3";
    case MapId::K3toKs: return "k3_to_ks";
  }
  return "?";
}

namespace {
const Rational kTwo(2);
}

AbstractPair cover_k3_to_k6(const AbstractPair &p) {
  const Rational &a3 = p.first;
  const Rational &b3 = p.second;
  return {a3 * a3 - b3, (b3 * b3 - Rational(8) * a3) / kTwo};
}

PellParams pell_params(const AbstractPair &p) {
  const bool on = defining_poly(CurveId::K6).eval(p.first, p.second).is_zero();
  const Rational one(1);
  if (p.first == one) return {on, std::nullopt};
  const Rational k = (p.second - kTwo) / (p.first - one);
  const Rational v = (p.first + one) / kTwo;
  const Rational u = k / kTwo - (p.first + one);
  return {on, PellTriple{k, u, v}};
}

bool euler_resolvent_check(const AbstractPair &a3b3) {
  const AbstractPair a2b2 = cover_k3_to_k6(a3b3);
  const Rational &z = a3b3.first;
  const Rational &a2 = a2b2.first;
  const Rational &b2 = a2b2.second;
  const Rational value =
      z.pow(4) - kTwo * a2 * z * z - Rational(8) * z + (a2 * a2 - kTwo * b2);
  return value.is_zero();
}

AbstractPair k1_params_to_k2_params(const AbstractPair &p) {
  const Rational &al = p.first;
  const Rational &be = p.second;
  return {al * al - be, (be * be - Rational(4) * al) / kTwo};
}

RatPoint cover_k1_to_k2(const AbstractPair &p) {
  const AbstractPair ab2 = k1_params_to_k2_params(p);
  return {ab2.first, ab2.second - kTwo * ab2.first * ab2.first};
}

AbstractPair k1_to_k3(const AbstractPair &p) {
  const Rational &al = p.first;
  const Rational &be = p.second;
  return {kTwo * al.pow(3) - Rational(3) * al * be + Rational(3),
          be.pow(3) - Rational(6) * al * be + Rational(6)};
}

AbstractPair k2_to_k6(const AbstractPair &p) {
  const Rational &al = p.first;
  const Rational &be = p.second;
  return {Rational(4) * al.pow(3) - Rational(6) * al * be + Rational(3),
          Rational(4) * be.pow(3) - Rational(12) * al * be + Rational(6)};
}

RatPoint k1_to_ks(const AbstractPair &p) {
  const Rational &al = p.first;
  const Rational &be = p.second;
  if (al.is_zero()) throw MapDomainError("k1_to_ks", {"alpha3"});
  const Rational z = be / (al * al) - Rational(1);
  const Rational y = al.pow(3).reciprocal();
  const Rational w = Rational(4) * (z - kTwo) * y - kTwo * (Rational(3) * z * z - kTwo * z - Rational(1));
  return {z, w};
}

const BirationalPolys &birational_polys() {
  static const BirationalPolys polys = [] {
    BirationalPolys bp;
    auto zw = [](const char *s) { return BivarPoly::parse(s, 'z', 'w'); };
    bp.x_num = zw("z^4 + 8z^3 + 2w z + 18z^2 + 6w - 3");
    bp.den = zw("z^4 + 4z^3 - 2z^2 - 12z + 1");
    bp.p8 = zw("2z^5 + 10z^4 + 36z^3 + 68z^2 + 10z - 30") * zw("w") +
            zw("-z^8 + 60z^6 + 192z^5 + 82z^4 - 128z^3 + 172z^2 + 64z + 7");
    bp.z_num = BivarPoly::parse("4x^3 - 4x y - y^2 + 4x + 4");
    bp.z_den = BivarPoly::parse("2x^4 + 2x^3 - 3x^2 y - 2x y + 6x - y + 2");
    bp.p12 = BivarPoly::parse(
        "4x^12 + 252x^11 - 24x^10 y + 156x^10 - 622x^9 y + 15x^8 y^2 + 440x^9 - 514x^8 y"
        " + 322x^7 y^2 - x^6 y^3 + 1256x^8 - 708x^7 y + 288x^6 y^2 - 21x^5 y^3 + 1536x^7 - 620x^6 y"
        " + 310x^5 y^2 - 19x^4 y^3 + 1344x^6 - 716x^5 y + 64x^4 y^2 - 20x^3 y^3 + 440x^5 - 640x^4 y"
        " + 22x^3 y^2 - 7x^2 y^3 - 12x^4 - 316x^3 y - 8x^2 y^2 - 3x y^3 - 124x^3 - 140x^2 y - 6x y^2"
        " - y^3 - 92x^2 - 22x y + y^2 - 16x + 2y");
    bp.w_den_factors[0] = BivarPoly::parse("x - 1");
    bp.w_den_factors[1] = BivarPoly::parse("x^2 + 1");
    bp.w_den_factors[2] = BivarPoly::parse("x^2 - 2x - 1");
    bp.w_den_factors[3] = BivarPoly::parse("x^2 + 2x + 3");
    bp.w_den_factors[4] = BivarPoly::parse("x + 1");
    return bp;
  }();
  return polys;
}

}  // namespace k3atlas
