#include "k3atlas/curves.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace k3atlas {

std::string_view curve_name(CurveId c) {
  switch (c) {
    case CurveId::K1: return "K1";
    case CurveId::K2: return "K2";
    case CurveId::K3: return "K3";
    case CurveId::K6: return "K6";
    case CurveId::Ks: return "Ks";
  }
  return "?";
}

CurveId parse_curve(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (CurveId c : kAllCurves) {
    std::string n(curve_name(c));
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (n == lower) return c;
  }
  throw std::invalid_argument("unknown curve '" + std::string(name) + "'");
}

std::pair<std::string_view, std::string_view> coordinate_names(CurveId c) {
  switch (c) {
    case CurveId::K6: return {"a2", "b2"};
    case CurveId::Ks: return {"z", "w"};
    default: return {"x", "y"};
  }
}

std::string to_string(const RatPoint &p) {
  return "(" + p.u.to_string() + ", " + p.v.to_string() + ")";
}

std::string to_string(const QuadPoint &p) {
  return "(" + p.u.to_string() + ", " + p.v.to_string() + ")";
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::published: return "published";
    case Provenance::search: return "search";
    case Provenance::map_image: return "map-image";
  }
  return "?";
}

namespace {

struct CurvePolys {
  BivarPoly f, fx, fy;
};

CurvePolys with_partials(BivarPoly f) {
  CurvePolys out{std::move(f), {}, {}};
  out.fx = out.f.diff_x();
  out.fy = out.f.diff_y();
  return out;
}

const std::array<CurvePolys, 5> &all_polys() {
  static const std::array<CurvePolys, 5> polys = [] {
    const BivarPoly k1 = BivarPoly::parse(
        "8x^8 - 32x^6 y + 40x^4 y^2 + 32x^5 - 16x^2 y^3 - 64x^3 y + y^4 + 24x y^2 + 24x^2 - 8y");
    const BivarPoly k2 = BivarPoly::parse("y^2 - 2x^4 + 2x");
    const BivarPoly k3 = BivarPoly::parse(
        "8x^8 - 32x^6 y + 40x^4 y^2 + 64x^5 - 16x^2 y^3 - 128x^3 y + y^4 + 48x y^2 + 96x^2"
        " - 32y - 24");

    const BivarPoly a = BivarPoly::x_var();
    const BivarPoly b = BivarPoly::y_var();
    const BivarPoly one = BivarPoly::constant(1);
    const BivarPoly two = BivarPoly::constant(2);
    const BivarPoly a2m1 = a * a - one;
    const BivarPoly k6 = (b - two - two * a2m1).pow(2) - two * a2m1.pow(2) -
                         BivarPoly::constant(4) * (a - one).pow(2);

    const BivarPoly ks = BivarPoly::parse("w^2", 'z', 'w') -
                         BivarPoly::parse("2z", 'z', 'w') *
                             BivarPoly::parse("z^4 + 4z^3 - 2z^2 + 4z + 1", 'z', 'w');
    return std::array<CurvePolys, 5>{with_partials(k1), with_partials(k2), with_partials(k3),
                                     with_partials(k6), with_partials(ks)};
  }();
  return polys;
}

std::size_t index_of(CurveId c) { return static_cast<std::size_t>(c); }

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

PointRecord rec(CurveId c, Rational u, Rational v, std::optional<int> d = std::nullopt) {
  return PointRecord{c, RatPoint{std::move(u), std::move(v)}, Provenance::published, d};
}

template <class Record>
void require_on_curve(const std::vector<Record> &table) {
  for (const auto &r : table) {
    if (!is_on_curve(r.curve, r.pt))
      throw std::logic_error("point table integrity failure: " + to_string(r.pt) + " not on " +
                             std::string(curve_name(r.curve)));
  }
}

}  // namespace

const BivarPoly &defining_poly(CurveId c) { return all_polys()[index_of(c)].f; }
const BivarPoly &defining_partial_x(CurveId c) { return all_polys()[index_of(c)].fx; }
const BivarPoly &defining_partial_y(CurveId c) { return all_polys()[index_of(c)].fy; }

const std::vector<PointRecord> &published_points(CurveId c) {
  using enum CurveId;
  static const std::vector<PointRecord> k1 = [] {
    std::vector<PointRecord> t = {
        rec(K1, 0, 0, 3),  rec(K1, 1, 2, 11),  rec(K1, -1, 0, 19),
        rec(K1, 0, 2, 43), rec(K1, -1, 2, 67), rec(K1, 2, 6, 163),
    };
    require_on_curve(t);
    return t;
  }();
  static const std::vector<PointRecord> k3 = [] {
    std::vector<PointRecord> t = {
        rec(K3, 3, 6, 3),
        rec(K3, -1, 2, 11),
        rec(K3, 1, 6, 19),
        rec(K3, 3, 14, 43),
        rec(K3, 7, 26, 67),
        rec(K3, -17, 150, 163),
        rec(K3, -1, -2),
        rec(K3, -3, 6),
        rec(K3, 1, 2),
        rec(K3, q(-9, 17), q(6, 289)),
        rec(K3, q(-155, 79), q(42486, 6241)),
    };
    require_on_curve(t);
    return t;
  }();
  // Printed as (w, z) pairs; stored as (z, w).
  static const std::vector<PointRecord> ks = [] {
    std::vector<PointRecord> t = {
        rec(Ks, 0, 0),         rec(Ks, 1, 4),          rec(Ks, 1, -4),
        rec(Ks, -1, 4),        rec(Ks, -1, -4),        rec(Ks, q(1, 2), q(7, 4)),
        rec(Ks, q(1, 2), q(-7, 4)), rec(Ks, 2, 14),    rec(Ks, 2, -14),
    };
    require_on_curve(t);
    return t;
  }();
  static const std::vector<PointRecord> none;
  switch (c) {
    case K1: return k1;
    case K3: return k3;
    case Ks: return ks;
    default: return none;
  }
}

const std::vector<QuadPointRecord> &published_quadratic_points() {
  static const std::vector<QuadPointRecord> table = [] {
    auto qr = [](long m, long a, long b) { return QuadRat(Integer(m), Rational(a), Rational(b)); };
    std::vector<QuadPointRecord> t = {
        {CurveId::K3, {qr(17, -1, 0), qr(17, 8, 2)}, Provenance::published, 51},
        {CurveId::K3, {qr(41, 4, 1), qr(41, 40, 6)}, Provenance::published, 123},
        {CurveId::K3, {qr(89, -10, -1), qr(89, 310, 32)}, Provenance::published, 267},
    };
    require_on_curve(t);
    return t;
  }();
  return table;
}

}  // namespace k3atlas
