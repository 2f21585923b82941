#include "cli/checks.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "k3atlas/maps.hpp"
#include "k3atlas/modular.hpp"

namespace k3atlas::cli {
namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
RatPoint pt(Rational u, Rational v) { return {std::move(u), std::move(v)}; }

Check make(std::string id, bool ok, std::string details = {}, Fields values = {}) {
  std::erase(id, ' ');
  return {std::move(id), ok ? Status::pass : Status::fail, std::move(details), std::move(values)};
}

std::string point_id(CurveId c, const RatPoint &p) {
  return std::string(curve_name(c)) + to_string(p);
}

std::string convention(CurveId c) {
  const auto names = coordinate_names(c);
  return "(" + std::string(names.first) + "," + std::string(names.second) + ")";
}

std::string d_string(const std::optional<int> &d) { return d ? std::to_string(*d) : std::string(); }

template <class K>
TableRow row_of(const BasicPointRecord<K> &r) {
  return {to_string(r.pt.u), to_string(r.pt.v), std::string(provenance_name(r.provenance)),
          d_string(r.d)};
}

struct Pairing {
  RatPoint zw;
  RatPoint xy;
};

// Expected images of the nine Ks points on K3.
const std::vector<Pairing> &ks_pairings() {
  static const std::vector<Pairing> table = {
      {pt(1, 4), pt(7, 26)},
      {pt(2, 14), pt(-17, 150)},
      {pt(2, -14), pt(q(-9, 17), q(6, 289))},
      {pt(q(1, 2), q(-7, 4)), pt(q(-155, 79), q(42486, 6241))},
      {pt(q(1, 2), q(7, 4)), pt(3, 6)},
      {pt(0, 0), pt(3, 14)},
      {pt(1, -4), pt(-1, 2)},
      {pt(-1, 4), pt(-3, 6)},
      {pt(-1, -4), pt(1, 6)},
  };
  return table;
}

struct PellExpect {
  int d;
  long k, u, v;
};

constexpr PellExpect kPell[] = {{3, 2, -3, 2},      {11, -2, -1, 0},  {19, -2, 3, -2},
                                {43, -14, -3, -2},  {67, 14, -17, 12}, {163, 82, -99, 70}};

std::string join(const std::vector<std::string> &parts) {
  std::string out;
  for (const auto &p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

void add_map_pairings(std::vector<Check> &out) {
  for (const auto &[zw, xy] : ks_pairings()) {
    const RatPoint img = ks_to_k3(zw);
    out.push_back(make("maps.ks_to_k3." + to_string(zw), img == xy, "expected " + to_string(xy),
                       {{"image", to_string(img)}}));
  }
  for (const auto &[zw, xy] : ks_pairings()) {
    try {
      const RatPoint back = k3_to_ks(xy);
      out.push_back(make("maps.k3_to_ks." + to_string(xy), back == zw, "expected " + to_string(zw),
                         {{"image", to_string(back)}}));
    } catch (const MapDomainError &e) {
      out.push_back(make("maps.k3_to_ks." + to_string(xy), false, e.what()));
    }
  }
  // The two exceptional points: both denominators of the inverse vanish.
  const std::pair<RatPoint, const char *> exceptional[] = {{pt(1, 2), "x-1"}, {pt(-1, -2), "x+1"}};
  for (const auto &[xy, factor] : exceptional) {
    bool ok = false;
    std::string details = "no domain error";
    try {
      (void)k3_to_ks(xy);
    } catch (const MapDomainError &e) {
      ok = e.involves(std::string(kK3ZDenominator)) && e.involves(factor);
      details = "vanishing: " + join(e.factors());
    }
    out.push_back(make("maps.k3_to_ks.domain." + to_string(xy), ok, details));
  }
}

void add_commuting_square(std::vector<Check> &out) {
  std::mt19937_64 rng(20240);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 60);
  std::vector<AbstractPair> inputs;
  for (const auto &r : published_points(CurveId::K1)) inputs.push_back(as_pair(r.pt));
  while (inputs.size() < 6 + 500)
    inputs.push_back({q(num(rng), den(rng)), q(num(rng), den(rng))});
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto &p : inputs) {
    if (cover_k3_to_k6(k1_to_k3(p)) != k2_to_k6(k1_params_to_k2_params(p))) {
      if (bad++ == 0) first_bad = to_string(as_point(p));
    }
  }
  out.push_back(make("maps.commuting_square", bad == 0,
                     std::to_string(inputs.size()) + " pairs" +
                         (bad ? ", first mismatch at " + first_bad : std::string()),
                     {{"pairs", std::to_string(inputs.size())}, {"mismatches", std::to_string(bad)}}));
}

void add_k1_checks(std::vector<Check> &out) {
  const auto &k3 = published_points(CurveId::K3);
  for (const auto &r : published_points(CurveId::K1)) {
    const RatPoint img = as_point(k1_to_k3(as_pair(r.pt)));
    const auto match = std::find_if(k3.begin(), k3.end(), [&](const PointRecord &t) {
      return t.pt == img && t.d == r.d;
    });
    out.push_back(make("maps.k1_to_k3." + to_string(r.pt), match != k3.end(),
                       "label d=" + d_string(r.d), {{"image", to_string(img)}}));
    const RatPoint k2 = cover_k1_to_k2(as_pair(r.pt));
    out.push_back(make("maps.k1_to_k2." + to_string(r.pt), is_on_curve(CurveId::K2, k2), {},
                       {{"image", to_string(k2)}}));
  }
}

void add_pell_checks(std::vector<Check> &out) {
  for (const auto &r : published_points(CurveId::K3)) {
    const AbstractPair a2b2 = cover_k3_to_k6(as_pair(r.pt));
    const PellParams pp = pell_params(a2b2);
    bool ok = pp.on_k6 && euler_resolvent_check(as_pair(r.pt));
    Fields values{{"a2", to_string(a2b2.first)}, {"b2", to_string(a2b2.second)}};
    if (pp.triple) {
      ok = ok && pp.triple->pell_value() == Rational(1);
      values.emplace_back("k", to_string(pp.triple->k));
      values.emplace_back("u", to_string(pp.triple->u));
      values.emplace_back("v", to_string(pp.triple->v));
    }
    std::string details;
    if (r.d) {
      const auto *e = std::find_if(std::begin(kPell), std::end(kPell),
                                   [&](const PellExpect &p) { return p.d == *r.d; });
      ok = ok && e != std::end(kPell) && pp.triple && pp.triple->k == q(e->k) &&
           pp.triple->u == q(e->u) && pp.triple->v == q(e->v);
      details = "d=" + std::to_string(*r.d);
    }
    out.push_back(make("maps.pell." + to_string(r.pt), ok, details, std::move(values)));
  }
}

void add_quadratic_roundtrips(std::vector<Check> &out) {
  for (const auto &r : published_quadratic_points()) {
    const std::string id = "maps.quadratic_roundtrip.d" + d_string(r.d);
    try {
      const QuadPoint zw = k3_to_ks(r.pt);
      const QuadPoint back = ks_to_k3(zw);
      const bool ok = is_on_curve(CurveId::Ks, zw) && back.u == r.pt.u && back.v == r.pt.v;
      out.push_back(make(id, ok, {}, {{"z", to_string(zw.u)}, {"w", to_string(zw.v)}}));
    } catch (const std::exception &e) {
      out.push_back(make(id, false, e.what()));
    }
  }
}

}  // namespace

std::string fixed_string(const FixedReal &x, int digits) {
  return x.to_scientific(digits) + " +/- " + x.radius_string(3);
}

std::vector<Check> point_checks() {
  std::vector<Check> out;
  for (CurveId c : {CurveId::K3, CurveId::K1, CurveId::Ks})
    for (const auto &r : published_points(c))
      out.push_back(make("points." + point_id(c, r.pt), is_on_curve(c, r.pt),
                         r.d ? "d=" + std::to_string(*r.d) : std::string(),
                         {{"curve", std::string(curve_name(c))},
                          {"coord1", to_string(r.pt.u)},
                          {"coord2", to_string(r.pt.v)}}));
  for (const auto &r : published_quadratic_points())
    out.push_back(make("points.K3.quadratic.d" + d_string(r.d), is_on_curve(r.curve, r.pt),
                       "radicand " + to_string(Integer(r.pt.u.radicand())),
                       {{"curve", std::string(curve_name(r.curve))},
                        {"coord1", to_string(r.pt.u)},
                        {"coord2", to_string(r.pt.v)}}));
  return out;
}

std::vector<PointTable> catalog_tables() {
  std::vector<PointTable> out;
  for (CurveId c : {CurveId::K3, CurveId::K1, CurveId::Ks}) {
    PointTable t{"catalog." + std::string(curve_name(c)), std::string(curve_name(c)), convention(c), {}};
    for (const auto &r : published_points(c)) t.rows.push_back(row_of(r));
    out.push_back(std::move(t));
  }
  PointTable quad{"catalog.K3.quadratic", "K3", "(x,y) in Q(sqrt m)", {}};
  for (const auto &r : published_quadratic_points()) quad.rows.push_back(row_of(r));
  out.push_back(std::move(quad));
  return out;
}

std::vector<Check> singularity_checks() {
  std::vector<Check> out;
  const BivarPoly &fx = defining_partial_x(CurveId::K3);
  const BivarPoly &fy = defining_partial_y(CurveId::K3);
  for (const auto &r : published_points(CurveId::K3)) {
    const bool singular = is_singular_point(CurveId::K3, r.pt);
    const bool expected = r.pt == pt(1, 2);
    out.push_back(make("singular." + point_id(CurveId::K3, r.pt), singular == expected,
                       singular ? "double point" : "smooth",
                       {{"dF/dx", to_string(fx.eval(r.pt.u, r.pt.v))},
                        {"dF/dy", to_string(fy.eval(r.pt.u, r.pt.v))}}));
  }
  return out;
}

std::vector<Check> map_checks() {
  std::vector<Check> out;
  add_map_pairings(out);
  add_commuting_square(out);
  add_k1_checks(out);
  add_pell_checks(out);
  add_quadratic_roundtrips(out);
  return out;
}

std::vector<Check> tower_checks(long d, std::optional<int> bits) {
  std::vector<Check> out;
  const ModularContext ctx(d, bits);
  const std::string pre = "tower.d" + std::to_string(d) + ".";
  const FixedReal w = schlafli_w(ctx);
  out.push_back(make(pre + "W", true, {},
                     {{"precision", std::to_string(ctx.precision())},
                      {"terms", std::to_string(ctx.terms())},
                      {"W", fixed_string(w)}}));

  std::optional<RecoveredPair> pair;
  try {
    pair = recover_pair(ctx);
    out.push_back(make(pre + "recover_pair", true, {},
                       {{"a3", to_string(pair->a3)},
                        {"b3", to_string(pair->b3)},
                        {"defect", fixed_string(pair->defect, 3)}}));
  } catch (const RecoveryError &e) {
    out.push_back(make(pre + "recover_pair", false, e.what()));
  }

  try {
    const JInvariant j = j_invariant(ctx);
    Fields values{{"j", to_string(j.j)}, {"defect", fixed_string(j.defect, 3)}};
    if (j.gamma2) values.emplace_back("gamma2", to_string(*j.gamma2));
    out.push_back(make(pre + "j", j.gamma2.has_value(),
                       j.gamma2 ? "perfect cube" : "j is not a perfect cube", std::move(values)));
  } catch (const IntegralityError &e) {
    out.push_back(make(pre + "j", false, e.what()));
  }

  const auto labels = published_tower_labels(d);
  if (!labels) {
    out.push_back({pre + "residuals", Status::skip, "no published labels for this d", {}});
    return out;
  }
  const TowerReport rep = verify_tower(ctx, *labels);
  out.push_back(make(pre + "labels", rep.pair_matches_labels,
                     "published (a3,b3) = (" + to_string(labels->a3) + "," + to_string(labels->b3) + ")",
                     {{"a2", to_string(rep.a2)},
                      {"b2", to_string(rep.b2)},
                      {"alpha2", to_string(rep.alpha2)},
                      {"beta2", to_string(rep.beta2)}}));
  const long threshold = -((ctx.precision() + 1) / 2);
  for (const auto &[key, r] : rep.residuals)
    out.push_back(make(pre + "residual." + key, r.passed,
                       "bound 2^" + std::to_string(threshold), {{"residual", fixed_string(r.value, 6)}}));
  if (d % 3 == 0)
    out.push_back({pre + "residual.Z,S", Status::skip, "3 divides d", {}});
  return out;
}

std::vector<Check> selftest_checks() {
  std::vector<Check> out;
  for (int bits : {64, 128, 256}) {
    const FixedReal r = weber_product_selftest(bits);
    out.push_back(make("selftest.weber_product.P" + std::to_string(bits),
                       r.certainly_below_pow2(-(bits - 8)), "bound 2^" + std::to_string(-(bits - 8)),
                       {{"defect", fixed_string(r, 6)}}));
  }
  const ModularContext ctx(3);
  const FixedReal w = schlafli_w(ctx);
  const FixedReal gap = w - FixedReal::from_integer(2, ctx.precision());
  out.push_back(make("selftest.W3", gap.certainly_below_pow2(-(ctx.precision() - 4)),
                     "W(3) = 2", {{"W", fixed_string(w)}}));
  return out;
}

SearchOutcome search_checks(CurveId curve, long bound, unsigned partitions, const Executor &exec) {
  const bool ks = curve == CurveId::Ks;
  const SearchResult res = ks ? search_ks(bound, partitions, exec)
                              : search_integral(curve, bound, partitions, exec);
  const std::string pre = "search." + std::string(curve_name(curve)) + (ks ? ".H" : ".B") +
                          std::to_string(bound) + ".";
  SearchOutcome out;
  out.table = {"search." + std::string(curve_name(curve)), std::string(curve_name(curve)),
               convention(curve), {}};
  for (const auto &r : res.found) out.table.rows.push_back(row_of(r));

  const auto &listed = published_points(curve);
  const std::vector<PointRecord> table = ks ? listed : integral_subset(listed);
  const ReconcileReport rec = reconcile(res, table);
  std::vector<std::string> missing;
  for (const auto &p : rec.table_only)
    if (within_bound(res.spec, p)) missing.push_back(to_string(p));
  std::vector<std::string> extra;
  for (const auto &p : rec.search_only) extra.push_back(to_string(p));
  std::string details = std::to_string(res.found.size()) + " found";
  if (!extra.empty()) details += "; not in table: " + join(extra);
  if (!missing.empty()) details += "; missed: " + join(missing);
  out.checks.push_back(make(pre + "reconcile", extra.empty() && missing.empty(), details,
                            {{"found", std::to_string(res.found.size())},
                             {"both", std::to_string(rec.both.size())},
                             {"table_only", std::to_string(rec.table_only.size())},
                             {"search_only", std::to_string(rec.search_only.size())},
                             {"scanned", std::to_string(res.scanned)}}));
  if (ks) {
    const std::size_t misses = audit_ks(res, 1000, 7);
    out.checks.push_back(make(pre + "audit", misses == 0, "1000 random (p,q) re-tested",
                              {{"disagreements", std::to_string(misses)}}));
  }
  return out;
}

}  // namespace k3atlas::cli
