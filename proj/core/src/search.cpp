#include "k3atlas/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace k3atlas {

Executor serial_executor() {
  return [](std::size_t tasks, const std::function<void(std::size_t)> &body) {
    for (std::size_t i = 0; i < tasks; ++i) body(i);
  };
}

namespace {

// 2z(z^4 + 4z^3 - 2z^2 + 4z + 1)
Rational ks_rhs(const Rational &z) {
  const Rational z2 = z * z;
  return Rational(2) * z * (z2 * z2 + Rational(4) * z2 * z - Rational(2) * z2 + Rational(4) * z + Rational(1));
}

void validate(long bound, unsigned partitions) {
  if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
  if (partitions < 1) throw std::invalid_argument("partitions must be >= 1");
}

long residue(long n, unsigned k) {
  const long m = static_cast<long>(k);
  return ((n % m) + m) % m;
}

struct Partial {
  std::vector<PointRecord> found;
  std::uint64_t scanned = 0;
};

SearchResult merge(SearchSpec spec, std::vector<Partial> &parts,
                   std::chrono::steady_clock::time_point start) {
  SearchResult out{spec, {}, 0, {}};
  for (auto &part : parts) {
    out.scanned += part.scanned;
    std::move(part.found.begin(), part.found.end(), std::back_inserter(out.found));
  }
  std::sort(out.found.begin(), out.found.end(),
            [](const PointRecord &a, const PointRecord &b) { return a.pt < b.pt; });
  for (const auto &r : out.found) {
    if (!is_on_curve(r.curve, r.pt))
      throw std::logic_error("search emitted an off-curve point " + to_string(r.pt));
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace

SearchResult search_ks(long height, unsigned partitions, const Executor &exec) {
  validate(height, partitions);
  const auto start = std::chrono::steady_clock::now();
  std::vector<Partial> parts(partitions);
  exec(partitions, [&](std::size_t r) {
    Partial &part = parts[r];
    for (long p = -height; p <= height; ++p) {
      if (residue(p, partitions) != static_cast<long>(r)) continue;
      for (long q = 1; q <= height; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ++part.scanned;
        const Rational z{Integer(p), Integer(q)};
        const auto w = rational_sqrt(ks_rhs(z));
        if (!w) continue;
        part.found.push_back({CurveId::Ks, {z, *w}, Provenance::search, std::nullopt});
        if (!w->is_zero())
          part.found.push_back({CurveId::Ks, {z, -*w}, Provenance::search, std::nullopt});
      }
    }
  });
  return merge({CurveId::Ks, SearchMode::rational_height, height, partitions}, parts, start);
}

SearchResult search_integral(CurveId curve, long box, unsigned partitions, const Executor &exec) {
  if (curve != CurveId::K1 && curve != CurveId::K3)
    throw std::invalid_argument("integral search supports K1 and K3 only");
  validate(box, partitions);
  const auto start = std::chrono::steady_clock::now();
  const BivarPoly &f = defining_poly(curve);
  std::vector<Partial> parts(partitions);
  exec(partitions, [&](std::size_t r) {
    Partial &part = parts[r];
    for (long x = -box; x <= box; ++x) {
      if (residue(x, partitions) != static_cast<long>(r)) continue;
      ++part.scanned;
      const UniPoly fy = f.specialize_x(Integer(x));
      for (const Integer &y : integer_roots(fy))
        part.found.push_back(
            {curve, {Rational(Integer(x)), Rational(y)}, Provenance::search, std::nullopt});
    }
  });
  return merge({curve, SearchMode::integral_box, box, partitions}, parts, start);
}

ReconcileReport reconcile(const SearchResult &found, std::span<const PointRecord> table) {
  for (const auto &r : table)
    if (r.curve != found.spec.curve)
      throw PreconditionError("reconcile: table curve differs from search curve");
  std::set<RatPoint> searched, listed;
  for (const auto &r : found.found) searched.insert(r.pt);
  for (const auto &r : table) listed.insert(r.pt);
  ReconcileReport rep;
  std::set_intersection(searched.begin(), searched.end(), listed.begin(), listed.end(),
                        std::back_inserter(rep.both));
  std::set_difference(listed.begin(), listed.end(), searched.begin(), searched.end(),
                      std::back_inserter(rep.table_only));
  std::set_difference(searched.begin(), searched.end(), listed.begin(), listed.end(),
                      std::back_inserter(rep.search_only));
  return rep;
}

std::vector<PointRecord> integral_subset(std::span<const PointRecord> table) {
  std::vector<PointRecord> out;
  for (const auto &r : table)
    if (r.pt.u.is_integer() && r.pt.v.is_integer()) out.push_back(r);
  return out;
}

bool within_bound(const SearchSpec &spec, const RatPoint &p) {
  const Integer b(spec.bound);
  if (spec.mode == SearchMode::rational_height) return height(p.u) <= b;
  return p.u.is_integer() && p.v.is_integer() && ::abs(p.u.num()) <= b;
}

std::size_t audit_ks(const SearchResult &result, std::size_t samples, std::uint64_t seed) {
  const long h = result.spec.bound;
  std::set<RatPoint> emitted;
  for (const auto &r : result.found) emitted.insert(r.pt);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-h, h), den(1, h);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Rational z{Integer(num(rng)), Integer(den(rng))};
    const auto w = rational_sqrt(ks_rhs(z));
    if (w) {
      if (!emitted.contains({z, *w}) || !emitted.contains({z, -*w})) ++bad;
    } else {
      for (const auto &pt : emitted)
        if (pt.u == z) {
          ++bad;
          break;
        }
    }
  }
  return bad;
}

}  // namespace k3atlas
