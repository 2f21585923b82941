#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "k3atlas/curves.hpp"

namespace k3atlas {

enum class SearchMode { rational_height, integral_box };

struct SearchSpec {
  CurveId curve;
  SearchMode mode;
  long bound;           // height H or box half-width B, >= 1
  unsigned partitions;  // >= 1
};

struct SearchResult {
  SearchSpec spec;
  std::vector<PointRecord> found;  // provenance = search, sorted by (u, v)
  std::uint64_t scanned = 0;       // z values (rational) or x values (integral) tested
  std::chrono::nanoseconds elapsed{0};
};

// Runs body(0) .. body(tasks - 1), possibly concurrently. The search
// functions hand one task per partition to the executor; the tasks share no
// mutable state.
using Executor = std::function<void(std::size_t tasks, const std::function<void(std::size_t)> &body)>;
Executor serial_executor();

// All affine rational points of Ks with height(z) <= H: z = p/q reduced,
// |p| <= H, 1 <= q <= H, w = +-sqrt(2z(z^4 + 4z^3 - 2z^2 + 4z + 1)).
// Partition r handles numerators p = r (mod partitions). Always scans the
// whole bound. Throws std::invalid_argument when H < 1 or partitions < 1.
SearchResult search_ks(long height, unsigned partitions,
                       const Executor &exec = serial_executor());

// All integral points of K1 or K3 with |x| <= B (y unrestricted). For each
// x the curve equation is a monic quartic in y; its integer roots are found
// exactly by bisection inside the Cauchy bound. Partition r handles
// x = r (mod partitions).
SearchResult search_integral(CurveId curve, long box, unsigned partitions,
                             const Executor &exec = serial_executor());

struct ReconcileReport {
  std::vector<RatPoint> both;
  std::vector<RatPoint> table_only;
  std::vector<RatPoint> search_only;
  bool clean() const { return table_only.empty() && search_only.empty(); }
};

// Set comparison of found points against a table on the same curve.
// Throws PreconditionError on a curve mismatch.
ReconcileReport reconcile(const SearchResult &found, std::span<const PointRecord> table);

// Records of `table` with integer coordinates.
std::vector<PointRecord> integral_subset(std::span<const PointRecord> table);

// True when `p` is within the search's bound (height of z, or |x| <= B).
bool within_bound(const SearchSpec &spec, const RatPoint &p);

// Re-tests `samples` random (p, q) pairs inside the bound of a search_ks
// result against its emitted set; returns the number of disagreements.
std::size_t audit_ks(const SearchResult &result, std::size_t samples, std::uint64_t seed);

}  // namespace k3atlas
