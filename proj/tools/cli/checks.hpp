#pragma once

#include <optional>
#include <vector>

#include "cli/report.hpp"
#include "k3atlas/fixed_real.hpp"
#include "k3atlas/search.hpp"

namespace k3atlas::cli {

// "<value> +/- <radius>" in scientific notation.
std::string fixed_string(const FixedReal &x, int digits = 20);

// Exact membership of the 29 published points.
std::vector<Check> point_checks();
std::vector<PointTable> catalog_tables();

// Double point of K3 at (1,2); the other rational K3 points are smooth.
std::vector<Check> singularity_checks();

// Pairings, inverses, domain errors, commuting square, covers, Pell data.
std::vector<Check> map_checks();

// W, pair recovery, j and the cubic residuals for one d. Labels are used
// for the residuals when d is one of the six class-number-one values.
std::vector<Check> tower_checks(long d, std::optional<int> bits);

// Weber product identity at three precisions and W(3) = 2.
std::vector<Check> selftest_checks();

struct SearchOutcome {
  std::vector<Check> checks;
  PointTable table;
};

// Runs the search and compares it with the published table restricted to
// the bound; rational-height mode is also audited by random resampling.
SearchOutcome search_checks(CurveId curve, long bound, unsigned partitions, const Executor &exec);

}  // namespace k3atlas::cli
