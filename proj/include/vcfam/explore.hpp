#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vcfam/oracle.hpp"

namespace vcfam {

struct ExplorationRow {
  int k = 0;
  int s = 0;
  int n = 0;
  int lower = 0;  // best certified lower bound on D(k, s, n)
  int upper = 0;  // best certified upper bound
  std::optional<int> exact;
  std::string method;  // "closed-form" | "oracle" | "bounds" | "open"
  bool stab_upper_hint = false;  // lower == upper == k
};

struct ExploreOptions {
  OracleOptions oracle;  // cap applies per row; rows beyond it fall back to bounds
  bool use_oracle = true;
  int workers = 1;  // rows computed concurrently
};

ExplorationRow explore_row(int k, int s, int n, const ExploreOptions& opts = {});

// Rows for n = max(s, n_lo) .. n_hi, sorted by n.
std::vector<ExplorationRow> explore(int k, int s, int n_lo, int n_hi, const ExploreOptions& opts = {});

// Least n in the rows from which every later row has lower == upper == k.
// Only a hint at an upper bound on the stabilization point.
std::optional<int> stab_upper(const std::vector<ExplorationRow>& rows);

struct MonotonicityScan {
  std::vector<std::pair<int, int>> decreasing;  // (n, n+1) with D dropping
  bool nondecreasing = true;
};
MonotonicityScan monotonicity_scan(const std::vector<ExplorationRow>& rows);

struct SurjectivityScan {
  std::set<int> attained;
  std::vector<int> missing_below_k;
};
SurjectivityScan surjectivity_scan(const std::vector<ExplorationRow>& rows);

// Columns k,s,n,lower,upper,exact,method; exact is "unknown" when open.
std::string rows_to_csv(const std::vector<ExplorationRow>& rows);

nlohmann::json to_json(const ExplorationRow& r);

}  // namespace vcfam
