#include "vcfam/explore.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "vcfam/constructions.hpp"
#include "vcfam/errors.hpp"
#include "vcfam/exact.hpp"
#include "vcfam/verifier.hpp"
#include "vcfam/vc.hpp"

namespace vcfam {

ExplorationRow explore_row(int k, int s, int n, const ExploreOptions& opts) {
  const auto p = Parameters::make(k, s, n);
  ExplorationRow row{k, s, n, 0, std::min(s, n - s), std::nullopt, "open", false};

  if (s == n || s == k) {
    // D(k,n,n) = 0 via {[n]}; D(k,k,n) = min(k, n-k) since only the full family covers.
    row.lower = row.upper;
    row.exact = row.upper;
    row.method = "closed-form";
  } else {
    // A family of VC-dimension 0 has one member, which covers only when s = n.
    row.lower = 1;
    if (lower_bound_certificate(k, s, n).holds) row.lower = std::max(row.lower, k);
    if (2 <= k && s < 2 * k && s + k < n) row.lower = std::max(row.lower, 2);
    row.upper = std::min(row.upper, vc_dimension(covering_witness_family(k, s, n)).dimension);
    if (row.lower == row.upper) {
      row.exact = row.lower;
      row.method = "bounds";
    }
  }

  if (opts.use_oracle && binomial(n, s) <= opts.oracle.cap && row.method != "closed-form") {
    row.exact = oracle_D(p, opts.oracle).value;
    row.method = "oracle";
  }
  row.stab_upper_hint = row.lower == k && row.upper == k;
  return row;
}

std::vector<ExplorationRow> explore(int k, int s, int n_lo, int n_hi, const ExploreOptions& opts) {
  if (opts.workers < 1) throw DomainError("worker count must be at least 1");
  std::vector<int> ns;
  for (int n = std::max(s, n_lo); n <= n_hi; ++n) ns.push_back(n);
  std::vector<ExplorationRow> rows(ns.size());
  std::vector<std::exception_ptr> failures(ns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < ns.size();) {
      try {
        rows[i] = explore_row(k, s, ns[i], opts);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  if (opts.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < opts.workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.k, a.s, a.n) < std::tie(b.k, b.s, b.n);
  });
  return rows;
}

std::optional<int> stab_upper(const std::vector<ExplorationRow>& rows) {
  std::optional<int> from;
  for (auto it = rows.rbegin(); it != rows.rend() && it->stab_upper_hint; ++it) from = it->n;
  return from;
}

MonotonicityScan monotonicity_scan(const std::vector<ExplorationRow>& rows) {
  MonotonicityScan scan;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    if (b.n != a.n + 1 || !a.exact || !b.exact) continue;
    if (*b.exact < *a.exact) {
      scan.decreasing.emplace_back(a.n, b.n);
      scan.nondecreasing = false;
    }
  }
  return scan;
}

SurjectivityScan surjectivity_scan(const std::vector<ExplorationRow>& rows) {
  SurjectivityScan scan;
  int k = rows.empty() ? 0 : rows.front().k;
  for (const auto& r : rows)
    if (r.exact) scan.attained.insert(*r.exact);
  for (int v = 0; v < k; ++v)
    if (!scan.attained.count(v)) scan.missing_below_k.push_back(v);
  return scan;
}

std::string rows_to_csv(const std::vector<ExplorationRow>& rows) {
  std::ostringstream os;
  os << "k,s,n,lower,upper,exact,method\n";
  for (const auto& r : rows) {
    os << r.k << ',' << r.s << ',' << r.n << ',' << r.lower << ',' << r.upper << ',';
    if (r.exact)
      os << *r.exact;
    else
      os << "unknown";
    os << ',' << r.method << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const ExplorationRow& r) {
  return {{"k", r.k},
          {"s", r.s},
          {"n", r.n},
          {"lower", r.lower},
          {"upper", r.upper},
          {"exact", r.exact ? nlohmann::json(*r.exact) : nlohmann::json("unknown")},
          {"method", r.method},
          {"stab_upper_hint", r.stab_upper_hint}};
}

}  // namespace vcfam
