#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "vcfam/set_family.hpp"

namespace vcfam {

inline constexpr std::uint64_t kDefaultOracleCap = 24;

struct OracleOptions {
  std::uint64_t cap = kDefaultOracleCap;  // max C(n, s) members in the search universe
  int workers = 1;
  // Maintain trace counts per probe incrementally; false recomputes
  // shattering from scratch at every node. Both walk the same tree.
  bool incremental = true;
};

struct OracleResult {
  Parameters params;
  int value = 0;
  SetFamily witness;
  std::uint64_t nodes_explored = 0;
  std::string method;  // "branch-and-bound" | "exhaustive"
};

struct SearchOutcome {
  std::optional<SetFamily> family;
  std::uint64_t nodes = 0;
};

/// Depth-first search for a k-covering s-uniform family on [n] with
/// VC-dimension at most d.
///
/// Each node branches on the members covering the canonically smallest
/// uncovered k-set; earlier siblings are excluded from later subtrees so every
/// subfamily is reached at most once. A branch dies as soon as its partial
/// family shatters some (d+1)-set. Top-level branches may run on several
/// workers; the lowest successful branch wins, so the witness and node count
/// do not depend on scheduling.
SearchOutcome search_covering_with_vc_at_most(const Parameters& p, int d,
                                              const OracleOptions& opts = {});

std::optional<SetFamily> exists_covering_with_vc_at_most(const Parameters& p, int d,
                                                         const OracleOptions& opts = {});

// Least d with a witness, scanning d = 0, 1, ...
OracleResult oracle_D(const Parameters& p, const OracleOptions& opts = {});

// Plain power-set enumeration over all subfamilies of the s-uniform universe.
// Independent of the branch-and-bound path; limited to 24 universe members.
OracleResult oracle_D_enumerate(const Parameters& p, const OracleOptions& opts = {});

nlohmann::json to_json(const OracleResult& r);

}  // namespace vcfam
