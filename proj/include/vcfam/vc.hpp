#pragma once

#include <vector>

#include <json.hpp>

#include "vcfam/exact.hpp"
#include "vcfam/set_family.hpp"

namespace vcfam {

/// The distinct intersections {probe ∩ S : S ∈ F}, in canonical order.
struct TraceSet {
  SubsetMask probe;
  std::vector<SubsetMask> traces;
};

struct VcReport {
  int dimension = 0;
  SubsetMask witness;     // canonically first shattered set of maximal size
  int refuted_size = 0;   // dimension + 1, capped at n + 1
};

TraceSet trace(const SetFamily& f, const SubsetMask& probe);

// True iff every subset of `probe` is realized as probe ∩ S. Throws on an
// empty family.
bool shatters(const SetFamily& f, const SubsetMask& probe);

// `workers` > 1 splits the refutation pass; the report is the same either way.
VcReport vc_dimension(const SetFamily& f, int workers = 1);

// First (canonical) shattered set of the given size, if any.
std::optional<SubsetMask> find_shattered_set(const SetFamily& f, int size);

nlohmann::json to_json(const VcReport& r);

}  // namespace vcfam
