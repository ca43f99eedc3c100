#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vcfam/set_family.hpp"

namespace vcfam {

struct CoverReport {
  bool holds = false;
  std::optional<SubsetMask> uncovered;  // canonically smallest k-set in no member
};

struct FaceReport {
  bool holds = false;
  // (member, K) pairs in member order; K ⊊ member and no other member contains K.
  std::vector<std::pair<SubsetMask, SubsetMask>> faces;
  std::optional<SubsetMask> violator;  // first member without a unique face
};

// Every k-subset of [n] lies inside some member. Requires 1 <= k <= n.
CoverReport is_k_covering(const SetFamily& f, int k);

// Smallest unique face of each member, searched by size then canonical order.
FaceReport unique_face(const SetFamily& f);

// True unless f has the unique face property and still shatters an s-set.
bool ufp_implies_vc_bound_check(const SetFamily& f);

nlohmann::json to_json(const CoverReport& r);
nlohmann::json to_json(const FaceReport& r);

}  // namespace vcfam
