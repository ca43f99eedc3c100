#include "vcfam/covering.hpp"

#include "vcfam/enumerate.hpp"
#include "vcfam/errors.hpp"
#include "vcfam/vc.hpp"

namespace vcfam {
namespace {

bool contained_in_other(const SetFamily& f, const SubsetMask& k_set, const SubsetMask& owner) {
  for (const auto& t : f.members())
    if (t != owner && k_set.is_subset_of(t)) return true;
  return false;
}

}  // namespace

CoverReport is_k_covering(const SetFamily& f, int k) {
  const int n = f.ground_size();
  if (k < 1 || k > n)
    throw DomainError("k-covering needs 1 <= k <= n (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  const auto members = f.members();
  CoverReport r{true, std::nullopt};
  for_each_subset(n, k, [&](const SubsetMask& a) {
    for (const auto& s : members)
      if (a.is_subset_of(s)) return true;
    r.holds = false;
    r.uncovered = a;
    return false;
  });
  return r;
}

FaceReport unique_face(const SetFamily& f) {
  if (f.empty()) throw DomainError("unique face property needs a nonempty family");
  FaceReport r{true, {}, std::nullopt};
  for (const auto& s : f.members()) {
    const int size = s.size();
    // Faces are upward closed inside s, so a face exists iff some
    // (size-1)-subset is one; check that before the minimal search.
    bool any = false;
    if (size >= 1)
      for (int e : s.elements()) {
        auto k = s;
        k.erase(e);
        if (!contained_in_other(f, k, s)) {
          any = true;
          break;
        }
      }
    if (!any) {
      r.holds = false;
      r.violator = s;
      return r;
    }
    std::optional<SubsetMask> face;
    for (int j = 0; j < size && !face; ++j) {
      SubsetEnumerator it(f.ground_size(), s.elements(), j);
      SubsetMask k;
      while (it.next(k))
        if (!contained_in_other(f, k, s)) {
          face = k;
          break;
        }
    }
    r.faces.emplace_back(s, *face);
  }
  return r;
}

bool ufp_implies_vc_bound_check(const SetFamily& f) {
  const int s = f.require_uniform("ufp_implies_vc_bound_check");
  if (!unique_face(f).holds) return true;
  return vc_dimension(f).dimension < s;
}

nlohmann::json to_json(const CoverReport& r) {
  nlohmann::json j = {{"holds", r.holds}};
  j["uncovered"] = r.uncovered ? nlohmann::json(r.uncovered->elements()) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const FaceReport& r) {
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& [member, face] : r.faces)
    faces.push_back({{"member", member.elements()}, {"face", face.elements()}});
  nlohmann::json j = {{"holds", r.holds}, {"faces", std::move(faces)}};
  j["violator"] = r.violator ? nlohmann::json(r.violator->elements()) : nlohmann::json(nullptr);
  return j;
}

}  // namespace vcfam
