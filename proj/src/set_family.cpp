#include "vcfam/set_family.hpp"

#include <algorithm>
#include <string>

#include "vcfam/errors.hpp"

namespace vcfam {

SetFamily SetFamily::from_masks(int n, std::vector<SubsetMask> members) {
  if (n <= 0) throw DomainError("ground size must be positive");
  if (n > kMaxGroundSize)
    throw DomainError("ground size " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxGroundSize));
  const SubsetMask ground = SubsetMask::full(n);
  for (auto& m : members) {
    if (m.ground_size() > n) {
      if (!(m - ground.widened(m.ground_size())).empty())
        throw DomainError("member " + m.to_string() + " not within [" + std::to_string(n) + "]");
      SubsetMask narrowed(n);
      for (int e : m.elements()) narrowed.insert(e);
      m = narrowed;
    } else if (m.ground_size() < n) {
      m = m.widened(n);
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  SetFamily f;
  f.n_ = n;
  f.members_ = std::move(members);
  if (!f.members_.empty()) {
    const int s = f.members_.front().size();
    if (std::all_of(f.members_.begin(), f.members_.end(),
                    [s](const SubsetMask& m) { return m.size() == s; }))
      f.uniform_size_ = s;
  }
  return f;
}

int SetFamily::max_member_size() const {
  int best = 0;
  for (const auto& m : members_) best = std::max(best, m.size());
  return best;
}

bool SetFamily::contains(const SubsetMask& m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

int SetFamily::require_uniform(const char* what) const {
  if (!uniform_size_) throw DomainError(std::string(what) + " requires a uniform family");
  return *uniform_size_;
}

SetFamily make_family(int n, const std::vector<std::vector<int>>& members) {
  if (n <= 0) throw DomainError("ground size must be positive");
  if (n > kMaxGroundSize)
    throw DomainError("ground size " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxGroundSize));
  std::vector<SubsetMask> masks;
  masks.reserve(members.size());
  for (const auto& elems : members) masks.push_back(SubsetMask::from_elements(n, elems));
  return SetFamily::from_masks(n, std::move(masks));
}

Parameters Parameters::make(int k, int s, int n) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (!(k <= s && s <= n))
    throw DomainError("parameters must satisfy k <= s <= n (got k=" + std::to_string(k) +
                      " s=" + std::to_string(s) + " n=" + std::to_string(n) + ")");
  if (n > kMaxGroundSize) throw DomainError("n exceeds the supported ground size");
  return {k, s, n};
}

}  // namespace vcfam
