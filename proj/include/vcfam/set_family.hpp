#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vcfam/subset_mask.hpp"

namespace vcfam {

/// An ordered, deduplicated family of subsets of [n].
///
/// Members are kept strictly increasing in canonical mask order, so two
/// families built from the same sets in any order compare equal. The uniform
/// size is detected on construction; an empty family has none.
class SetFamily {
 public:
  SetFamily() = default;

  // Canonicalizes: sorts, drops duplicates, checks every member is over [n].
  static SetFamily from_masks(int n, std::vector<SubsetMask> members);

  int ground_size() const { return n_; }
  std::span<const SubsetMask> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::optional<int> uniform_size() const { return uniform_size_; }
  int max_member_size() const;

  bool contains(const SubsetMask& m) const;

  // Throws DomainError unless every member has the same cardinality.
  int require_uniform(const char* what) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_ = 0;
  std::vector<SubsetMask> members_;
  std::optional<int> uniform_size_;
};

// Members given as 1-based element lists.
SetFamily make_family(int n, const std::vector<std::vector<int>>& members);

/// The (k, s, n) triple of a covering question; always k <= s <= n.
struct Parameters {
  int k = 0;
  int s = 0;
  int n = 0;

  // Validates 1 <= k <= s <= n <= kMaxGroundSize.
  static Parameters make(int k, int s, int n);
  friend bool operator==(const Parameters&, const Parameters&) = default;
};

}  // namespace vcfam
