#pragma once

#include <span>
#include <vector>

#include "vcfam/subset_mask.hpp"

namespace vcfam {

/// Streams the r-element subsets of a pool of elements in canonical order.
///
/// The pool must be ascending; subsets come out in colex order, which for an
/// ascending pool is exactly increasing mask order.
class SubsetEnumerator {
 public:
  // All r-subsets of [n].
  SubsetEnumerator(int n, int r);
  // All r-subsets of `pool` (ascending elements of [n]).
  SubsetEnumerator(int n, std::vector<int> pool, int r);

  // Writes the next subset into `out`; false once exhausted.
  bool next(SubsetMask& out);

 private:
  int n_;
  std::vector<int> pool_;
  std::vector<int> idx_;
  int r_;
  bool started_ = false;
  bool done_ = false;
};

// Calls fn(mask) for each r-subset of [n] in canonical order until fn
// returns false. Returns false iff stopped early.
template <class Fn>
bool for_each_subset(int n, int r, Fn&& fn) {
  SubsetEnumerator it(n, r);
  SubsetMask m;
  while (it.next(m))
    if (!fn(m)) return false;
  return true;
}

std::vector<SubsetMask> enumerate_subsets(int n, int r);

// Proper and improper subsets of `set` of size r, canonical order.
std::vector<SubsetMask> subsets_of(const SubsetMask& set, int r);

}  // namespace vcfam
