#include "vcfam/enumerate.hpp"

#include <numeric>
#include <string>

#include "vcfam/errors.hpp"

namespace vcfam {

SubsetEnumerator::SubsetEnumerator(int n, int r) : SubsetEnumerator(n, {}, r) {
  pool_.resize(n);
  std::iota(pool_.begin(), pool_.end(), 1);
  if (r > n) throw DomainError("cannot choose " + std::to_string(r) + " of " + std::to_string(n));
}

SubsetEnumerator::SubsetEnumerator(int n, std::vector<int> pool, int r)
    : n_(n), pool_(std::move(pool)), r_(r) {
  if (n < 0 || n > kMaxGroundSize) throw DomainError("ground size out of range");
  if (r < 0) throw DomainError("subset size must be non-negative");
  for (int e : pool_)
    if (e < 1 || e > n) throw DomainError("pool element out of range");
}

bool SubsetEnumerator::next(SubsetMask& out) {
  const int p = static_cast<int>(pool_.size());
  if (done_) return false;
  if (r_ > p) {
    done_ = true;
    return false;
  }
  if (!started_) {
    started_ = true;
    idx_.resize(r_);
    std::iota(idx_.begin(), idx_.end(), 0);
  } else {
    // Colex successor: bump the lowest index that has room, reset those below.
    int j = 0;
    while (j < r_ && idx_[j] + 1 == (j + 1 < r_ ? idx_[j + 1] : p)) ++j;
    if (j == r_) {
      done_ = true;
      return false;
    }
    ++idx_[j];
    for (int i = 0; i < j; ++i) idx_[i] = i;
  }
  out = SubsetMask(n_);
  for (int i : idx_) out.insert(pool_[i]);
  return true;
}

std::vector<SubsetMask> enumerate_subsets(int n, int r) {
  std::vector<SubsetMask> out;
  for_each_subset(n, r, [&](const SubsetMask& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<SubsetMask> subsets_of(const SubsetMask& set, int r) {
  std::vector<SubsetMask> out;
  SubsetEnumerator it(set.ground_size(), set.elements(), r);
  SubsetMask m;
  while (it.next(m)) out.push_back(m);
  return out;
}

}  // namespace vcfam
