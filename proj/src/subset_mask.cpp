#include "vcfam/subset_mask.hpp"

#include "vcfam/errors.hpp"

namespace vcfam {

SubsetMask::SubsetMask(int n) : n_(n) {
  if (n < 0 || n > kMaxGroundSize)
    throw DomainError("ground size " + std::to_string(n) + " outside [0, " +
                      std::to_string(kMaxGroundSize) + "]");
}

SubsetMask SubsetMask::from_elements(int n, std::span<const int> elements) {
  SubsetMask m(n);
  for (int e : elements) m.insert(e);
  return m;
}

SubsetMask SubsetMask::full(int n) { return interval(n, 1, n); }

SubsetMask SubsetMask::interval(int n, int first, int last) {
  SubsetMask m(n);
  for (int e = first; e <= last; ++e) m.insert(e);
  return m;
}

void SubsetMask::insert(int e) {
  if (e < 1 || e > n_)
    throw DomainError("element " + std::to_string(e) + " out of range [1, " +
                      std::to_string(n_) + "]");
  words_[(e - 1) / kWordBits] |= std::uint64_t{1} << ((e - 1) % kWordBits);
}

void SubsetMask::erase(int e) {
  if (e < 1 || e > n_) return;
  words_[(e - 1) / kWordBits] &= ~(std::uint64_t{1} << ((e - 1) % kWordBits));
}

SubsetMask SubsetMask::complement() const { return full(n_) - *this; }

SubsetMask SubsetMask::widened(int n) const {
  if (n < n_) throw DomainError("cannot narrow a subset mask");
  SubsetMask m(n);
  m.words_ = words_;
  return m;
}

int SubsetMask::min_element() const {
  for (int i = 0; i < kWords; ++i)
    if (words_[i]) return i * kWordBits + std::countr_zero(words_[i]) + 1;
  return 0;
}

int SubsetMask::max_element() const {
  for (int i = kWords - 1; i >= 0; --i)
    if (words_[i]) return i * kWordBits + (kWordBits - std::countl_zero(words_[i]));
  return 0;
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (int i = 0; i < kWords; ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(i * kWordBits + std::countr_zero(w) + 1);
      w &= w - 1;
    }
  }
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

}  // namespace vcfam
