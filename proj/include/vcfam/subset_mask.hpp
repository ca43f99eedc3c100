#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vcfam {

inline constexpr int kMaxGroundSize = 256;

/// A subset of the ground set [n] = {1, ..., n}, stored as a fixed-width bit
/// vector. Element e lives at bit e-1, so comparing masks as unsigned
/// integers gives the canonical (colex) order used everywhere.
class SubsetMask {
 public:
  static constexpr int kWordBits = 64;
  static constexpr int kWords = kMaxGroundSize / kWordBits;
  using Words = std::array<std::uint64_t, kWords>;

  SubsetMask() = default;
  explicit SubsetMask(int n);

  static SubsetMask from_elements(int n, std::span<const int> elements);
  static SubsetMask from_elements(int n, std::initializer_list<int> elements) {
    return from_elements(n, std::span<const int>(elements.begin(), elements.size()));
  }
  static SubsetMask full(int n);
  // {first, ..., last}; empty when first > last.
  static SubsetMask interval(int n, int first, int last);

  int ground_size() const { return n_; }
  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool contains(int e) const {
    return (words_[(e - 1) / kWordBits] >> ((e - 1) % kWordBits)) & 1u;
  }
  void insert(int e);
  void erase(int e);

  bool is_subset_of(const SubsetMask& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const SubsetMask& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  SubsetMask& operator&=(const SubsetMask& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  SubsetMask& operator|=(const SubsetMask& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  SubsetMask& operator-=(const SubsetMask& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  // Complement within [n].
  SubsetMask complement() const;
  // Same bits, reinterpreted over a larger ground set.
  SubsetMask widened(int n) const;

  int min_element() const;  // 0 when empty
  int max_element() const;  // 0 when empty
  std::vector<int> elements() const;

  const Words& words() const { return words_; }

  // Canonical order: bits compared as a 256-bit unsigned integer, then n.
  friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
    for (int i = kWords - 1; i >= 0; --i)
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return a.n_ <=> b.n_;
  }
  friend bool operator==(const SubsetMask& a, const SubsetMask& b) = default;

  // "{1,3,4}"
  std::string to_string() const;

 private:
  Words words_{};
  int n_ = 0;
};

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(m.ground_size());
    for (auto w : m.words()) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace vcfam
