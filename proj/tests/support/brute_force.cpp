#include "brute_force.hpp"

#include <bit>
#include <stdexcept>

namespace vcfam::testing {

std::vector<Bits> to_bits(const SetFamily& f) {
  if (f.ground_size() > 32) throw std::invalid_argument("brute force limited to n <= 32");
  std::vector<Bits> out;
  for (const auto& m : f.members()) out.push_back(static_cast<Bits>(m.words()[0]));
  return out;
}

BigInt factorial_binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  auto fact = [](int v) {
    BigInt f = 1;
    for (int i = 2; i <= v; ++i) f *= i;
    return f;
  };
  return fact(n) / (fact(r) * fact(n - r));
}

bool brute_shatters(const std::vector<Bits>& members, Bits probe) {
  const int d = std::popcount(probe);
  std::vector<bool> seen(std::size_t{1} << d, false);
  for (Bits s : members) {
    // Compress the trace onto d bits in element order.
    Bits t = s & probe, idx = 0;
    int pos = 0;
    for (Bits p = probe; p; p &= p - 1, ++pos)
      if (t & (p & -p)) idx |= Bits{1} << pos;
    seen[idx] = true;
  }
  for (bool b : seen)
    if (!b) return false;
  return true;
}

int brute_vc(const std::vector<Bits>& members, int n) {
  int best = 0;
  for (Bits a = 0; a < (Bits{1} << n); ++a)
    if (std::popcount(a) > best && brute_shatters(members, a)) best = std::popcount(a);
  return best;
}

bool brute_covering(const std::vector<Bits>& members, int n, int k) {
  for (Bits a = 0; a < (Bits{1} << n); ++a) {
    if (std::popcount(a) != k) continue;
    bool hit = false;
    for (Bits s : members)
      if ((a & s) == a) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

int brute_D(int k, int s, int n) {
  std::vector<Bits> universe;
  for (Bits a = 0; a < (Bits{1} << n); ++a)
    if (std::popcount(a) == s) universe.push_back(a);
  if (universe.size() > 20) throw std::invalid_argument("brute_D universe too large");
  int best = n + 1;
  for (std::uint32_t pick = 1; pick < (1u << universe.size()); ++pick) {
    std::vector<Bits> fam;
    for (std::uint32_t c = pick; c; c &= c - 1) fam.push_back(universe[std::countr_zero(c)]);
    if (!brute_covering(fam, n, k)) continue;
    best = std::min(best, brute_vc(fam, n));
  }
  return best;
}

}  // namespace vcfam::testing
