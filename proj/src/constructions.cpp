#include "vcfam/constructions.hpp"

#include <string>

#include "vcfam/enumerate.hpp"
#include "vcfam/errors.hpp"

namespace vcfam {
namespace {

void require_ground(long long n) {
  if (n > kMaxGroundSize)
    throw DomainError("ground size " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxGroundSize));
}

}  // namespace

SetFamily full_family(int n, int s) {
  if (n < 1) throw DomainError("full_family needs n >= 1");
  if (s < 0 || s > n) throw DomainError("full_family needs 0 <= s <= n");
  require_ground(n);
  return SetFamily::from_masks(n, enumerate_subsets(n, s));
}

SetFamily initial_segment_family(int n) {
  if (n < 2) throw DomainError("initial_segment_family needs n >= 2");
  require_ground(n);
  std::vector<SubsetMask> members;
  for (int last = 0; last < n; ++last) members.push_back(SubsetMask::interval(n, 1, last));
  return SetFamily::from_masks(n, std::move(members));
}

SetFamily cone(const SetFamily& f) {
  const int n = f.ground_size() + 1;
  require_ground(n);
  std::vector<SubsetMask> members;
  for (const auto& s : f.members()) {
    auto m = s.widened(n);
    m.insert(n);
    members.push_back(m);
  }
  return SetFamily::from_masks(n, std::move(members));
}

SetFamily product(const SetFamily& f, int l) {
  if (l < 1) throw DomainError("product needs l >= 1");
  const long long big = static_cast<long long>(f.ground_size()) * l;
  require_ground(big);
  const int n = static_cast<int>(big);
  std::vector<SubsetMask> members;
  for (const auto& s : f.members()) {
    SubsetMask m(n);
    for (int v : s.elements())
      for (int x = 1; x <= l; ++x) m.insert((v - 1) * l + x);
    members.push_back(m);
  }
  return SetFamily::from_masks(n, std::move(members));
}

SetFamily hypercube_family(int k, int m) {
  if (k < 1 || m < 1) throw DomainError("hypercube_family needs k >= 1 and m >= 1");
  const int base = k + 1;
  long long points = 1;
  for (int i = 0; i < m; ++i) {
    points *= base;
    if (points > kMaxGroundSize)
      throw DomainError("hypercube ground (k+1)^m exceeds " + std::to_string(kMaxGroundSize));
  }
  const int n = static_cast<int>(points);

  // The member indexed by `omit` (digits t_i) holds every point whose i-th
  // coordinate differs from t_i for all i.
  std::vector<SubsetMask> members;
  for (int omit = 0; omit < n; ++omit) {
    SubsetMask member(n);
    for (int p = 0; p < n; ++p) {
      bool inside = true;
      for (int i = 0, pp = p, oo = omit; i < m; ++i, pp /= base, oo /= base)
        if (pp % base == oo % base) {
          inside = false;
          break;
        }
      if (inside) member.insert(p + 1);
    }
    members.push_back(member);
  }
  return SetFamily::from_masks(n, std::move(members));
}

SetFamily base_pairs_family(int m) {
  if (m < 2) throw DomainError("base_pairs_family needs m >= 2");
  require_ground(m);
  std::vector<SubsetMask> members;
  for (int t = 1; 2 * t <= m; ++t) members.push_back(SubsetMask::from_elements(m, {2 * t - 1, 2 * t}));
  members.push_back(SubsetMask::from_elements(m, {m - 1, m}));
  return SetFamily::from_masks(m, std::move(members));
}

SetFamily recursive_step(const SetFamily& f) {
  f.require_uniform("recursive_step");
  const int n = f.ground_size() + 1;
  require_ground(n);
  std::vector<SubsetMask> members;
  for (const auto& s : f.members())
    for (int i = s.max_element() + 1; i <= n; ++i) {
      auto m = s.widened(n);
      m.insert(i);
      members.push_back(m);
    }
  return SetFamily::from_masks(n, std::move(members));
}

SetFamily build_Fk(int m, int k) {
  if (m < 2) throw DomainError("build_Fk needs m >= 2");
  if (k < 1) throw DomainError("build_Fk needs k >= 1");
  require_ground(static_cast<long long>(m) + k - 1);
  SetFamily f = base_pairs_family(m);
  for (int i = 1; i < k; ++i) f = recursive_step(f);
  return f;
}

SetFamily covering_witness_family(int k, int s, int n) {
  const auto p = Parameters::make(k, s, n);
  if (p.s == p.k) return full_family(p.n, p.k);
  const int m = p.n - p.s + 2;
  if (m < 2) throw DomainError("covering_witness_family needs n - s + 2 >= 2");
  SetFamily f = build_Fk(m, p.k);
  for (int i = 0; i < p.s - p.k - 1; ++i) f = cone(f);
  return f;
}

}  // namespace vcfam
