#pragma once

#include <array>
#include <optional>
#include <string>

#include <json.hpp>

#include "vcfam/exact.hpp"
#include "vcfam/set_family.hpp"

namespace vcfam {

enum class CertificateKind { kLowerVcGeK, kUpperVcLeK };

const char* to_string(CertificateKind kind);  // "lower-vc-ge-k" | "upper-vc-le-k"

/// An exact-arithmetic record of a bound on D(k, s, n).
///
/// Lower: inequality_lhs is sum_{i<k} C(n, i), inequality_rhs the least size
/// of any k-covering s-uniform family, ceil(C(n,k) / C(s,k)). When lhs < rhs
/// every such family is too large to avoid shattering a k-set, so D >= k.
/// The sufficient_* fields record the simpler test k·C(n,k-1) < C(n,k)/C(s,k).
///
/// Upper: inequality_lhs is the VC-dimension of the witness family and
/// inequality_rhs is k; holds when the witness is k-covering and lhs <= rhs.
struct Certificate {
  Parameters params;
  CertificateKind kind = CertificateKind::kLowerVcGeK;
  Rational inequality_lhs;
  Rational inequality_rhs;
  bool holds = false;

  std::optional<Rational> sufficient_lhs;
  std::optional<Rational> sufficient_rhs;
  std::optional<bool> sufficient_holds;

  std::optional<SetFamily> witness;
  std::optional<std::string> witness_file;
};

// ceil(C(n, k) / C(s, k)): no k-covering family of s-sets is smaller.
BigInt min_cover_size_lower_bound(int k, int s, int n);

Certificate lower_bound_certificate(int k, int s, int n);

// Checks `witness` from scratch: s-uniform over [n], k-covering, VC <= k.
Certificate upper_bound_certificate(int k, const SetFamily& witness, int workers = 1);

// Upper certificate for covering_witness_family(k, s, n).
Certificate upper_bound_certificate(int k, int s, int n, int workers = 1);

struct CheckItem {
  std::string name;
  bool pass = false;
  bool vacuous = false;
  std::string detail;  // witness of failure, or a short confirmation
};

struct PropConstReport {
  int m = 0;
  int k = 0;
  int n = 0;
  std::array<CheckItem, 4> items;
  bool all_pass() const;
};

// Checks the four structural properties of build_Fk(m, k):
// k-covering, unique faces, closure under lowering the top element, and
// shattering of {n-k+1, ..., n} when 2k < n. Requires m + k - 1 <= 16.
PropConstReport verify_prop_const(int m, int k);

struct MainTheoremReport {
  int k = 0;
  int s = 0;
  int n = 0;
  Certificate lower;
  Certificate upper;
  int witness_vc = 0;
  bool holds = false;  // both certificates hold, hence D(k, s, n) = k
};

// Runs both certificates at n = k^2·C(s, k) + k. Requires that n <= 64.
MainTheoremReport verify_main_theorem(int k, int s, int workers = 1);

int main_theorem_threshold(int k, int s);

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const PropConstReport& r);
nlohmann::json to_json(const MainTheoremReport& r);

}  // namespace vcfam
