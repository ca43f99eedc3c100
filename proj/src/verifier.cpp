#include "vcfam/verifier.hpp"

#include <algorithm>

#include "vcfam/constructions.hpp"
#include "vcfam/covering.hpp"
#include "vcfam/enumerate.hpp"
#include "vcfam/errors.hpp"
#include "vcfam/family_io.hpp"
#include "vcfam/vc.hpp"

namespace vcfam {

const char* to_string(CertificateKind kind) {
  return kind == CertificateKind::kLowerVcGeK ? "lower-vc-ge-k" : "upper-vc-le-k";
}

BigInt min_cover_size_lower_bound(int k, int s, int n) {
  Parameters::make(k, s, n);
  return ceil_div(binomial(n, k), binomial(s, k));
}

Certificate lower_bound_certificate(int k, int s, int n) {
  Certificate c;
  c.params = Parameters::make(k, s, n);
  c.kind = CertificateKind::kLowerVcGeK;
  c.inequality_lhs = Rational(sauer_shelah_sum(n, k));
  c.inequality_rhs = Rational(min_cover_size_lower_bound(k, s, n));
  c.holds = c.inequality_lhs < c.inequality_rhs;
  c.sufficient_lhs = Rational(BigInt(k) * binomial(n, k - 1));
  c.sufficient_rhs = Rational(binomial(n, k), binomial(s, k));
  c.sufficient_holds = *c.sufficient_lhs < *c.sufficient_rhs;
  return c;
}

Certificate upper_bound_certificate(int k, const SetFamily& witness, int workers) {
  const int s = witness.require_uniform("upper_bound_certificate");
  Certificate c;
  c.params = Parameters::make(k, s, witness.ground_size());
  c.kind = CertificateKind::kUpperVcLeK;
  const bool covering = is_k_covering(witness, k).holds;
  const int vc = vc_dimension(witness, workers).dimension;
  c.inequality_lhs = Rational(vc);
  c.inequality_rhs = Rational(k);
  c.holds = covering && vc <= k;
  c.witness = witness;
  return c;
}

Certificate upper_bound_certificate(int k, int s, int n, int workers) {
  return upper_bound_certificate(k, covering_witness_family(k, s, n), workers);
}

bool PropConstReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

PropConstReport verify_prop_const(int m, int k) {
  if (m < 2 || k < 1) throw DomainError("verify_prop_const needs m >= 2 and k >= 1");
  if (m + k - 1 > 16) throw DomainError("verify_prop_const needs m + k - 1 <= 16");
  const SetFamily f = build_Fk(m, k);
  const int n = m + k - 1;
  PropConstReport r{m, k, n, {}};

  auto& covering = r.items[0];
  covering.name = "k-covering";
  const auto cover = is_k_covering(f, k);
  covering.pass = cover.holds && f.uniform_size() == k + 1;
  covering.detail = cover.holds ? "every " + std::to_string(k) + "-set covered"
                                : "uncovered " + cover.uncovered->to_string();
  if (f.uniform_size() != k + 1) covering.detail += "; members are not (k+1)-sets";

  auto& faces = r.items[1];
  faces.name = "unique-face";
  const auto face = unique_face(f);
  faces.pass = face.holds;
  faces.detail = face.holds ? "all " + std::to_string(f.size()) + " members have a unique face"
                            : "no unique face for " + face.violator->to_string();

  auto& lowering = r.items[2];
  lowering.name = "top-lowering-closure";
  lowering.pass = true;
  bool any_gap = false;
  for (const auto& s : f.members()) {
    const auto elems = s.elements();
    const int below = elems[elems.size() - 2];
    const int top = elems.back();
    for (int t = below + 1; t < top; ++t) {
      any_gap = true;
      auto lowered = s;
      lowered.erase(top);
      lowered.insert(t);
      if (!f.contains(lowered)) {
        lowering.pass = false;
        lowering.detail = s.to_string() + " with t=" + std::to_string(t) + ": " +
                          lowered.to_string() + " missing";
        break;
      }
    }
    if (!lowering.pass) break;
  }
  lowering.vacuous = !any_gap;
  if (lowering.pass) lowering.detail = any_gap ? "closed" : "no gaps between the top two elements";

  auto& tail = r.items[3];
  tail.name = "tail-shattered";
  if (2 * k < n) {
    const auto probe = SubsetMask::interval(n, n - k + 1, n);
    tail.pass = shatters(f, probe);
    tail.detail = probe.to_string() + (tail.pass ? " shattered" : " not shattered");
  } else {
    tail.pass = true;
    tail.vacuous = true;
    tail.detail = "2k >= n";
  }
  return r;
}

int main_theorem_threshold(int k, int s) {
  if (k < 1 || k > s) throw DomainError("main theorem needs 1 <= k <= s");
  const BigInt t = BigInt(k) * k * binomial(s, k) + k;
  if (t > kMaxGroundSize) throw DomainError("threshold n = " + t.str() + " exceeds the ground limit");
  return t.convert_to<int>();
}

MainTheoremReport verify_main_theorem(int k, int s, int workers) {
  const int n = main_theorem_threshold(k, s);
  if (n > 64)
    throw DomainError("threshold n = " + std::to_string(n) + " is beyond the tractable limit 64");
  MainTheoremReport r;
  r.k = k;
  r.s = s;
  r.n = n;
  r.lower = lower_bound_certificate(k, s, n);
  r.upper = upper_bound_certificate(k, s, n, workers);
  r.witness_vc = static_cast<int>(boost::multiprecision::numerator(r.upper.inequality_lhs));
  r.holds = r.lower.holds && r.upper.holds;
  return r;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j = {{"k", c.params.k},
                      {"s", c.params.s},
                      {"n", c.params.n},
                      {"kind", to_string(c.kind)},
                      {"inequality_lhs", to_string(c.inequality_lhs)},
                      {"inequality_rhs", to_string(c.inequality_rhs)},
                      {"holds", c.holds}};
  if (c.sufficient_holds) {
    j["sufficient_lhs"] = to_string(*c.sufficient_lhs);
    j["sufficient_rhs"] = to_string(*c.sufficient_rhs);
    j["sufficient_holds"] = *c.sufficient_holds;
  }
  if (c.witness_file) j["witness_file"] = *c.witness_file;
  return j;
}

nlohmann::json to_json(const PropConstReport& r) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& i : r.items)
    items.push_back({{"name", i.name}, {"pass", i.pass}, {"vacuous", i.vacuous}, {"detail", i.detail}});
  return {{"m", r.m}, {"k", r.k}, {"n", r.n}, {"items", std::move(items)}, {"pass", r.all_pass()}};
}

nlohmann::json to_json(const MainTheoremReport& r) {
  return {{"k", r.k},
          {"s", r.s},
          {"n", r.n},
          {"lower", to_json(r.lower)},
          {"upper", to_json(r.upper)},
          {"witness_vc", r.witness_vc},
          {"D", r.holds ? nlohmann::json(r.k) : nlohmann::json(nullptr)},
          {"pass", r.holds}};
}

}  // namespace vcfam
