#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "vcfam/constructions.hpp"
#include "vcfam/covering.hpp"
#include "vcfam/errors.hpp"
#include "vcfam/exact.hpp"
#include "vcfam/oracle.hpp"
#include "vcfam/vc.hpp"

namespace vcfam {
namespace {

void expect_valid_witness(const OracleResult& r) {
  const auto& p = r.params;
  EXPECT_EQ(r.witness.ground_size(), p.n);
  EXPECT_EQ(r.witness.uniform_size(), p.s);
  EXPECT_TRUE(is_k_covering(r.witness, p.k).holds);
  EXPECT_EQ(vc_dimension(r.witness).dimension, r.value);
}

TEST(Exists, PairsCoverPointsWithVcOne) {
  const auto f = exists_covering_with_vc_at_most(Parameters::make(1, 2, 4), 1);
  ASSERT_TRUE(f);
  EXPECT_TRUE(is_k_covering(*f, 1).holds);
  EXPECT_LE(vc_dimension(*f).dimension, 1);
  EXPECT_EQ(f->uniform_size(), 2);
}

TEST(Exists, FullPairFamilyIsForced) {
  EXPECT_FALSE(exists_covering_with_vc_at_most(Parameters::make(2, 2, 4), 1));
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto f = exists_covering_with_vc_at_most(Parameters::make(k, k, n), std::min(k, n - k));
      ASSERT_TRUE(f);
      EXPECT_EQ(*f, full_family(n, k));
    }
}

TEST(Exists, RejectsBadD) {
  EXPECT_THROW(exists_covering_with_vc_at_most(Parameters::make(1, 2, 4), 3), DomainError);
  EXPECT_THROW(exists_covering_with_vc_at_most(Parameters::make(1, 2, 4), -1), DomainError);
}

TEST(Oracle, TrivialFamily) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto r = oracle_D(Parameters::make(k, n, n));
      EXPECT_EQ(r.value, 0);
      EXPECT_EQ(r.witness, make_family(n, {SubsetMask::full(n).elements()}));
    }
}

TEST(Oracle, DiagonalClosedForm) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto r = oracle_D(Parameters::make(k, k, n));
      EXPECT_EQ(r.value, std::min(k, n - k)) << k << "," << n;
      expect_valid_witness(r);
    }
}

TEST(Oracle, SmallValues) {
  EXPECT_EQ(oracle_D(Parameters::make(2, 2, 5)).value, 2);
  EXPECT_EQ(oracle_D(Parameters::make(1, 2, 5)).value, 1);
  // Frozen from the independent enumeration over all 2^10 subfamilies.
  EXPECT_EQ(testing::brute_D(2, 3, 5), 2);
  const auto r = oracle_D(Parameters::make(2, 3, 5));
  EXPECT_EQ(r.value, 2);
  expect_valid_witness(r);
}

TEST(Oracle, AgreesWithBruteForce) {
  for (int n = 1; n <= 7; ++n)
    for (int s = 1; s <= n; ++s) {
      if (binomial(n, s) > 16) continue;
      for (int k = 1; k <= s; ++k) {
        const auto p = Parameters::make(k, s, n);
        const int expected = testing::brute_D(k, s, n);
        const auto bb = oracle_D(p);
        const auto en = oracle_D_enumerate(p);
        EXPECT_EQ(bb.value, expected) << k << "," << s << "," << n;
        EXPECT_EQ(en.value, expected) << k << "," << s << "," << n;
        expect_valid_witness(bb);
        expect_valid_witness(en);
        EXPECT_EQ(bb.method, "branch-and-bound");
        EXPECT_EQ(en.method, "exhaustive");
      }
    }
}

TEST(Oracle, IncrementalAndNaiveWalkTheSameTree) {
  for (auto [k, s, n] : {std::tuple{1, 2, 6}, {2, 3, 6}, {2, 2, 6}, {1, 3, 6}, {2, 4, 6}}) {
    OracleOptions naive;
    naive.incremental = false;
    const auto a = oracle_D(Parameters::make(k, s, n));
    const auto b = oracle_D(Parameters::make(k, s, n), naive);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
  }
}

TEST(Oracle, WorkerCountDoesNotChangeTheResult) {
  for (auto [k, s, n] : {std::tuple{1, 2, 7}, {2, 3, 6}, {2, 2, 7}, {1, 3, 6}, {3, 4, 6}, {1, 5, 6}}) {
    const auto p = Parameters::make(k, s, n);
    const auto a = oracle_D(p);
    for (int w : {2, 3, 8}) {
      OracleOptions opts;
      opts.workers = w;
      const auto b = oracle_D(p, opts);
      EXPECT_EQ(a.value, b.value);
      EXPECT_EQ(a.witness, b.witness);
      EXPECT_EQ(a.nodes_explored, b.nodes_explored);
    }
  }
}

TEST(Oracle, FeasibilityCap) {
  EXPECT_THROW(oracle_D(Parameters::make(2, 3, 7)), FeasibilityError);  // C(7,3) = 35
  OracleOptions tight;
  tight.cap = 5;
  EXPECT_THROW(oracle_D(Parameters::make(1, 2, 4), tight), FeasibilityError);
  EXPECT_THROW(oracle_D_enumerate(Parameters::make(1, 2, 8)), FeasibilityError);
}

TEST(Oracle, ConsistentWithWitnessConstruction) {
  for (int n = 1; n <= 8; ++n)
    for (int s = 1; s <= n; ++s) {
      if (binomial(n, s) > kDefaultOracleCap) continue;
      for (int k = 1; k <= s; ++k) {
        const int upper = vc_dimension(covering_witness_family(k, s, n)).dimension;
        EXPECT_LE(oracle_D(Parameters::make(k, s, n)).value, upper) << k << "," << s << "," << n;
      }
    }
}

TEST(Oracle, VcOneIsRareForLargeArity) {
  // 2 <= k <= s < 2k and s + k < n force D >= 2.
  for (int n = 1; n <= 10; ++n)
    for (int s = 2; s <= n; ++s)
      for (int k = 2; k <= s; ++k) {
        if (!(s < 2 * k && s + k < n) || binomial(n, s) > kDefaultOracleCap) continue;
        EXPECT_GE(oracle_D(Parameters::make(k, s, n)).value, 2) << k << "," << s << "," << n;
      }
}

TEST(Oracle, Json) {
  const auto j = to_json(oracle_D(Parameters::make(1, 2, 4)));
  EXPECT_EQ(j["value"], 1);
  EXPECT_EQ(j["method"], "branch-and-bound");
  EXPECT_EQ(j["witness"]["n"], 4);
}

}  // namespace
}  // namespace vcfam
