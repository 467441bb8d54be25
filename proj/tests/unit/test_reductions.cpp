#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slackcomm/reductions.hpp"

using namespace slackcomm;

TEST(Disj, Basics) {
  EXPECT_EQ(disj({2, VertexSet{1}, VertexSet{2}}), 1);
  EXPECT_EQ(disj({1, VertexSet{1}, VertexSet{1}}), 0);
  EXPECT_EQ(disj({3, VertexSet{}, VertexSet{1, 2, 3}}), 1);
}

TEST(ReduceToPm, HandTrace) {
  const auto r = reduce_to_pm({1, VertexSet{1}, VertexSet{1}});
  EXPECT_EQ(r.k, 2);
  EXPECT_EQ(r.ell, 8);
  EXPECT_EQ(r.dummies_added, 1u);
  EXPECT_EQ(r.u, (VertexSet{1, 3, 7}));
  EXPECT_EQ(r.m, (EdgeSet{Edge(1, 2), Edge(3, 5), Edge(4, 6), Edge(7, 8)}));
  EXPECT_EQ(reduction_slack(r), oracle::crossing(r.u, r.m) - 1);
  EXPECT_EQ(reduction_slack(r), 2);
}

TEST(ReduceToPm, EmptyAIsSingleton) {
  const auto r = reduce_to_pm({3, VertexSet{}, VertexSet{1, 2}});
  EXPECT_EQ(r.u, (VertexSet{3 * r.k + 1}));
  EXPECT_EQ(reduction_slack(r), 0);
}

TEST(ReduceToPm, StructuralInvariants) {
  for (int n = 0; n <= 5; ++n) {
    const auto subsets = oracle::subsets_by_mask(n);
    for (const auto& a : subsets) {
      for (const auto& b : subsets) {
        const auto r = reduce_to_pm({n, a, b});
        EXPECT_LE(r.ell, 3 * n + 8);
        EXPECT_LE(r.k, n + 2);
        EXPECT_EQ(r.u.size(), 2 * a.size() + 1);
        EXPECT_TRUE(oracle::is_perfect_matching(r.ell, r.m));
        EXPECT_EQ(disj({n, a, b}) == 1, oracle::crossing(r.u, r.m) == 1);
      }
    }
  }
}

TEST(ReduceToSt, HandTraces) {
  const auto r = reduce_to_st({2, VertexSet{1}, VertexSet{1}});
  EXPECT_EQ(r.ell, 5);
  EXPECT_EQ(r.u, (VertexSet{3, 5}));
  EXPECT_EQ(r.t, (EdgeSet{Edge(1, 5), Edge(2, 5), Edge(1, 3), Edge(4, 5)}));
  EXPECT_EQ(oracle::components(5, r.t, r.u), 2);
  EXPECT_EQ(reduction_slack(r), 1);

  const auto s = reduce_to_st({2, VertexSet{1}, VertexSet{2}});
  EXPECT_EQ(s.t, (EdgeSet{Edge(1, 5), Edge(2, 5), Edge(2, 4), Edge(3, 5)}));
  EXPECT_EQ(reduction_slack(s), 0);
}

TEST(ReduceToSt, TreesAreSpanning) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& b : oracle::subsets_by_mask(n)) {
      const auto r = reduce_to_st({n, VertexSet{}, b});
      EXPECT_EQ(r.t.size(), static_cast<std::size_t>(2 * n));
      EXPECT_TRUE(oracle::is_spanning_tree(2 * n + 1, r.t));
      EXPECT_TRUE(r.u.contains(2 * n + 1));
    }
  }
}

TEST(VerifyReduction, ExhaustiveEquivalence) {
  for (int n = 0; n <= 4; ++n) {
    const auto pm = verify_reduction(ReductionTarget::pm, n);
    EXPECT_TRUE(pm.ok) << n;
    EXPECT_EQ(pm.pairs_checked, std::size_t{1} << (2 * n));
  }
  for (int n = 0; n <= 6; ++n) {
    EXPECT_TRUE(verify_reduction(ReductionTarget::st, n).ok) << n;
  }
}

TEST(VerifyReduction, DroppingAnchorBreaksIt) {
  const auto pm = verify_reduction(ReductionTarget::pm, 3, true);
  EXPECT_FALSE(pm.ok);
  ASSERT_TRUE(pm.counterexample.has_value());
  const auto st = verify_reduction(ReductionTarget::st, 3, true);
  EXPECT_FALSE(st.ok);
}

TEST(VerifyReduction, RejectsBadInput) {
  EXPECT_THROW(verify_reduction(ReductionTarget::pm, -1), std::invalid_argument);
  EXPECT_THROW(reduce_to_pm({2, VertexSet{3}, VertexSet{}}), std::invalid_argument);
}
