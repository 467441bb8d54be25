#include <gtest/gtest.h>

#include <sstream>

#include "slackcomm/catalog.hpp"
#include "slackcomm/convert.hpp"
#include "slackcomm/extension.hpp"

using namespace slackcomm;

namespace {

Factorization full_factorization(PolytopeFamily family, const Graph& g, const ProtocolTree& base) {
  const auto full = slack_matrix(family, g, true);
  const auto nonneg = split_nonnegativity(full).second;
  return protocol_to_factorization(
      combine_row_partition(base, nonnegativity_rows_protocol(nonneg.rows(), nonneg)));
}

}  // namespace

TEST(PolytopeDescription, SlackMatchesSlackMatrix) {
  EXPECT_EQ(spanning_tree_polytope(Graph::complete(4)).slack(),
            slack_matrix(PolytopeFamily::spanning_tree, Graph::complete(4), true));
  EXPECT_EQ(perfect_matching_polytope(Graph::complete(6)).slack(),
            slack_matrix(PolytopeFamily::perfect_matching, Graph::complete(6), true));
  EXPECT_EQ(stable_set_polytope(Graph::path(5)).slack(),
            slack_matrix(PolytopeFamily::stable_set, Graph::path(5), true));
}

TEST(PolytopeDescription, EqualityRows) {
  const auto p = spanning_tree_polytope(Graph::complete(3));
  EXPECT_EQ(p.equality_labels, (std::vector<std::string>{"E:all"}));
  EXPECT_EQ(p.g_eq.front(), 2);
  const auto q = perfect_matching_polytope(Graph::complete(4));
  EXPECT_EQ(q.equality_labels.size(), 4u);
  EXPECT_EQ(q.equality_labels.front(), "D:1");
  EXPECT_TRUE(stable_set_polytope(Graph::path(3)).equality_labels.empty());
}

TEST(CheckBounded, ZeroColumnsAndIdentity) {
  const LabeledMatrix id({"a", "b"}, {"1", "2"}, Matrix::identity(2));
  const LabeledMatrix right({"1", "2"}, {"c"}, Matrix(2, 1, {Rational(1), Rational(1)}));
  EXPECT_TRUE(check_bounded(Factorization(id, right)));
  const LabeledMatrix zero_col({"a", "b"}, {"1", "2"},
                               Matrix(2, 2, {Rational(1), Rational(0), Rational(3), Rational(0)}));
  const Factorization f(zero_col, right);
  EXPECT_FALSE(check_bounded(f));
  const auto stripped = strip_zero_columns(f);
  EXPECT_TRUE(check_bounded(stripped));
  EXPECT_EQ(stripped.rank(), 1u);
  EXPECT_EQ(stripped.product(), f.product());
}

TEST(CheckBounded, SpanningTreeFactorizationAfterStripping) {
  const auto f = protocol_to_factorization(spanning_tree_protocol(4));
  // Leaves that output 0 carry zero weight.
  EXPECT_FALSE(check_bounded(f));
  EXPECT_TRUE(check_bounded(strip_zero_columns(f)));
}

TEST(BuildExtension, SpanningTreeOnThreeVertices) {
  const Graph g = Graph::complete(3);
  const auto p = spanning_tree_polytope(g);
  const auto f = full_factorization(PolytopeFamily::spanning_tree, g, spanning_tree_protocol(3));
  const auto q = build_extension(p, f);
  EXPECT_EQ(q.size(), strip_zero_columns(f).rank());
  EXPECT_EQ(q.constraint_labels.size(), 7u + 3u + 1u);
  const auto report = verify_projection(q, p, f);
  EXPECT_TRUE(report.ok);
  EXPECT_EQ(report.vertices_lifted, 3u);
  EXPECT_TRUE(report.structural_containment);
  EXPECT_EQ(report.points_sampled, 4u);
}

TEST(BuildExtension, PerfectMatchingOnSixVertices) {
  const Graph g = Graph::complete(6);
  const auto base = perfect_matching_protocol(6, greedy_matching_cover(6));
  const auto f = full_factorization(PolytopeFamily::perfect_matching, g, base);
  const auto q = build_extension(perfect_matching_polytope(g), f);
  EXPECT_LE(q.size(), f.rank());
  EXPECT_TRUE(verify_projection(q, perfect_matching_polytope(g), f).ok);
}

TEST(BuildExtension, StableSetOfPath) {
  const Graph g = Graph::path(5);
  const auto f = full_factorization(PolytopeFamily::stable_set, g, clawfree_stable_set_protocol(g));
  const auto p = stable_set_polytope(g);
  EXPECT_TRUE(verify_projection(build_extension(p, f), p, f).ok);
}

TEST(BuildExtension, RejectsWrongFactorization) {
  const Graph g = Graph::complete(3);
  const auto f = protocol_to_factorization(spanning_tree_protocol(3));
  EXPECT_THROW(build_extension(spanning_tree_polytope(g), f), std::invalid_argument);
}

TEST(VerifyProjection, CorruptedEntryFailsLift) {
  const Graph g = Graph::complete(3);
  const auto p = spanning_tree_polytope(g);
  const auto f = full_factorization(PolytopeFamily::spanning_tree, g, spanning_tree_protocol(3));
  auto q = build_extension(p, f);
  // Pick an extra variable that is positive at some vertex.
  const Factorization stripped = strip_zero_columns(f);
  const Matrix& lift = stripped.right().entries();
  std::size_t col = 0;
  while (Matrix(1, lift.cols(), lift.row(col)).is_zero()) {
    ++col;
  }
  q.f(1, col) += 1;
  const auto report = verify_projection(q, p, f);
  ASSERT_FALSE(report.ok);
  EXPECT_EQ(report.failure->stage, "LIFT");
  EXPECT_EQ(report.failure->row, q.constraint_labels[1]);
}

TEST(VerifyProjection, NegativeFEntryFailsContainment) {
  const Graph g = Graph::complete(3);
  const auto p = spanning_tree_polytope(g);
  const auto base = full_factorization(PolytopeFamily::spanning_tree, g, spanning_tree_protocol(3));
  // One extra inner column whose right-factor row is zero leaves every lift
  // untouched, so only the containment check can see it.
  const auto& a = base.left();
  const auto& b = base.right();
  const std::size_t r = base.rank();
  Matrix left(a.rows(), r + 1), right(r + 1, b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      left(i, k) = a(i, k);
    }
    left(i, r) = 1;
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      right(k, j) = b(k, j);
    }
  }
  const auto inner = inner_labels(r + 1);
  const Factorization f(LabeledMatrix(a.row_labels(), inner, left),
                        LabeledMatrix(inner, b.col_labels(), right));
  auto q = build_extension(p, f);
  ASSERT_TRUE(verify_projection(q, p, f).ok);
  q.f(2, q.size() - 1) = -1;
  const auto report = verify_projection(q, p, f);
  ASSERT_FALSE(report.ok);
  EXPECT_EQ(report.failure->stage, "CONTAIN");
  EXPECT_EQ(report.failure->row, q.constraint_labels[2]);
  EXPECT_EQ(report.vertices_lifted, 3u);
}

TEST(VerifyProjection, DimensionMismatchThrows) {
  const Graph g = Graph::complete(3);
  const auto p = spanning_tree_polytope(g);
  const auto f = full_factorization(PolytopeFamily::spanning_tree, g, spanning_tree_protocol(3));
  auto q = build_extension(p, f);
  q.g.pop_back();
  EXPECT_THROW(verify_projection(q, p, f), std::invalid_argument);
}

TEST(ExtensionText, RoundTrips) {
  const Graph g = Graph::complete(3);
  const auto p = spanning_tree_polytope(g);
  const auto f = full_factorization(PolytopeFamily::spanning_tree, g, spanning_tree_protocol(3));
  const auto q = build_extension(p, f);
  const std::string text = to_text(q);
  EXPECT_EQ(text.rfind("extension constraints=11 d=3 r=", 0), 0u);
  std::istringstream in(text);
  const auto back = read_extension(in);
  EXPECT_EQ(back.e, q.e);
  EXPECT_EQ(back.g, q.g);
  EXPECT_EQ(back.f, q.f);
  EXPECT_EQ(back.constraint_labels, q.constraint_labels);
  std::istringstream bad("extension constraints=2 d=3 r=1\n");
  EXPECT_THROW(read_extension(bad), std::invalid_argument);
}
