#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "slackcomm/catalog.hpp"
#include "slackcomm/convert.hpp"

using namespace slackcomm;

namespace {

std::vector<std::string> names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

Factorization random_factorization(std::mt19937_64& rng, std::size_t m, std::size_t r,
                                   std::size_t n) {
  Matrix a(m, r), b(r, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      a(i, k) = oracle::random_rational(rng, 4, 3);
    }
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      b(k, j) = oracle::random_rational(rng, 5, 4);
    }
  }
  const auto inner = inner_labels(r);
  return Factorization(LabeledMatrix(names("r", m), inner, a),
                       LabeledMatrix(inner, names("c", n), b));
}

std::size_t ceil_lg(std::size_t v) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < v) {
    ++bits;
  }
  return bits;
}

}  // namespace

TEST(Factorization, ChecksInnerDimension) {
  EXPECT_THROW(Factorization(LabeledMatrix({"a"}, {"1", "2"}, Matrix(1, 2)),
                             LabeledMatrix({"1"}, {"b"}, Matrix(1, 1))),
               std::invalid_argument);
  EXPECT_EQ(inner_labels(3), (std::vector<std::string>{"1", "2", "3"}));
}

TEST(TraversalTerms, EachLeafMatrixIsRankOne) {
  const auto t = spanning_tree_protocol(4);
  const auto terms = traversal_terms(t);
  EXPECT_EQ(terms.size(), t.root()->leaf_count());
  std::size_t checked = 0;
  for (const auto& term : terms) {
    Matrix p(term.row_vector.size(), term.column_vector.size());
    for (std::size_t i = 0; i < p.rows(); ++i) {
      for (std::size_t j = 0; j < p.cols(); ++j) {
        p(i, j) = term.row_vector[i] * term.column_vector[j];
      }
    }
    EXPECT_LE(rank(p), 1u);
    if (++checked == 20) {
      break;
    }
  }
}

TEST(ProtocolToFactorization, ReproducesSlackForCatalog) {
  const auto t = spanning_tree_protocol(4);
  const auto f = protocol_to_factorization(t);
  EXPECT_EQ(f.rank(), t.root()->leaf_count());
  EXPECT_LE(f.rank(), std::size_t{1} << complexity(t));
  EXPECT_TRUE(verify_factorization(
      slack_matrix(PolytopeFamily::spanning_tree, Graph::complete(4), false), f));
}

TEST(ProtocolToFactorization, RejectsInvalidTrees) {
  auto bad = Node::internal(Player::alice, {Rational(2)}, Node::leaf(1), Node::leaf(0));
  EXPECT_THROW(protocol_to_factorization(ProtocolTree(bad, {"a"}, {"b"})), std::invalid_argument);
}

TEST(StochasticForm, RowsSumToOne) {
  std::mt19937_64 rng(1);
  const auto f = random_factorization(rng, 5, 3, 4);
  const auto sf = stochastic_form(f);
  EXPECT_EQ(sf.a_hat.cols(), 4u);
  EXPECT_EQ(sf.b_hat.rows(), 4u);
  for (std::size_t i = 0; i < sf.a_hat.rows(); ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < sf.a_hat.cols(); ++k) {
      s += sf.a_hat(i, k);
    }
    EXPECT_EQ(s, 1);
  }
  for (std::size_t j = 0; j < sf.b_hat.cols(); ++j) {
    EXPECT_EQ(sf.b_hat(3, j), 0);
  }
  EXPECT_EQ(multiply(sf.a_hat, sf.b_hat), f.product());
}

TEST(FactorizationToProtocol, RandomRoundTrips) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t m = 1 + rng() % 7, r = 1 + rng() % 6, n = 1 + rng() % 7;
    const auto f = random_factorization(rng, m, r, n);
    const auto t = factorization_to_protocol(f);
    EXPECT_TRUE(validate(t).empty());
    const LabeledMatrix target(f.left().row_labels(), f.right().col_labels(), f.product());
    if (target.entries().is_zero()) {
      continue;
    }
    EXPECT_TRUE(computes_in_expectation(t, target).ok) << "trial " << trial;
    EXPECT_EQ(complexity(t), ceil_lg(r + 1) + 1) << "trial " << trial;
  }
}

TEST(FactorizationToProtocol, ZeroLeftFactorGivesZeroLeaf) {
  const Factorization f(LabeledMatrix({"a"}, {"1"}, Matrix(1, 1)),
                        LabeledMatrix({"1"}, {"b"}, Matrix(1, 1, {Rational(1)})));
  const auto t = factorization_to_protocol(f);
  EXPECT_TRUE(t.root()->is_leaf());
  EXPECT_EQ(expectation_at(t, 0, 0), 0);
}

TEST(CombineRowPartition, StacksMatrices) {
  const Graph g = Graph::complete(4);
  const auto full = slack_matrix(PolytopeFamily::spanning_tree, g, true);
  const auto [rest, nonneg] = split_nonnegativity(full);
  const auto t1 = spanning_tree_protocol(4);
  const auto t2 = nonnegativity_rows_protocol(nonneg.rows(), nonneg);
  EXPECT_TRUE(computes_in_expectation(t2, nonneg).ok);
  EXPECT_EQ(complexity(t2), ceil_lg(nonneg.rows()) + 1);
  const auto both = combine_row_partition(t1, t2);
  EXPECT_TRUE(validate(both).empty());
  EXPECT_EQ(complexity(both), 1 + std::max(complexity(t1), complexity(t2)));
  EXPECT_TRUE(computes_in_expectation(both, full).ok);
  EXPECT_EQ(both.x_domain(), full.row_labels());
}

TEST(CombineRowPartition, RejectsOverlapAndColumnMismatch) {
  const auto t = spanning_tree_protocol(3);
  EXPECT_THROW(combine_row_partition(t, t), std::invalid_argument);
  const ProtocolTree other(Node::leaf(0), {"zz"}, {"q"});
  EXPECT_THROW(combine_row_partition(t, other), std::invalid_argument);
}

TEST(CombineRowPartition, PermutesColumnOrder) {
  const ProtocolTree a(
      Node::internal(Player::bob, {Rational(1), Rational(0)}, Node::leaf(1), Node::leaf(2)),
      {"r1"}, {"c1", "c2"});
  const ProtocolTree b(
      Node::internal(Player::bob, {Rational(1), Rational(0)}, Node::leaf(5), Node::leaf(7)),
      {"r2"}, {"c2", "c1"});
  const auto both = combine_row_partition(a, b);
  EXPECT_EQ(expectation_at(both, both.x_index("r2"), both.y_index("c2")), 5);
  EXPECT_EQ(expectation_at(both, both.x_index("r2"), both.y_index("c1")), 7);
  EXPECT_EQ(expectation_at(both, both.x_index("r1"), both.y_index("c1")), 1);
}

TEST(NonnegativityRows, RejectsBadDimensions) {
  const LabeledMatrix m({"x:12"}, {"T:12"}, Matrix(1, 1, {Rational(1)}));
  EXPECT_THROW(nonnegativity_rows_protocol(0, m), std::invalid_argument);
  EXPECT_THROW(nonnegativity_rows_protocol(2, m), std::invalid_argument);
}

TEST(VerifyFactorization, DimensionMismatchIsFalse) {
  const Factorization f(LabeledMatrix({"a"}, {"1"}, Matrix(1, 1, {Rational(1)})),
                        LabeledMatrix({"1"}, {"b"}, Matrix(1, 1, {Rational(1)})));
  EXPECT_TRUE(verify_factorization(LabeledMatrix({"a"}, {"b"}, Matrix(1, 1, {Rational(1)})), f));
  EXPECT_FALSE(verify_factorization(LabeledMatrix({"a"}, {"b"}, Matrix(1, 1, {Rational(2)})), f));
  EXPECT_FALSE(verify_factorization(LabeledMatrix({"a", "c"}, {"b"}, Matrix(2, 1)), f));
}

TEST(FactorizationText, RoundTrips) {
  std::mt19937_64 rng(9);
  const auto f = random_factorization(rng, 3, 2, 4);
  std::istringstream in(to_text(f));
  const auto back = read_factorization(in);
  EXPECT_EQ(back.left(), f.left());
  EXPECT_EQ(back.right(), f.right());
  std::istringstream bad("nonsense\n");
  EXPECT_THROW(read_factorization(bad), std::invalid_argument);
}

TEST(RectangleBounds, IdentityNeedsOneRectanglePerOne) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const LabeledMatrix id(names("r", n), names("c", n), Matrix::identity(n));
    EXPECT_EQ(fooling_set_bound(id), n);
    EXPECT_EQ(rectangle_cover_lower_bound(id), n);
  }
}

TEST(RectangleBounds, AllOnesIsOneRectangle) {
  const LabeledMatrix ones(names("r", 4), names("c", 5), Matrix::constant(4, 5, 1));
  EXPECT_EQ(rectangle_cover_lower_bound(ones), 1u);
  EXPECT_EQ(rectangle_cover_lower_bound(LabeledMatrix(names("r", 2), names("c", 2), Matrix(2, 2))),
            0u);
}

TEST(RectangleBounds, ComplementOfIdentityIsExact) {
  // The 1-entries of J - I on 4x4 need 4 rectangles but admit only a
  // fooling set of size 3.
  Matrix m = Matrix::constant(4, 4, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) = 0;
  }
  const LabeledMatrix s(names("r", 4), names("c", 4), m);
  EXPECT_LE(fooling_set_bound(s), 4u);
  EXPECT_EQ(rectangle_cover_lower_bound(s), 4u);
}

TEST(RectangleBounds, BoundsNonnegativeRankOfSlack) {
  const auto s = slack_matrix(PolytopeFamily::spanning_tree, Graph::complete(4), true);
  const auto f = protocol_to_factorization(
      combine_row_partition(spanning_tree_protocol(4),
                            nonnegativity_rows_protocol(6, split_nonnegativity(s).second)));
  EXPECT_LE(rectangle_cover_lower_bound(support_matrix(s)), f.rank());
}
