#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "slackcomm/matrix.hpp"
#include "slackcomm/protocol.hpp"
#include "slackcomm/slack.hpp"

namespace slackcomm {

/// Nonnegative factorization M = left * right. `left` is m x r with M's row
/// labels, `right` is r x n with M's column labels; the inner labels are
/// "1".."r".
class Factorization {
 public:
  /// Throws std::invalid_argument when the inner dimensions disagree.
  Factorization(LabeledMatrix left, LabeledMatrix right);

  const LabeledMatrix& left() const { return left_; }
  const LabeledMatrix& right() const { return right_; }
  std::size_t rank() const { return left_.cols(); }

  Matrix product() const;

 private:
  LabeledMatrix left_;
  LabeledMatrix right_;
};

/// "factorization rank=<r>" followed by the left and right factors as CSV
/// blocks separated by a blank line.
void write_factorization(std::ostream& out, const Factorization& f);
std::string to_text(const Factorization& f);
/// Throws std::invalid_argument on a malformed header or mismatched blocks.
Factorization read_factorization(std::istream& in);

/// "1".."r".
std::vector<std::string> inner_labels(std::size_t r);

/// weight * p q^T: one leaf's contribution, with P_v = p q^T its traversal
/// probability matrix.
struct RankOneTerm {
  std::vector<Rational> row_vector;     // p over X
  std::vector<Rational> column_vector;  // q over Y
  Rational weight;                      // leaf value
};

/// One term per leaf, left to right. Throws std::invalid_argument for a tree
/// that fails validate(), std::length_error above 2^22 leaves.
std::vector<RankOneTerm> traversal_terms(const ProtocolTree& t);

/// Sum over leaves of value * P_v, with the value folded into the left
/// factor. The rank equals the leaf count.
Factorization protocol_to_factorization(const ProtocolTree& t);

/// Row-stochastic rescaling used to turn a factorization into a protocol.
struct StochasticForm {
  Rational max_row_sum;  // largest row sum of A
  Matrix a_hat;          // m x (r+1), rows sum to 1
  Matrix b_hat;          // (r+1) x n, last row zero
};

/// Throws std::invalid_argument when the left factor is all zero.
StochasticForm stochastic_form(const Factorization& f);

/// One-way protocol: Alice samples k from row i of A-hat over a balanced tree
/// of ceil(lg(r+1)) levels, then a single Bob node for that k emits
/// max_l B-hat(k,l) or 0. Height is ceil(lg(r+1)) + 1. An all-zero left
/// factor yields a single leaf of value 0.
ProtocolTree factorization_to_protocol(const Factorization& f);

/// Protocol for the stacked matrix [M1; M2] where t1 computes M1 over rows R1
/// and t2 computes M2 over rows R2. The root is an Alice node sending R1 rows
/// left; foreign rows get transition 1 inside each part. Throws
/// std::invalid_argument when R1 and R2 overlap or the column domains differ.
ProtocolTree combine_row_partition(const ProtocolTree& t1, const ProtocolTree& t2);

/// Alice names the row deterministically, then Bob emits the coordinate with
/// the same scaling trick as factorization_to_protocol. Rows of
/// `vertex_columns` are coordinates, columns are vertices. Height is
/// ceil(lg d) + 1. Throws for d == 0 or d != vertex_columns.rows().
ProtocolTree nonnegativity_rows_protocol(std::size_t d, const LabeledMatrix& vertex_columns);

/// Exact check A * B == m. False (not an exception) on a dimension mismatch.
bool verify_factorization(const LabeledMatrix& m, const Factorization& f);

/// Lower bound on the nonnegative rank from the 1-entries of a support
/// matrix: the exact minimum rectangle cover on small instances, otherwise a
/// fooling-set bound. Any positive entry counts as a 1.
std::size_t rectangle_cover_lower_bound(const LabeledMatrix& support);

/// Size of a fooling set found greedily; always a valid lower bound on the
/// rectangle cover number.
std::size_t fooling_set_bound(const LabeledMatrix& support);

}  // namespace slackcomm
