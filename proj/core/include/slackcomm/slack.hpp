#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "slackcomm/combinatorics.hpp"
#include "slackcomm/labels.hpp"
#include "slackcomm/matrix.hpp"

namespace slackcomm {

/// Nonnegative exact matrix whose rows and columns carry unique text labels.
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  /// Throws std::invalid_argument on a dimension mismatch, a duplicate label or
  /// a negative entry.
  LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                Matrix entries);

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const Matrix& entries() const { return entries_; }

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  /// Entry by labels; throws std::out_of_range for an unknown label.
  const Rational& at(const std::string& row, const std::string& col) const;

  std::size_t row_index(const std::string& label) const;
  std::size_t col_index(const std::string& label) const;

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  Matrix entries_;
};

/// Vertical concatenation; column labels must agree exactly.
LabeledMatrix vstack(const LabeledMatrix& top, const LabeledMatrix& bottom);

enum class PolytopeFamily { spanning_tree, perfect_matching, stable_set };

/// Slack matrix of SPAN(g), PM(g) or STAB(g).
///
/// Rows are the subset-rank, odd-cut or clique inequalities in shortlex order
/// of their vertex sets; with `include_trivial_rows` the nonnegativity rows
/// follow, one per edge (or per vertex for STAB). Columns are the vertices of
/// the polytope in enumeration order. Equality constraints are never emitted.
///
/// Throws std::invalid_argument for perfect matchings on an odd or < 4 vertex
/// count, and std::logic_error if a clique row would come out negative.
LabeledMatrix slack_matrix(PolytopeFamily family, const Graph& g, bool include_trivial_rows);

/// 0/1 matrix marking the positive entries of `s`.
LabeledMatrix support_matrix(const LabeledMatrix& s);

/// Rows satisfying `keep_first` go to the first matrix, the rest to the second,
/// each in original order.
std::pair<LabeledMatrix, LabeledMatrix> split_rows(
    const LabeledMatrix& s, const std::function<bool(const RowLabel&)>& keep_first);

/// Keeps the rows whose label parses to a nonnegativity row out of the first
/// block: returns (S', nonnegativity block).
std::pair<LabeledMatrix, LabeledMatrix> split_nonnegativity(const LabeledMatrix& s);

/// Column labels for polytope vertices.
std::string tree_label(const EdgeSet& t);
std::string matching_label(const EdgeSet& m);
std::string stable_set_label(const VertexSet& s);

}  // namespace slackcomm
