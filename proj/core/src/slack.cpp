#include "slackcomm/slack.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace slackcomm {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument(std::string("duplicate ") + what + " label '" + l + "'");
    }
  }
}

std::size_t index_of(const std::vector<std::string>& labels, const std::string& label,
                     const char* what) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw std::out_of_range(std::string("unknown ") + what + " label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

LabeledMatrix::LabeledMatrix(std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels, Matrix entries)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(std::move(entries)) {
  if (entries_.rows() != row_labels_.size() || entries_.cols() != col_labels_.size()) {
    if (!entries_.data().empty() || !(row_labels_.empty() || col_labels_.empty())) {
      throw std::invalid_argument("labeled matrix: " + std::to_string(row_labels_.size()) + "x" +
                                  std::to_string(col_labels_.size()) + " labels for a " +
                                  std::to_string(entries_.rows()) + "x" +
                                  std::to_string(entries_.cols()) + " matrix");
    }
    entries_ = Matrix(row_labels_.size(), col_labels_.size());
  }
  require_unique(row_labels_, "row");
  require_unique(col_labels_, "column");
  if (!entries_.is_nonnegative()) {
    throw std::invalid_argument("labeled matrix has a negative entry");
  }
}

const Rational& LabeledMatrix::at(const std::string& row, const std::string& col) const {
  return entries_(row_index(row), col_index(col));
}

std::size_t LabeledMatrix::row_index(const std::string& label) const {
  return index_of(row_labels_, label, "row");
}

std::size_t LabeledMatrix::col_index(const std::string& label) const {
  return index_of(col_labels_, label, "column");
}

LabeledMatrix vstack(const LabeledMatrix& top, const LabeledMatrix& bottom) {
  if (top.rows() == 0) {
    return bottom;
  }
  if (bottom.rows() == 0) {
    return top;
  }
  if (top.col_labels() != bottom.col_labels()) {
    throw std::invalid_argument("vstack: column labels differ");
  }
  auto rows = top.row_labels();
  rows.insert(rows.end(), bottom.row_labels().begin(), bottom.row_labels().end());
  return LabeledMatrix(std::move(rows), top.col_labels(), vstack(top.entries(), bottom.entries()));
}

std::string tree_label(const EdgeSet& t) { return make_label("T", t); }
std::string matching_label(const EdgeSet& m) { return make_label("M", m); }
std::string stable_set_label(const VertexSet& s) { return make_label("S", s); }

namespace {

template <typename Column, typename Entry>
LabeledMatrix build(const std::vector<RowLabel>& rows, const std::vector<Column>& columns,
                    const std::vector<std::string>& col_labels, const Entry& entry) {
  Matrix m(rows.size(), columns.size());
  std::vector<std::string> row_labels;
  row_labels.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    row_labels.push_back(rows[i].to_string());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      m(i, j) = entry(rows[i], columns[j]);
    }
  }
  return LabeledMatrix(std::move(row_labels), col_labels, std::move(m));
}

Rational edge_coordinate(const RowLabel& row, const EdgeSet& object) {
  return object.contains(row.edge) ? 1 : 0;
}

LabeledMatrix spanning_tree_slack(const Graph& g, bool trivial) {
  const auto trees = enumerate_spanning_trees(g);
  std::vector<std::string> cols;
  for (const auto& t : trees) {
    cols.push_back(tree_label(t));
  }
  std::vector<RowLabel> rows;
  for (const auto& u : enumerate_proper_subsets(g.vertex_count())) {
    rows.push_back(subset_rank_row(u));
  }
  if (trivial) {
    for (const Edge& e : g.edges()) {
      rows.push_back(edge_nonnegativity_row(e));
    }
  }
  return build(rows, trees, cols, [](const RowLabel& row, const EdgeSet& t) -> Rational {
    if (row.kind == RowKind::nonnegativity) {
      return edge_coordinate(row, t);
    }
    return Rational(static_cast<long>(induced_component_count(t, row.vertices)) - 1);
  });
}

LabeledMatrix perfect_matching_slack(const Graph& g, bool trivial) {
  const int n = g.vertex_count();
  if (n % 2 != 0 || n < 4) {
    throw std::invalid_argument("perfect matching slack needs an even vertex count >= 4, got " +
                                std::to_string(n));
  }
  const auto matchings = enumerate_perfect_matchings(g);
  std::vector<std::string> cols;
  for (const auto& m : matchings) {
    cols.push_back(matching_label(m));
  }
  std::vector<RowLabel> rows;
  for (const auto& u : enumerate_odd_sets(n)) {
    rows.push_back(odd_cut_row(u));
  }
  if (trivial) {
    for (const Edge& e : g.edges()) {
      rows.push_back(edge_nonnegativity_row(e));
    }
  }
  return build(rows, matchings, cols, [](const RowLabel& row, const EdgeSet& m) -> Rational {
    if (row.kind == RowKind::nonnegativity) {
      return edge_coordinate(row, m);
    }
    return Rational(static_cast<long>(cut_edge_count(row.vertices, m)) - 1);
  });
}

LabeledMatrix stable_set_slack(const Graph& g, bool trivial) {
  const auto stables = enumerate_stable_sets(g);
  std::vector<std::string> cols;
  for (const auto& s : stables) {
    cols.push_back(stable_set_label(s));
  }
  std::vector<RowLabel> rows;
  for (const auto& k : enumerate_cliques(g)) {
    rows.push_back(clique_row(k));
  }
  if (trivial) {
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      rows.push_back(vertex_nonnegativity_row(v));
    }
  }
  return build(rows, stables, cols, [](const RowLabel& row, const VertexSet& s) -> Rational {
    if (row.kind == RowKind::nonnegativity) {
      return s.contains(row.vertices.members().front()) ? 1 : 0;
    }
    const auto common = static_cast<long>(intersection(row.vertices, s).size());
    if (common > 1) {
      throw std::logic_error("clique " + row.to_string() + " meets stable set " +
                             stable_set_label(s) + " in " + std::to_string(common) +
                             " vertices");
    }
    return Rational(1 - common);
  });
}

}  // namespace

LabeledMatrix slack_matrix(PolytopeFamily family, const Graph& g, bool include_trivial_rows) {
  switch (family) {
    case PolytopeFamily::spanning_tree:
      return spanning_tree_slack(g, include_trivial_rows);
    case PolytopeFamily::perfect_matching:
      return perfect_matching_slack(g, include_trivial_rows);
    case PolytopeFamily::stable_set:
      return stable_set_slack(g, include_trivial_rows);
  }
  throw std::invalid_argument("unknown polytope family");
}

LabeledMatrix support_matrix(const LabeledMatrix& s) {
  Matrix m(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      m(i, j) = s(i, j) > 0 ? 1 : 0;
    }
  }
  return LabeledMatrix(s.row_labels(), s.col_labels(), std::move(m));
}

std::pair<LabeledMatrix, LabeledMatrix> split_rows(
    const LabeledMatrix& s, const std::function<bool(const RowLabel&)>& keep_first) {
  std::vector<std::string> first_labels, second_labels;
  std::vector<Rational> first_data, second_data;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    const bool first = keep_first(parse_row_label(s.row_labels()[i]));
    auto& labels = first ? first_labels : second_labels;
    auto& data = first ? first_data : second_data;
    labels.push_back(s.row_labels()[i]);
    const auto row = s.entries().row(i);
    data.insert(data.end(), row.begin(), row.end());
  }
  const std::size_t first_rows = first_labels.size();
  const std::size_t second_rows = second_labels.size();
  return {LabeledMatrix(std::move(first_labels), s.col_labels(),
                        Matrix(first_rows, s.cols(), std::move(first_data))),
          LabeledMatrix(std::move(second_labels), s.col_labels(),
                        Matrix(second_rows, s.cols(), std::move(second_data)))};
}

std::pair<LabeledMatrix, LabeledMatrix> split_nonnegativity(const LabeledMatrix& s) {
  return split_rows(s, [](const RowLabel& r) { return r.kind != RowKind::nonnegativity; });
}

}  // namespace slackcomm
