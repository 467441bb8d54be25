#include "slackcomm/convert.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "slackcomm/csv.hpp"

namespace slackcomm {

Factorization::Factorization(LabeledMatrix left, LabeledMatrix right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.cols() != right_.rows()) {
    throw std::invalid_argument("factorization inner dimensions disagree: " +
                                std::to_string(left_.cols()) + " vs " +
                                std::to_string(right_.rows()));
  }
}

Matrix Factorization::product() const { return multiply(left_.entries(), right_.entries()); }

void write_factorization(std::ostream& out, const Factorization& f) {
  out << "factorization rank=" << f.rank() << '\n';
  write_csv(out, f.left());
  out << '\n';
  write_csv(out, f.right());
}

std::string to_text(const Factorization& f) {
  std::ostringstream out;
  write_factorization(out, f);
  return out.str();
}

Factorization read_factorization(std::istream& in) {
  std::string header;
  const std::string prefix = "factorization rank=";
  if (!std::getline(in, header) || header.rfind(prefix, 0) != 0) {
    throw std::invalid_argument("expected a 'factorization rank=<r>' header");
  }
  const auto r = std::stoul(header.substr(prefix.size()));
  LabeledMatrix left = read_csv(in);
  LabeledMatrix right = read_csv(in);
  if (left.cols() != r) {
    throw std::invalid_argument("left factor has " + std::to_string(left.cols()) +
                                " columns, header says " + std::to_string(r));
  }
  return Factorization(std::move(left), std::move(right));
}

std::vector<std::string> inner_labels(std::size_t r) {
  std::vector<std::string> out;
  out.reserve(r);
  for (std::size_t k = 1; k <= r; ++k) {
    out.push_back(std::to_string(k));
  }
  return out;
}

namespace {

void require_valid(const ProtocolTree& t) {
  const auto violations = validate(t);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid protocol at " + violations.front().path + ": " +
                                violations.front().message);
  }
}

void collect_terms(const Node& node, const std::vector<Rational>& p, const std::vector<Rational>& q,
                   std::vector<RankOneTerm>& out) {
  if (node.is_leaf()) {
    out.push_back({p, q, node.value()});
    return;
  }
  const auto& table = node.left_probability();
  const bool alice = node.owner() == Player::alice;
  const auto& split = alice ? p : q;
  std::vector<Rational> left(split.size()), right(split.size());
  for (std::size_t i = 0; i < split.size(); ++i) {
    left[i] = split[i] * table[i];
    right[i] = split[i] * (1 - table[i]);
  }
  if (alice) {
    collect_terms(*node.left(), left, q, out);
    collect_terms(*node.right(), right, q, out);
  } else {
    collect_terms(*node.left(), p, left, out);
    collect_terms(*node.right(), p, right, out);
  }
}

// Bob node emitting values[j] in expectation: left leaf max(values), right
// leaf 0, q(j) = values[j] / max.
NodePtr emit_scaled(const std::vector<Rational>& values) {
  Rational top(0);
  for (const auto& v : values) {
    top = std::max(top, v);
  }
  std::vector<Rational> table(values.size(), Rational(1));
  if (top != 0) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      table[j] = values[j] / top;
    }
  }
  return Node::internal(Player::bob, std::move(table), Node::leaf(top), Node::leaf(Rational(0)));
}

// Copies `node`, rewriting every transition table of `who` through `remap`.
NodePtr redomain(const NodePtr& node, Player who,
                 const std::function<std::vector<Rational>(const std::vector<Rational>&)>& remap,
                 std::unordered_map<const Node*, NodePtr>& memo) {
  if (node->is_leaf()) {
    return node;
  }
  if (auto it = memo.find(node.get()); it != memo.end()) {
    return it->second;
  }
  auto table = node->owner() == who ? remap(node->left_probability()) : node->left_probability();
  NodePtr made = Node::internal(node->owner(), std::move(table), redomain(node->left(), who, remap, memo),
                                redomain(node->right(), who, remap, memo));
  memo.emplace(node.get(), made);
  return made;
}

}  // namespace

std::vector<RankOneTerm> traversal_terms(const ProtocolTree& t) {
  require_valid(t);
  if (t.root()->leaf_count() > (std::uint64_t{1} << 22)) {
    throw std::length_error("protocol has too many leaves to factor explicitly");
  }
  std::vector<RankOneTerm> out;
  out.reserve(static_cast<std::size_t>(t.root()->leaf_count()));
  collect_terms(*t.root(), std::vector<Rational>(t.x_domain().size(), Rational(1)),
                std::vector<Rational>(t.y_domain().size(), Rational(1)), out);
  return out;
}

Factorization protocol_to_factorization(const ProtocolTree& t) {
  const auto terms = traversal_terms(t);
  const std::size_t m = t.x_domain().size();
  const std::size_t n = t.y_domain().size();
  const std::size_t r = terms.size();
  Matrix a(m, r);
  Matrix b(r, n);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      a(i, k) = terms[k].weight * terms[k].row_vector[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
      b(k, j) = terms[k].column_vector[j];
    }
  }
  return Factorization(LabeledMatrix(t.x_domain(), inner_labels(r), std::move(a)),
                       LabeledMatrix(inner_labels(r), t.y_domain(), std::move(b)));
}

StochasticForm stochastic_form(const Factorization& f) {
  const Matrix& a = f.left().entries();
  const Matrix& b = f.right().entries();
  const std::size_t m = a.rows();
  const std::size_t r = a.cols();
  std::vector<Rational> row_sums(m);
  Rational delta(0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      row_sums[i] += a(i, k);
    }
    delta = std::max(delta, row_sums[i]);
  }
  if (delta == 0) {
    throw std::invalid_argument("left factor is identically zero");
  }
  StochasticForm out{delta, Matrix(m, r + 1), Matrix(r + 1, b.cols())};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      out.a_hat(i, k) = a(i, k) / delta;
    }
    out.a_hat(i, r) = 1 - row_sums[i] / delta;
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      out.b_hat(k, j) = b(k, j) * delta;
    }
  }
  return out;
}

ProtocolTree factorization_to_protocol(const Factorization& f) {
  const auto& rows = f.left().row_labels();
  const auto& cols = f.right().col_labels();
  if (f.left().entries().is_zero()) {
    return ProtocolTree(Node::leaf(Rational(0)), rows, cols);
  }
  const StochasticForm form = stochastic_form(f);
  NodePtr root = announce(
      Player::alice, rows.size(), f.rank() + 1,
      [&form](std::size_t i, std::size_t k) { return form.a_hat(i, k); },
      [&form](std::size_t k) { return emit_scaled(form.b_hat.row(k)); });
  return ProtocolTree(std::move(root), rows, cols);
}

ProtocolTree combine_row_partition(const ProtocolTree& t1, const ProtocolTree& t2) {
  const auto& r1 = t1.x_domain();
  const auto& r2 = t2.x_domain();
  std::unordered_set<std::string> first(r1.begin(), r1.end());
  for (const auto& label : r2) {
    if (first.count(label)) {
      throw std::invalid_argument("row '" + label + "' appears in both parts");
    }
  }
  const auto& cols = t1.y_domain();
  if (t2.y_domain().size() != cols.size()) {
    throw std::invalid_argument("column domains differ in size");
  }
  // permutation[j] = index in t2's column domain of t1's column j.
  std::vector<std::size_t> permutation(cols.size());
  try {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      permutation[j] = t2.y_index(cols[j]);
    }
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("column domains differ: ") + e.what());
  }

  const std::size_t n1 = r1.size();
  const std::size_t n2 = r2.size();
  std::unordered_map<const Node*, NodePtr> memo1, memo2a, memo2b;
  NodePtr left = redomain(
      t1.root(), Player::alice,
      [n2](const std::vector<Rational>& table) {
        auto out = table;
        out.resize(table.size() + n2, Rational(1));
        return out;
      },
      memo1);
  NodePtr right = redomain(
      t2.root(), Player::alice,
      [n1](const std::vector<Rational>& table) {
        std::vector<Rational> out(n1, Rational(1));
        out.insert(out.end(), table.begin(), table.end());
        return out;
      },
      memo2a);
  if (!std::is_sorted(permutation.begin(), permutation.end())) {
    right = redomain(
        right, Player::bob,
        [&permutation](const std::vector<Rational>& table) {
          std::vector<Rational> out(permutation.size());
          for (std::size_t j = 0; j < permutation.size(); ++j) {
            out[j] = table.at(permutation[j]);
          }
          return out;
        },
        memo2b);
  }
  std::vector<Rational> split(n1, Rational(1));
  split.resize(n1 + n2, Rational(0));
  std::vector<std::string> rows = r1;
  rows.insert(rows.end(), r2.begin(), r2.end());
  return ProtocolTree(Node::internal(Player::alice, std::move(split), std::move(left), std::move(right)),
                      std::move(rows), cols);
}

ProtocolTree nonnegativity_rows_protocol(std::size_t d, const LabeledMatrix& vertex_columns) {
  if (d == 0) {
    throw std::invalid_argument("nonnegativity protocol needs d >= 1");
  }
  if (vertex_columns.rows() != d) {
    throw std::invalid_argument("expected " + std::to_string(d) + " coordinate rows, got " +
                                std::to_string(vertex_columns.rows()));
  }
  NodePtr root = announce_deterministic(
      Player::alice, d, d, [](std::size_t i) { return i; },
      [&vertex_columns](std::size_t i) { return emit_scaled(vertex_columns.entries().row(i)); });
  return ProtocolTree(std::move(root), vertex_columns.row_labels(), vertex_columns.col_labels());
}

bool verify_factorization(const LabeledMatrix& m, const Factorization& f) {
  if (f.left().rows() != m.rows() || f.right().cols() != m.cols()) {
    return false;
  }
  return f.product() == m.entries();
}

namespace {

using Cells = std::vector<std::pair<std::size_t, std::size_t>>;

Cells one_cells(const LabeledMatrix& s) {
  Cells cells;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (s(i, j) > 0) {
        cells.emplace_back(i, j);
      }
    }
  }
  return cells;
}

std::size_t greedy_fooling(const LabeledMatrix& s, const Cells& order) {
  Cells chosen;
  for (const auto& [i, j] : order) {
    const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](const auto& c) {
      return !(s(i, c.second) > 0 && s(c.first, j) > 0);
    });
    if (ok) {
      chosen.emplace_back(i, j);
    }
  }
  return chosen.size();
}

// Minimum cover of the 1-cells by all-ones rectangles, for at most 64 cells
// and at most 16 columns (or rows, after transposing the roles).
class ExactCover {
 public:
  ExactCover(const LabeledMatrix& s, const Cells& cells) : cells_(cells) {
    const bool by_cols = s.cols() <= s.rows();
    const std::size_t small = by_cols ? s.cols() : s.rows();
    const std::size_t large = by_cols ? s.rows() : s.cols();
    auto one = [&](std::size_t a, std::size_t b) { return by_cols ? s(b, a) > 0 : s(a, b) > 0; };
    std::unordered_set<std::uint64_t> seen;
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << small); ++subset) {
      std::vector<std::size_t> partners;
      for (std::size_t b = 0; b < large; ++b) {
        bool all = true;
        for (std::size_t a = 0; a < small && all; ++a) {
          if ((subset >> a) & 1U) {
            all = one(a, b);
          }
        }
        if (all) {
          partners.push_back(b);
        }
      }
      if (partners.empty()) {
        continue;
      }
      std::uint32_t closure = 0;
      for (std::size_t a = 0; a < small; ++a) {
        if (std::all_of(partners.begin(), partners.end(), [&](std::size_t b) { return one(a, b); })) {
          closure |= std::uint32_t{1} << a;
        }
      }
      if (closure != subset) {
        continue;
      }
      std::uint64_t mask = 0;
      for (std::size_t c = 0; c < cells_.size(); ++c) {
        const auto [i, j] = cells_[c];
        const std::size_t a = by_cols ? j : i;
        const std::size_t b = by_cols ? i : j;
        if (((subset >> a) & 1U) && std::binary_search(partners.begin(), partners.end(), b)) {
          mask |= std::uint64_t{1} << c;
        }
      }
      if (seen.insert(mask).second) {
        rectangles_.push_back(mask);
      }
    }
    for (const auto r : rectangles_) {
      widest_ = std::max(widest_, static_cast<std::size_t>(std::popcount(r)));
    }
  }

  std::size_t solve(std::size_t lower, std::size_t upper) const {
    const std::uint64_t all = cells_.size() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << cells_.size()) - 1;
    for (std::size_t depth = std::max<std::size_t>(lower, 1); depth < upper; ++depth) {
      if (search(0, all, depth)) {
        return depth;
      }
    }
    return upper;
  }

 private:
  bool search(std::uint64_t covered, std::uint64_t all, std::size_t budget) const {
    if (covered == all) {
      return true;
    }
    if (budget == 0) {
      return false;
    }
    const auto missing = static_cast<std::size_t>(std::popcount(all & ~covered));
    if ((missing + widest_ - 1) / widest_ > budget) {
      return false;
    }
    const int cell = std::countr_zero(all & ~covered);
    for (const auto r : rectangles_) {
      if ((r >> cell) & 1U) {
        if (search(covered | r, all, budget - 1)) {
          return true;
        }
      }
    }
    return false;
  }

  const Cells& cells_;
  std::vector<std::uint64_t> rectangles_;
  std::size_t widest_ = 1;
};

}  // namespace

std::size_t fooling_set_bound(const LabeledMatrix& support) {
  Cells cells = one_cells(support);
  std::size_t best = greedy_fooling(support, cells);
  std::vector<std::size_t> row_degree(support.rows()), col_degree(support.cols());
  for (const auto& [i, j] : cells) {
    ++row_degree[i];
    ++col_degree[j];
  }
  std::stable_sort(cells.begin(), cells.end(), [&](const auto& a, const auto& b) {
    return row_degree[a.first] + col_degree[a.second] < row_degree[b.first] + col_degree[b.second];
  });
  best = std::max(best, greedy_fooling(support, cells));
  std::reverse(cells.begin(), cells.end());
  return std::max(best, greedy_fooling(support, cells));
}

std::size_t rectangle_cover_lower_bound(const LabeledMatrix& support) {
  const Cells cells = one_cells(support);
  if (cells.empty()) {
    return 0;
  }
  const std::size_t fooling = fooling_set_bound(support);
  // Covering by whole rows (or columns) always works.
  std::size_t nonzero_rows = 0, nonzero_cols = 0;
  {
    std::vector<bool> rows(support.rows()), cols(support.cols());
    for (const auto& [i, j] : cells) {
      rows[i] = true;
      cols[j] = true;
    }
    nonzero_rows = static_cast<std::size_t>(std::count(rows.begin(), rows.end(), true));
    nonzero_cols = static_cast<std::size_t>(std::count(cols.begin(), cols.end(), true));
  }
  const std::size_t trivial_upper = std::min(nonzero_rows, nonzero_cols);
  if (fooling >= trivial_upper) {
    return trivial_upper;
  }
  if (cells.size() <= 64 && std::min(support.rows(), support.cols()) <= 16) {
    const ExactCover exact(support, cells);
    return exact.solve(fooling, trivial_upper);
  }
  return fooling;
}

}  // namespace slackcomm
