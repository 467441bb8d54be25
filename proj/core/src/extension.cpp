#include "slackcomm/extension.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "slackcomm/csv.hpp"
#include "slackcomm/labels.hpp"

namespace slackcomm {

namespace {

class Builder {
 public:
  explicit Builder(std::vector<std::string> coordinates) {
    p_.coordinates = std::move(coordinates);
  }

  void inequality(std::string label, std::vector<Rational> row, Rational rhs) {
    p_.row_labels.push_back(std::move(label));
    ineq_.insert(ineq_.end(), row.begin(), row.end());
    p_.g.push_back(std::move(rhs));
  }

  void equality(std::string label, std::vector<Rational> row, Rational rhs) {
    p_.equality_labels.push_back(std::move(label));
    eq_.insert(eq_.end(), row.begin(), row.end());
    p_.g_eq.push_back(std::move(rhs));
  }

  void vertex(std::string label, std::vector<Rational> point) {
    p_.vertex_labels.push_back(std::move(label));
    points_.push_back(std::move(point));
  }

  PolytopeDescription finish() {
    const std::size_t d = p_.coordinates.size();
    p_.e = Matrix(p_.row_labels.size(), d, std::move(ineq_));
    p_.e_eq = Matrix(p_.equality_labels.size(), d, std::move(eq_));
    p_.vertices = Matrix(d, points_.size());
    for (std::size_t j = 0; j < points_.size(); ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        p_.vertices(k, j) = points_[j][k];
      }
    }
    return std::move(p_);
  }

 private:
  PolytopeDescription p_;
  std::vector<Rational> ineq_;
  std::vector<Rational> eq_;
  std::vector<std::vector<Rational>> points_;
};

std::vector<std::string> edge_coordinates(const Graph& g) {
  std::vector<std::string> out;
  for (const Edge& e : g.edges()) {
    out.push_back(edge_nonnegativity_row(e).to_string());
  }
  return out;
}

std::vector<Rational> indicator(const Graph& g, const EdgeSet& s) {
  std::vector<Rational> x;
  for (const Edge& e : g.edges()) {
    x.emplace_back(s.contains(e) ? 1 : 0);
  }
  return x;
}

void edge_nonnegativity(Builder& b, const Graph& g) {
  const std::size_t d = g.edges().size();
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> row(d);
    row[k] = -1;
    b.inequality(edge_nonnegativity_row(g.edges()[k]).to_string(), std::move(row), 0);
  }
}

Rational dot(const Matrix& m, std::size_t row, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    if (m(row, k) != 0) {
      s += m(row, k) * x[k];
    }
  }
  return s;
}

LabeledMatrix labeled(std::vector<std::string> rows, std::vector<std::string> cols, Matrix m) {
  return LabeledMatrix(std::move(rows), std::move(cols), std::move(m));
}

}  // namespace

LabeledMatrix PolytopeDescription::slack() const {
  Matrix s(row_labels.size(), vertex_labels.size());
  for (std::size_t j = 0; j < vertex_labels.size(); ++j) {
    const auto v = vertices.column(j);
    for (std::size_t i = 0; i < row_labels.size(); ++i) {
      s(i, j) = g[i] - dot(e, i, v);
      if (s(i, j) < 0) {
        throw std::logic_error("vertex " + vertex_labels[j] + " violates " + row_labels[i]);
      }
    }
    for (std::size_t i = 0; i < equality_labels.size(); ++i) {
      if (dot(e_eq, i, v) != g_eq[i]) {
        throw std::logic_error("vertex " + vertex_labels[j] + " violates " + equality_labels[i]);
      }
    }
  }
  return labeled(row_labels, vertex_labels, std::move(s));
}

PolytopeDescription spanning_tree_polytope(const Graph& g) {
  const int n = g.vertex_count();
  Builder b(edge_coordinates(g));
  for (const auto& u : enumerate_proper_subsets(n)) {
    std::vector<Rational> row;
    for (const Edge& e : g.edges()) {
      row.emplace_back(u.contains(e.u) && u.contains(e.v) ? 1 : 0);
    }
    b.inequality(subset_rank_row(u).to_string(), std::move(row),
                 static_cast<long>(u.size()) - 1);
  }
  edge_nonnegativity(b, g);
  RowLabel total;
  total.kind = RowKind::edge_total;
  b.equality(total.to_string(), std::vector<Rational>(g.edges().size(), Rational(1)), n - 1);
  for (const auto& t : enumerate_spanning_trees(g)) {
    b.vertex(tree_label(t), indicator(g, t));
  }
  return b.finish();
}

PolytopeDescription perfect_matching_polytope(const Graph& g) {
  const int n = g.vertex_count();
  if (n % 2 != 0 || n < 4) {
    throw std::invalid_argument("perfect matching polytope needs an even vertex count >= 4");
  }
  Builder b(edge_coordinates(g));
  for (const auto& u : enumerate_odd_sets(n)) {
    std::vector<Rational> row;
    for (const Edge& e : g.edges()) {
      row.emplace_back(u.contains(e.u) != u.contains(e.v) ? -1 : 0);
    }
    b.inequality(odd_cut_row(u).to_string(), std::move(row), -1);
  }
  edge_nonnegativity(b, g);
  for (Vertex v = 1; v <= n; ++v) {
    RowLabel degree;
    degree.kind = RowKind::degree_equality;
    degree.vertices = VertexSet{v};
    std::vector<Rational> row;
    for (const Edge& e : g.edges()) {
      row.emplace_back(e.contains(v) ? 1 : 0);
    }
    b.equality(degree.to_string(), std::move(row), 1);
  }
  for (const auto& m : enumerate_perfect_matchings(g)) {
    b.vertex(matching_label(m), indicator(g, m));
  }
  return b.finish();
}

PolytopeDescription stable_set_polytope(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::string> coordinates;
  for (Vertex v = 1; v <= n; ++v) {
    coordinates.push_back(vertex_nonnegativity_row(v).to_string());
  }
  Builder b(std::move(coordinates));
  const auto d = static_cast<std::size_t>(n);
  for (const auto& k : enumerate_cliques(g)) {
    std::vector<Rational> row(d);
    for (Vertex v : k) {
      row[static_cast<std::size_t>(v - 1)] = 1;
    }
    b.inequality(clique_row(k).to_string(), std::move(row), 1);
  }
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> row(d);
    row[k] = -1;
    b.inequality(vertex_nonnegativity_row(static_cast<Vertex>(k + 1)).to_string(), std::move(row),
                 0);
  }
  for (const auto& s : enumerate_stable_sets(g)) {
    std::vector<Rational> x(d);
    for (Vertex v : s) {
      x[static_cast<std::size_t>(v - 1)] = 1;
    }
    b.vertex(stable_set_label(s), std::move(x));
  }
  return b.finish();
}

PolytopeDescription polytope_description(PolytopeFamily family, const Graph& g) {
  switch (family) {
    case PolytopeFamily::spanning_tree:
      return spanning_tree_polytope(g);
    case PolytopeFamily::perfect_matching:
      return perfect_matching_polytope(g);
    case PolytopeFamily::stable_set:
      return stable_set_polytope(g);
  }
  throw std::invalid_argument("unknown polytope family");
}

bool check_bounded(const Factorization& f) {
  const Matrix& a = f.left().entries();
  for (std::size_t k = 0; k < a.cols(); ++k) {
    bool zero = true;
    for (std::size_t i = 0; i < a.rows() && zero; ++i) {
      zero = a(i, k) == 0;
    }
    if (zero) {
      return false;
    }
  }
  return true;
}

Factorization strip_zero_columns(const Factorization& f) {
  const Matrix& a = f.left().entries();
  const Matrix& b = f.right().entries();
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, k) != 0) {
        keep.push_back(k);
        break;
      }
    }
  }
  Matrix left(a.rows(), keep.size());
  Matrix right(keep.size(), b.cols());
  for (std::size_t c = 0; c < keep.size(); ++c) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      left(i, c) = a(i, keep[c]);
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      right(c, j) = b(keep[c], j);
    }
  }
  const auto inner = inner_labels(keep.size());
  return Factorization(labeled(f.left().row_labels(), inner, std::move(left)),
                       labeled(inner, f.right().col_labels(), std::move(right)));
}

ExtensionSystem build_extension(const PolytopeDescription& p, const Factorization& f) {
  const LabeledMatrix s = p.slack();
  if (f.left().row_labels() != s.row_labels() || f.right().col_labels() != s.col_labels()) {
    throw std::invalid_argument("factorization labels do not match the slack matrix");
  }
  if (!verify_factorization(s, f)) {
    throw std::invalid_argument("factorization does not reproduce the slack matrix");
  }
  const Factorization stripped = strip_zero_columns(f);
  const std::size_t r = stripped.rank();
  const std::size_t eqs = p.equality_labels.size();

  ExtensionSystem q;
  q.constraint_labels = p.row_labels;
  q.constraint_labels.insert(q.constraint_labels.end(), p.equality_labels.begin(),
                             p.equality_labels.end());
  q.coordinates = p.coordinates;
  q.extra_variables = stripped.left().col_labels();
  q.e = vstack(p.e, p.e_eq);
  q.g = p.g;
  q.g.insert(q.g.end(), p.g_eq.begin(), p.g_eq.end());
  q.f = vstack(stripped.left().entries(), Matrix(eqs, r));
  return q;
}

ProjectionReport verify_projection(const ExtensionSystem& q, const PolytopeDescription& p,
                                   const Factorization& f) {
  const Factorization stripped = strip_zero_columns(f);
  const Matrix& v = stripped.right().entries();
  const std::size_t m = q.constraint_labels.size();
  const std::size_t d = q.coordinates.size();
  const std::size_t r = q.extra_variables.size();
  if (q.e.rows() != m || q.e.cols() != d || q.f.rows() != m || q.f.cols() != r ||
      q.g.size() != m || d != p.dimension() || v.rows() != r ||
      v.cols() != p.vertex_labels.size() ||
      m != p.row_labels.size() + p.equality_labels.size()) {
    throw std::invalid_argument("extension, polytope and factorization dimensions disagree");
  }

  ProjectionReport report;
  auto fail = [&report](std::string stage, std::string row, std::string point, std::string msg) {
    report.ok = false;
    report.failure = ProjectionFailure{std::move(stage), std::move(row), std::move(point),
                                       std::move(msg)};
    return report;
  };

  // Checks (x, y) against Q; returns the first violated constraint.
  auto in_q = [&](const std::vector<Rational>& x,
                  const std::vector<Rational>& y) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(q.e, i, x) + dot(q.f, i, y) != q.g[i]) {
        return i;
      }
    }
    return std::nullopt;
  };

  std::vector<std::vector<Rational>> xs, ys;
  for (std::size_t j = 0; j < p.vertex_labels.size(); ++j) {
    auto x = p.vertices.column(j);
    auto y = v.column(j);
    for (std::size_t k = 0; k < r; ++k) {
      if (y[k] < 0) {
        return fail("LIFT", q.extra_variables[k], p.vertex_labels[j], "negative extra variable");
      }
    }
    if (const auto bad = in_q(x, y)) {
      const auto lhs = dot(q.e, *bad, x) + dot(q.f, *bad, y);
      return fail("LIFT", q.constraint_labels[*bad], p.vertex_labels[j],
                  "Ex + Fy = " + to_string(lhs) + " but g = " + to_string(q.g[*bad]));
    }
    ++report.vertices_lifted;
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }

  // On Q, Ex = g - Fy <= g as soon as F >= 0; equality rows must carry no y.
  for (std::size_t i = 0; i < m; ++i) {
    const bool equality_row = i >= p.row_labels.size();
    for (std::size_t k = 0; k < r; ++k) {
      if (q.f(i, k) < 0 || (equality_row && q.f(i, k) != 0)) {
        return fail("CONTAIN", q.constraint_labels[i], q.extra_variables[k],
                    equality_row ? "equality row has a nonzero F entry" : "negative F entry");
      }
    }
  }
  report.structural_containment = true;

  auto contained = [&](const std::vector<Rational>& x, const std::vector<Rational>& y,
                       const std::string& name) -> std::optional<ProjectionFailure> {
    if (const auto bad = in_q(x, y)) {
      return ProjectionFailure{"CONTAIN", q.constraint_labels[*bad], name, "sample leaves Q"};
    }
    for (std::size_t i = 0; i < p.row_labels.size(); ++i) {
      if (dot(p.e, i, x) > p.g[i]) {
        return ProjectionFailure{"CONTAIN", p.row_labels[i], name, "projection leaves P"};
      }
    }
    for (std::size_t i = 0; i < p.equality_labels.size(); ++i) {
      if (dot(p.e_eq, i, x) != p.g_eq[i]) {
        return ProjectionFailure{"CONTAIN", p.equality_labels[i], name, "projection leaves P"};
      }
    }
    return std::nullopt;
  };

  const std::size_t count = xs.size();
  if (count == 0) {
    return report;
  }
  std::vector<Rational> cx(d), cy(r);
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t next = (j + 1) % count;
    std::vector<Rational> mx(d), my(r);
    for (std::size_t k = 0; k < d; ++k) {
      mx[k] = (xs[j][k] + xs[next][k]) / 2;
      cx[k] += xs[j][k];
    }
    for (std::size_t k = 0; k < r; ++k) {
      my[k] = (ys[j][k] + ys[next][k]) / 2;
      cy[k] += ys[j][k];
    }
    if (auto bad = contained(mx, my, "mid(" + p.vertex_labels[j] + "," + p.vertex_labels[next] + ")")) {
      report.ok = false;
      report.failure = std::move(bad);
      return report;
    }
    ++report.points_sampled;
  }
  for (auto& c : cx) {
    c /= static_cast<long>(count);
  }
  for (auto& c : cy) {
    c /= static_cast<long>(count);
  }
  if (auto bad = contained(cx, cy, "centroid")) {
    report.ok = false;
    report.failure = std::move(bad);
    return report;
  }
  ++report.points_sampled;
  return report;
}

void write_extension(std::ostream& out, const ExtensionSystem& q) {
  out << "extension constraints=" << q.constraint_labels.size() << " d=" << q.coordinates.size()
      << " r=" << q.extra_variables.size() << "\n";
  write_table(out, {q.constraint_labels, q.coordinates, q.e});
  out << '\n';
  write_table(out, {q.constraint_labels, {"g"}, Matrix(q.g.size(), 1, q.g)});
  out << '\n';
  write_table(out, {q.constraint_labels, q.extra_variables, q.f});
}

std::string to_text(const ExtensionSystem& q) {
  std::ostringstream out;
  write_extension(out, q);
  return out.str();
}

ExtensionSystem read_extension(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("missing extension manifest");
  }
  std::istringstream manifest(line);
  std::string word, constraints, d, r;
  manifest >> word >> constraints >> d >> r;
  auto field = [](const std::string& token, const std::string& key) -> std::size_t {
    if (token.rfind(key + "=", 0) != 0) {
      throw std::invalid_argument("manifest field '" + key + "' missing");
    }
    return std::stoul(token.substr(key.size() + 1));
  };
  if (word != "extension") {
    throw std::invalid_argument("manifest must start with 'extension'");
  }
  const std::size_t m = field(constraints, "constraints");
  const std::size_t dim = field(d, "d");
  const std::size_t rank = field(r, "r");

  Table e = read_table(in);
  Table g = read_table(in);
  Table f = read_table(in);
  if (e.row_labels.size() != m || e.col_labels.size() != dim || g.row_labels != e.row_labels ||
      g.col_labels.size() != 1 || f.row_labels != e.row_labels || f.col_labels.size() != rank) {
    throw std::invalid_argument("extension blocks disagree with the manifest");
  }
  ExtensionSystem q;
  q.constraint_labels = std::move(e.row_labels);
  q.coordinates = std::move(e.col_labels);
  q.extra_variables = std::move(f.col_labels);
  q.e = std::move(e.entries);
  q.g = g.entries.column(0);
  q.f = std::move(f.entries);
  if (!q.f.is_nonnegative()) {
    throw std::invalid_argument("F block has a negative entry");
  }
  return q;
}

}  // namespace slackcomm
