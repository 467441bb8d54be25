#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slackcomm/combinatorics.hpp"
#include "slackcomm/convert.hpp"
#include "slackcomm/matrix.hpp"
#include "slackcomm/slack.hpp"

namespace slackcomm {

/// P = {x : Ex <= g, E_eq x = g_eq} together with its vertex list. The
/// inequality rows carry the same labels, in the same order, as the rows of
/// slack_matrix(family, graph, true).
struct PolytopeDescription {
  std::vector<std::string> coordinates;  // "x:12" per edge or "x:v3" per vertex
  std::vector<std::string> row_labels;
  Matrix e;                              // rows x d
  std::vector<Rational> g;
  std::vector<std::string> equality_labels;
  Matrix e_eq;
  std::vector<Rational> g_eq;
  std::vector<std::string> vertex_labels;
  Matrix vertices;                       // d x N, one column per vertex

  std::size_t dimension() const { return coordinates.size(); }

  /// g - E v_j for every row and vertex; throws std::logic_error if a vertex
  /// violates an inequality or an equality.
  LabeledMatrix slack() const;
};

/// Rank inequalities, nonnegativity, and x(E) = n - 1.
PolytopeDescription spanning_tree_polytope(const Graph& g);
/// Odd-cut inequalities written as -x(delta(U)) <= -1, nonnegativity, and
/// x(delta(v)) = 1 per vertex.
PolytopeDescription perfect_matching_polytope(const Graph& g);
/// Clique inequalities and nonnegativity; exact when g is perfect.
PolytopeDescription stable_set_polytope(const Graph& g);
PolytopeDescription polytope_description(PolytopeFamily family, const Graph& g);

/// Q = {(x, y) : Ex + Fy = g, y >= 0}. Equality rows of P appear after the
/// inequality rows with zero F rows.
struct ExtensionSystem {
  std::vector<std::string> constraint_labels;
  std::vector<std::string> coordinates;
  std::vector<std::string> extra_variables;
  Matrix e;
  std::vector<Rational> g;
  Matrix f;

  std::size_t size() const { return extra_variables.size(); }
};

/// True iff no column of the left factor is identically zero.
bool check_bounded(const Factorization& f);

/// Drops every zero column of the left factor together with the matching row
/// of the right factor and renumbers the inner labels. The product is
/// unchanged.
Factorization strip_zero_columns(const Factorization& f);

/// Builds Q from a factorization of S(P) after stripping zero columns. Throws
/// std::invalid_argument when the factorization's labels differ from the
/// slack matrix of `p` or its product is not that matrix.
ExtensionSystem build_extension(const PolytopeDescription& p, const Factorization& f);

struct ProjectionFailure {
  std::string stage;   // "LIFT" or "CONTAIN"
  std::string row;     // constraint label
  std::string point;   // vertex label or sampled point name
  std::string message;
};

struct ProjectionReport {
  bool ok = true;
  std::size_t vertices_lifted = 0;
  std::size_t points_sampled = 0;
  bool structural_containment = false;
  std::optional<ProjectionFailure> failure;
};

/// LIFT: every vertex v_j lifts to (v_j, V e_j) in Q exactly. CONTAIN: F >= 0
/// and the equality rows of F vanish, so Ex <= g on all of Q; in addition the
/// midpoints of consecutive lifted vertices and their centroid are checked
/// against Q and P. Stops at the first failure. Throws std::invalid_argument
/// on a dimension mismatch.
ProjectionReport verify_projection(const ExtensionSystem& q, const PolytopeDescription& p,
                                   const Factorization& f);

/// Manifest line "extension constraints=<m> d=<d> r=<r>" followed by the E,
/// g and F blocks in CSV layout, separated by blank lines.
void write_extension(std::ostream& out, const ExtensionSystem& q);
std::string to_text(const ExtensionSystem& q);
/// Throws std::invalid_argument on a malformed manifest or blocks whose
/// dimensions disagree with it.
ExtensionSystem read_extension(std::istream& in);

}  // namespace slackcomm
