#pragma once

#include <string>
#include <string_view>

#include "slackcomm/combinatorics.hpp"

namespace slackcomm {

// Text labels for matrix rows and columns. A label is "<prefix>:<payload>".
// Vertex sets render as "1-2-3"; an edge renders as its two endpoints run
// together ("12") when both are below 10 and as "3-11" otherwise; edge sets
// join edges with '.' ("12.34.56").

std::string edge_token(const Edge& e);
Edge parse_edge_token(std::string_view token);

std::string vertex_set_payload(const VertexSet& s);
std::string edge_set_payload(const EdgeSet& s);
VertexSet parse_vertex_set_payload(std::string_view payload);
EdgeSet parse_edge_set_payload(std::string_view payload);

/// "T:12.13" and friends.
std::string make_label(std::string_view prefix, const VertexSet& s);
std::string make_label(std::string_view prefix, const EdgeSet& s);

/// Splits "P:payload" into its prefix and payload. Throws std::invalid_argument
/// when there is no ':' separator.
std::pair<std::string_view, std::string_view> split_label(std::string_view label);

/// Kind of inequality a slack-matrix row belongs to.
enum class RowKind {
  subset_rank,      // "U:<set>"   x(E[U]) <= |U| - 1
  odd_cut,          // "O:<set>"   x(delta(U)) >= 1
  clique,           // "K:<set>"   x(K) <= 1
  nonnegativity,    // "x:<edge>" or "x:v<vertex>"   x >= 0
  degree_equality,  // "D:<vertex>" x(delta(v)) = 1
  edge_total,       // "E:all"     x(E) = |V| - 1
};

struct RowLabel {
  RowKind kind = RowKind::subset_rank;
  VertexSet vertices;  // U, K, or {v}
  Edge edge;           // nonnegativity rows over edges

  /// True for nonnegativity rows indexed by a vertex rather than an edge.
  bool on_vertex = false;

  std::string to_string() const;
};

RowLabel parse_row_label(std::string_view label);

RowLabel subset_rank_row(const VertexSet& u);
RowLabel odd_cut_row(const VertexSet& u);
RowLabel clique_row(const VertexSet& k);
RowLabel edge_nonnegativity_row(const Edge& e);
RowLabel vertex_nonnegativity_row(Vertex v);

}  // namespace slackcomm
