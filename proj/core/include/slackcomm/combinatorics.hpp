#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <variant>
#include <vector>

namespace slackcomm {

/// Vertices are labeled 1..n throughout.
using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Throws std::invalid_argument on a self-loop.
  Edge(Vertex a, Vertex b);

  bool contains(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Strictly ascending list of distinct vertices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  /// Sorts its input; throws std::invalid_argument on duplicates.
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(Vertex first, Vertex last);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  /// True when every member lies in [1, n].
  bool within(int n) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Graded ("shortlex") order: smaller sets first, ties broken lexicographically.
bool shortlex_less(const VertexSet& a, const VertexSet& b);

VertexSet complement(const VertexSet& s, int n);
VertexSet intersection(const VertexSet& a, const VertexSet& b);

/// Canonically sorted list of edges without repetition.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> members);
  explicit EdgeSet(std::vector<Edge> members);

  const std::vector<Edge>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Edge& e) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Edge> members_;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  /// Throws std::invalid_argument on out-of-range endpoints or duplicate edges.
  Graph(int n, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph path(int n);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(Vertex a, Vertex b) const;
  /// N(u), ascending.
  VertexSet neighbors(Vertex u) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
};

enum class ObjectFamily { spanning_tree, perfect_matching, stable_set, clique };

std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g);
/// Empty when the vertex count is odd.
std::vector<EdgeSet> enumerate_perfect_matchings(const Graph& g);
/// Includes the empty set.
std::vector<VertexSet> enumerate_stable_sets(const Graph& g);
/// Nonempty cliques only.
std::vector<VertexSet> enumerate_cliques(const Graph& g);

using ObjectList = std::variant<std::vector<EdgeSet>, std::vector<VertexSet>>;

/// Dispatches to the family enumerators. Edge families come out lexicographic,
/// vertex families in shortlex order.
ObjectList enumerate_objects(ObjectFamily family, const Graph& g);

/// Components of T[U]; isolated vertices count. The vertex count is taken as
/// |tree| + 1. Throws std::invalid_argument for empty U or U outside [n].
std::size_t induced_component_count(const EdgeSet& tree, const VertexSet& u);

/// |delta(U) ∩ m|.
std::size_t cut_edge_count(const VertexSet& u, const EdgeSet& m);

/// |E[U] ∩ m|: edges with both endpoints in U.
std::size_t induced_edge_count(const VertexSet& u, const EdgeSet& m);

/// All odd subsets of [n] in shortlex order, singletons included.
std::vector<VertexSet> enumerate_odd_sets(int n);

/// All nonempty subsets of [n] in shortlex order, [n] itself included.
std::vector<VertexSet> enumerate_proper_subsets(int n);

/// (n-1)!! for even n, 0 for odd n.
std::size_t perfect_matching_count(int n);

/// A vertex with three pairwise non-adjacent neighbors, as {center, a, b, c}.
std::optional<std::array<Vertex, 4>> find_claw(const Graph& g);

/// Parent of every vertex when `tree` is rooted at `root`; parent[root] = 0.
/// Index 0 is unused. Throws if `tree` does not span [n].
std::vector<Vertex> root_tree(const EdgeSet& tree, int n, Vertex root);

}  // namespace slackcomm
