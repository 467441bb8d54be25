#include "slackcomm/combinatorics.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace slackcomm {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_vertex_count(int n) {
  if (n < 0) {
    throw std::invalid_argument("negative vertex count");
  }
}

}  // namespace

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  }
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("vertex set has duplicate members");
  }
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  std::vector<Vertex> m;
  for (Vertex v = first; v <= last; ++v) {
    m.push_back(v);
  }
  return VertexSet(std::move(m));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::within(int n) const {
  return members_.empty() || (members_.front() >= 1 && members_.back() <= n);
}

bool shortlex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a.members() < b.members();
}

VertexSet complement(const VertexSet& s, int n) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v) {
    if (!s.contains(v)) {
      out.push_back(v);
    }
  }
  return VertexSet(std::move(out));
}

VertexSet intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

EdgeSet::EdgeSet(std::initializer_list<Edge> members) : EdgeSet(std::vector<Edge>(members)) {}

EdgeSet::EdgeSet(std::vector<Edge> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("edge set has duplicate members");
  }
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), adjacency_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), false) {
  check_vertex_count(n);
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n) {
      throw std::invalid_argument("edge endpoint outside [1," + std::to_string(n) + "]");
    }
    if (adjacent(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    }
    adjacency_[static_cast<std::size_t>(e.u * (n + 1) + e.v)] = true;
    adjacency_[static_cast<std::size_t>(e.v * (n + 1) + e.u)] = true;
  }
  edges_ = std::move(edges);
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      edges.emplace_back(a, b);
    }
  }
  return Graph(n, std::move(edges));
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a < n; ++a) {
    edges.emplace_back(a, a + 1);
  }
  return Graph(n, std::move(edges));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) {
    return false;
  }
  return adjacency_[static_cast<std::size_t>(a * (n_ + 1) + b)];
}

VertexSet Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  for (Vertex w = 1; w <= n_; ++w) {
    if (adjacent(u, w)) {
      out.push_back(w);
    }
  }
  return VertexSet(std::move(out));
}

namespace {

void spanning_trees_rec(const std::vector<Edge>& edges, std::size_t next, std::size_t needed,
                        const UnionFind& components, std::vector<Edge>& chosen,
                        std::vector<EdgeSet>& out) {
  if (chosen.size() == needed) {
    out.emplace_back(chosen);
    return;
  }
  if (edges.size() - next < needed - chosen.size()) {
    return;
  }
  const Edge& e = edges[next];
  UnionFind with = components;
  if (with.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
    chosen.push_back(e);
    spanning_trees_rec(edges, next + 1, needed, with, chosen, out);
    chosen.pop_back();
  }
  spanning_trees_rec(edges, next + 1, needed, components, chosen, out);
}

void matchings_rec(const Graph& g, std::vector<bool>& matched, std::vector<Edge>& chosen,
                   std::vector<EdgeSet>& out) {
  const int n = g.vertex_count();
  Vertex first = 1;
  while (first <= n && matched[static_cast<std::size_t>(first)]) {
    ++first;
  }
  if (first > n) {
    out.emplace_back(chosen);
    return;
  }
  matched[static_cast<std::size_t>(first)] = true;
  for (Vertex mate = first + 1; mate <= n; ++mate) {
    if (matched[static_cast<std::size_t>(mate)] || !g.adjacent(first, mate)) {
      continue;
    }
    matched[static_cast<std::size_t>(mate)] = true;
    chosen.emplace_back(first, mate);
    matchings_rec(g, matched, chosen, out);
    chosen.pop_back();
    matched[static_cast<std::size_t>(mate)] = false;
  }
  matched[static_cast<std::size_t>(first)] = false;
}

// Grows vertex sets in ascending order; `compatible(chosen, v)` decides
// whether v may join the current set.
template <typename Compatible>
void vertex_sets_rec(int n, Vertex next, std::vector<Vertex>& chosen, const Compatible& compatible,
                     std::vector<VertexSet>& out) {
  out.emplace_back(chosen);
  for (Vertex v = next; v <= n; ++v) {
    if (compatible(chosen, v)) {
      chosen.push_back(v);
      vertex_sets_rec(n, v + 1, chosen, compatible, out);
      chosen.pop_back();
    }
  }
}

void sort_shortlex(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), shortlex_less);
}

}  // namespace

std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g) {
  std::vector<EdgeSet> out;
  const int n = g.vertex_count();
  if (n == 0) {
    return out;
  }
  std::vector<Edge> chosen;
  spanning_trees_rec(g.edges(), 0, static_cast<std::size_t>(n - 1),
                     UnionFind(static_cast<std::size_t>(n + 1)), chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> enumerate_perfect_matchings(const Graph& g) {
  std::vector<EdgeSet> out;
  if (g.vertex_count() % 2 != 0) {
    return out;
  }
  std::vector<bool> matched(static_cast<std::size_t>(g.vertex_count() + 1), false);
  std::vector<Edge> chosen;
  matchings_rec(g, matched, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> enumerate_stable_sets(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<Vertex> chosen;
  vertex_sets_rec(
      g.vertex_count(), 1, chosen,
      [&g](const std::vector<Vertex>& set, Vertex v) {
        return std::none_of(set.begin(), set.end(), [&](Vertex w) { return g.adjacent(v, w); });
      },
      out);
  sort_shortlex(out);
  return out;
}

std::vector<VertexSet> enumerate_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<Vertex> chosen;
  vertex_sets_rec(
      g.vertex_count(), 1, chosen,
      [&g](const std::vector<Vertex>& set, Vertex v) {
        return std::all_of(set.begin(), set.end(), [&](Vertex w) { return g.adjacent(v, w); });
      },
      out);
  std::erase_if(out, [](const VertexSet& s) { return s.empty(); });
  sort_shortlex(out);
  return out;
}

ObjectList enumerate_objects(ObjectFamily family, const Graph& g) {
  switch (family) {
    case ObjectFamily::spanning_tree:
      return enumerate_spanning_trees(g);
    case ObjectFamily::perfect_matching:
      return enumerate_perfect_matchings(g);
    case ObjectFamily::stable_set:
      return enumerate_stable_sets(g);
    case ObjectFamily::clique:
      return enumerate_cliques(g);
  }
  throw std::invalid_argument("unknown object family");
}

std::size_t induced_component_count(const EdgeSet& tree, const VertexSet& u) {
  const int n = static_cast<int>(tree.size()) + 1;
  if (u.empty()) {
    throw std::invalid_argument("induced_component_count: U is empty");
  }
  if (!u.within(n)) {
    throw std::invalid_argument("induced_component_count: U is not a subset of [" +
                                std::to_string(n) + "]");
  }
  UnionFind components(static_cast<std::size_t>(n + 1));
  std::size_t count = u.size();
  for (const Edge& e : tree) {
    if (u.contains(e.u) && u.contains(e.v) &&
        components.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
      --count;
    }
  }
  return count;
}

std::size_t cut_edge_count(const VertexSet& u, const EdgeSet& m) {
  return static_cast<std::size_t>(std::count_if(
      m.begin(), m.end(), [&u](const Edge& e) { return u.contains(e.u) != u.contains(e.v); }));
}

std::size_t induced_edge_count(const VertexSet& u, const EdgeSet& m) {
  return static_cast<std::size_t>(std::count_if(
      m.begin(), m.end(), [&u](const Edge& e) { return u.contains(e.u) && u.contains(e.v); }));
}

namespace {

std::vector<VertexSet> subsets_where(int n, bool (*keep)(std::size_t)) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("subset enumeration needs 1 <= n <= 30");
  }
  std::vector<VertexSet> out;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<Vertex> members;
    for (int bit = 0; bit < n; ++bit) {
      if (mask & (std::uint32_t{1} << bit)) {
        members.push_back(bit + 1);
      }
    }
    if (keep(members.size())) {
      out.emplace_back(std::move(members));
    }
  }
  sort_shortlex(out);
  return out;
}

}  // namespace

std::vector<VertexSet> enumerate_odd_sets(int n) {
  return subsets_where(n, [](std::size_t size) { return size % 2 == 1; });
}

std::vector<VertexSet> enumerate_proper_subsets(int n) {
  return subsets_where(n, [](std::size_t) { return true; });
}

std::size_t perfect_matching_count(int n) {
  if (n < 0 || n % 2 != 0) {
    return 0;
  }
  std::size_t count = 1;
  for (int k = n - 1; k > 1; k -= 2) {
    count *= static_cast<std::size_t>(k);
  }
  return count;
}

std::optional<std::array<Vertex, 4>> find_claw(const Graph& g) {
  const int n = g.vertex_count();
  for (Vertex c = 1; c <= n; ++c) {
    const VertexSet around = g.neighbors(c);
    const auto& nb = around.members();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) {
          continue;
        }
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
            return std::array<Vertex, 4>{c, nb[i], nb[j], nb[k]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Vertex> root_tree(const EdgeSet& tree, int n, Vertex root) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n + 1));
  for (const Edge& e : tree) {
    if (e.u < 1 || e.v > n) {
      throw std::invalid_argument("tree edge outside [1," + std::to_string(n) + "]");
    }
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(n + 1), -1);
  parent[static_cast<std::size_t>(root)] = 0;
  std::vector<Vertex> stack{root};
  std::size_t seen = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
        ++seen;
      }
    }
  }
  if (seen != static_cast<std::size_t>(n) || tree.size() + 1 != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("edge set is not a spanning tree of [" + std::to_string(n) + "]");
  }
  return parent;
}

}  // namespace slackcomm
