#include "slackcomm/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "slackcomm/labels.hpp"
#include "slackcomm/slack.hpp"

namespace slackcomm {

namespace {

void require_even(int n, int lowest, const char* what) {
  if (n % 2 != 0 || n < lowest) {
    throw std::invalid_argument(std::string(what) + " needs an even n >= " +
                                std::to_string(lowest) + ", got " + std::to_string(n));
  }
}

std::vector<VertexSet> half_subsets(int n) {
  std::vector<VertexSet> out;
  for (const auto& s : enumerate_proper_subsets(n)) {
    if (static_cast<int>(s.size()) * 2 == n) {
      out.push_back(s);
    }
  }
  return out;
}

NodePtr leaf(long value) { return Node::leaf(Rational(value)); }

// Alice's final node: left leaf `value` when predicate(x) holds, else 0.
NodePtr alice_outputs(std::size_t domain_size, const std::function<bool(std::size_t)>& hit,
                      long value) {
  std::vector<Rational> table(domain_size);
  for (std::size_t x = 0; x < domain_size; ++x) {
    table[x] = hit(x) ? 1 : 0;
  }
  return Node::internal(Player::alice, std::move(table), leaf(value), leaf(0));
}

std::size_t vertex_option(Vertex v) { return static_cast<std::size_t>(v - 1); }
Vertex option_vertex(std::size_t o) { return static_cast<Vertex>(o + 1); }

Vertex mate(const EdgeSet& m, Vertex v) {
  for (const Edge& e : m) {
    if (e.contains(v)) {
      return e.other(v);
    }
  }
  throw std::invalid_argument("vertex " + std::to_string(v) + " is unmatched");
}

}  // namespace

bool is_compatible(const VertexSet& x, const EdgeSet& m) {
  return std::all_of(m.begin(), m.end(),
                     [&x](const Edge& e) { return x.contains(e.u) != x.contains(e.v); });
}

CoverFamily greedy_matching_cover(int n) {
  if (n % 2 != 0 || n < 4 || n > 10) {
    throw std::invalid_argument("greedy_matching_cover needs an even n in [4,10], got " +
                                std::to_string(n));
  }
  const auto matchings = enumerate_perfect_matchings(Graph::complete(n));
  const auto candidates = half_subsets(n);
  std::vector<std::vector<std::size_t>> covers(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t m = 0; m < matchings.size(); ++m) {
      if (is_compatible(candidates[c], matchings[m])) {
        covers[c].push_back(m);
      }
    }
  }
  std::vector<bool> covered(matchings.size(), false);
  std::size_t remaining = matchings.size();
  CoverFamily family{n, {}};
  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto gain = static_cast<std::size_t>(std::count_if(
          covers[c].begin(), covers[c].end(), [&covered](std::size_t m) { return !covered[m]; }));
      if (gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    if (best_gain == 0) {
      throw std::logic_error("greedy cover stalled");
    }
    family.subsets.push_back(candidates[best]);
    for (std::size_t m : covers[best]) {
      if (!covered[m]) {
        covered[m] = true;
        --remaining;
      }
    }
  }
  return family;
}

double matching_cover_bound(int n, double log_scale) {
  // ln(n! / (2^{n/2} (n/2)!)) = ln (n-1)!!
  double log_matchings = 0.0;
  for (int k = n - 1; k > 1; k -= 2) {
    log_matchings += std::log(static_cast<double>(k));
  }
  return (1.0 + log_scale * log_matchings) * std::pow(2.0, n / 2.0) / std::sqrt(static_cast<double>(n));
}

std::optional<std::size_t> first_compatible(const CoverFamily& cover, const EdgeSet& m) {
  for (std::size_t i = 0; i < cover.subsets.size(); ++i) {
    if (is_compatible(cover.subsets[i], m)) {
      return i;
    }
  }
  return std::nullopt;
}

std::string HintedInput::label() const { return make_label("H", matching) + "@" + edge_token(hint); }

std::vector<HintedInput> hinted_inputs(int n) {
  std::vector<HintedInput> out;
  for (const auto& m : enumerate_perfect_matchings(Graph::complete(n))) {
    for (const Edge& e : m) {
      out.push_back({m, e});
    }
  }
  return out;
}

ProtocolTree clawfree_stable_set_protocol(const Graph& g, VertexChoice choice) {
  if (const auto claw = find_claw(g)) {
    const auto& c = *claw;
    throw std::invalid_argument("graph has a claw centered at " + std::to_string(c[0]) +
                                " with leaves " + std::to_string(c[1]) + ", " +
                                std::to_string(c[2]) + ", " + std::to_string(c[3]));
  }
  const int n = g.vertex_count();
  const auto cliques = enumerate_cliques(g);
  const auto stables = enumerate_stable_sets(g);
  std::vector<std::string> rows, cols;
  for (const auto& k : cliques) {
    rows.push_back(clique_row(k).to_string());
  }
  for (const auto& s : stables) {
    cols.push_back(stable_set_label(s));
  }
  const auto options = static_cast<std::size_t>(n);
  // Bob's report of S ∩ N[u]: two slots, option 0 = nobody, option v = vertex v.
  auto report = [&](Vertex u) {
    std::vector<std::pair<Vertex, Vertex>> seen(stables.size(), {0, 0});
    for (std::size_t j = 0; j < stables.size(); ++j) {
      std::vector<Vertex> hits;
      for (Vertex v : stables[j]) {
        if (v == u || g.adjacent(u, v)) {
          hits.push_back(v);
        }
      }
      if (hits.size() > 2) {
        throw std::logic_error("stable set meets a closed neighborhood in more than two vertices");
      }
      seen[j] = {hits.size() > 0 ? hits[0] : 0, hits.size() > 1 ? hits[1] : 0};
    }
    return seen;
  };

  NodePtr root = announce_deterministic(
      Player::alice, rows.size(), options,
      [&](std::size_t i) {
        const auto& k = cliques[i].members();
        return vertex_option(choice == VertexChoice::smallest ? k.front() : k.back());
      },
      [&](std::size_t u_option) {
        const auto seen = report(option_vertex(u_option));
        return announce_deterministic(
            Player::bob, cols.size(), options + 1,
            [&](std::size_t j) { return static_cast<std::size_t>(seen[j].first); },
            [&](std::size_t first) {
              return announce_deterministic(
                  Player::bob, cols.size(), options + 1,
                  [&](std::size_t j) {
                    // Unreachable branches (first slot differs) reuse slot 0.
                    return seen[j].first == static_cast<Vertex>(first)
                               ? static_cast<std::size_t>(seen[j].second)
                               : std::size_t{0};
                  },
                  [&](std::size_t second) {
                    return alice_outputs(
                        rows.size(),
                        [&](std::size_t i) {
                          return !cliques[i].contains(static_cast<Vertex>(first)) &&
                                 !cliques[i].contains(static_cast<Vertex>(second));
                        },
                        1);
                  });
            });
      });
  return ProtocolTree(std::move(root), std::move(rows), std::move(cols));
}

ProtocolTree spanning_tree_protocol(int n, const SpanningTreeProtocolOptions& options) {
  if (n < 2) {
    throw std::invalid_argument("spanning_tree_protocol needs n >= 2");
  }
  const auto subsets = options.subsets ? *options.subsets : enumerate_proper_subsets(n);
  const auto trees = options.trees ? *options.trees : enumerate_spanning_trees(Graph::complete(n));
  std::vector<std::string> rows, cols;
  for (const auto& u : subsets) {
    if (u.empty() || !u.within(n)) {
      throw std::invalid_argument("row " + make_label("U", u) + " is not a nonempty subset of [n]");
    }
    rows.push_back(subset_rank_row(u).to_string());
  }
  // parents[j][root] = parent array of tree j rooted at root.
  std::vector<std::vector<std::vector<Vertex>>> parents(trees.size());
  for (std::size_t j = 0; j < trees.size(); ++j) {
    cols.push_back(tree_label(trees[j]));
    parents[j].resize(static_cast<std::size_t>(n + 1));
    for (Vertex r = 1; r <= n; ++r) {
      parents[j][static_cast<std::size_t>(r)] = root_tree(trees[j], n, r);
    }
  }
  const auto vertices = static_cast<std::size_t>(n);

  NodePtr root = announce_deterministic(
      Player::alice, rows.size(), vertices,
      [&](std::size_t i) {
        const auto& u = subsets[i].members();
        return vertex_option(options.root_choice == VertexChoice::smallest ? u.front() : u.back());
      },
      [&](std::size_t root_option) {
        const Vertex r = option_vertex(root_option);
        // Each non-root vertex is the tail of exactly one edge oriented to r.
        return announce(
            Player::bob, cols.size(), vertices,
            [r](std::size_t, std::size_t v) { return Rational(option_vertex(v) == r ? 0 : 1); },
            [&, r](std::size_t tail_option) {
              const Vertex tail = option_vertex(tail_option);
              return announce_deterministic(
                  Player::bob, cols.size(), vertices,
                  [&, r, tail](std::size_t j) {
                    const Vertex head = parents[j][static_cast<std::size_t>(r)]
                                               [static_cast<std::size_t>(tail)];
                    return head == 0 ? std::size_t{0} : vertex_option(head);
                  },
                  [&, tail](std::size_t head_option) {
                    const Vertex head = option_vertex(head_option);
                    return alice_outputs(
                        rows.size(),
                        [&, tail, head](std::size_t i) {
                          return subsets[i].contains(tail) && !subsets[i].contains(head);
                        },
                        n - 1);
                  });
            });
      });
  return ProtocolTree(std::move(root), std::move(rows), std::move(cols));
}

ProtocolTree perfect_matching_protocol(int n, const CoverFamily& cover) {
  require_even(n, 4, "perfect_matching_protocol");
  if (cover.n != n || cover.subsets.empty()) {
    throw std::invalid_argument("cover family does not match n = " + std::to_string(n));
  }
  for (const auto& x : cover.subsets) {
    if (static_cast<int>(x.size()) * 2 != n || !x.within(n)) {
      throw std::invalid_argument("cover member " + make_label("X", x) + " is not an (n/2)-subset");
    }
  }
  const auto odd_sets = enumerate_odd_sets(n);
  const auto matchings = enumerate_perfect_matchings(Graph::complete(n));
  std::vector<std::string> rows, cols;
  for (const auto& u : odd_sets) {
    rows.push_back(odd_cut_row(u).to_string());
  }
  std::vector<std::size_t> member(matchings.size());
  for (std::size_t j = 0; j < matchings.size(); ++j) {
    cols.push_back(matching_label(matchings[j]));
    const auto c = first_compatible(cover, matchings[j]);
    if (!c) {
      throw std::invalid_argument("cover leaves matching " + cols.back() + " uncovered");
    }
    member[j] = *c;
  }
  const auto vertices = static_cast<std::size_t>(n);
  const auto output_options = static_cast<std::size_t>(n / 2);

  NodePtr root = announce_deterministic(
      Player::bob, cols.size(), cover.subsets.size(), [&](std::size_t j) { return member[j]; },
      [&](std::size_t c) {
        const VertexSet& x = cover.subsets[c];
        const VertexSet x_bar = complement(x, n);
        // Alice's side of the bipartition, intersected with U.
        std::vector<VertexSet> chosen(odd_sets.size());
        for (std::size_t i = 0; i < odd_sets.size(); ++i) {
          const VertexSet in_x = intersection(odd_sets[i], x);
          const VertexSet in_bar = intersection(odd_sets[i], x_bar);
          chosen[i] = in_x.size() <= in_bar.size() ? in_x : in_bar;
        }
        return announce(
            Player::alice, rows.size(), vertices,
            [&chosen](std::size_t i, std::size_t o) {
              if (chosen[i].empty()) {
                return Rational(o == 0 ? 1 : 0);
              }
              return Rational(chosen[i].contains(option_vertex(o)) ? 1 : 0);
            },
            [&, c](std::size_t u_option) {
              const Vertex u = option_vertex(u_option);
              return announce_deterministic(
                  Player::bob, cols.size(), vertices,
                  [&, u](std::size_t j) { return vertex_option(mate(matchings[j], u)); },
                  [&, u](std::size_t mate_option) {
                    const Vertex partner = option_vertex(mate_option);
                    return announce_deterministic(
                        Player::alice, rows.size(), output_options,
                        [&, partner](std::size_t i) {
                          const auto size = static_cast<long>(odd_sets[i].size());
                          long value = size - 1;
                          if (!chosen[i].empty() && odd_sets[i].contains(partner)) {
                            value -= 2 * static_cast<long>(chosen[i].size());
                          }
                          return static_cast<std::size_t>(value / 2);
                        },
                        [](std::size_t o) { return leaf(2 * static_cast<long>(o)); });
                  });
            });
      });
  return ProtocolTree(std::move(root), std::move(rows), std::move(cols));
}

ProtocolTree hint_edge_protocol(int n) { return hint_edge_protocol(n, hinted_inputs(n)); }

ProtocolTree hint_edge_protocol(int n, const std::vector<HintedInput>& inputs) {
  require_even(n, 4, "hint_edge_protocol");
  const auto odd_sets = enumerate_odd_sets(n);
  std::vector<std::string> rows, cols;
  for (const auto& u : odd_sets) {
    rows.push_back(odd_cut_row(u).to_string());
  }
  for (const auto& in : inputs) {
    if (!in.matching.contains(in.hint)) {
      throw std::invalid_argument("hint " + edge_token(in.hint) + " is not an edge of " +
                                  matching_label(in.matching));
    }
    if (static_cast<int>(in.matching.size()) * 2 != n) {
      throw std::invalid_argument(matching_label(in.matching) + " is not a perfect matching of K_" +
                                  std::to_string(n));
    }
    cols.push_back(in.label());
  }
  const auto vertices = static_cast<std::size_t>(n);
  const long payout = n / 2 - 1;

  // Bob names e' = {v, w} with v the smaller endpoint, uniformly over M - e.
  NodePtr root = announce(
      Player::bob, cols.size(), vertices,
      [&](std::size_t j, std::size_t o) {
        const Vertex v = option_vertex(o);
        for (const Edge& e : inputs[j].matching) {
          if (e.u == v && e != inputs[j].hint) {
            return Rational(1);
          }
        }
        return Rational(0);
      },
      [&](std::size_t v_option) {
        const Vertex v = option_vertex(v_option);
        return announce_deterministic(
            Player::bob, cols.size(), vertices,
            [&, v](std::size_t j) { return vertex_option(mate(inputs[j].matching, v)); },
            [&, v](std::size_t w_option) {
              const Vertex w = option_vertex(w_option);
              return alice_outputs(
                  rows.size(),
                  [&, v, w](std::size_t i) {
                    return odd_sets[i].contains(v) != odd_sets[i].contains(w);
                  },
                  payout);
            });
      });
  return ProtocolTree(std::move(root), std::move(rows), std::move(cols));
}

ExpectationCheck verify_hint_edge_protocol(const ProtocolTree& t, int n) {
  const auto odd_sets = enumerate_odd_sets(n);
  const auto inputs = hinted_inputs(n);
  ExpectationCheck check;
  for (const auto& u : odd_sets) {
    const std::string row = odd_cut_row(u).to_string();
    const std::size_t x = t.x_index(row);
    for (const auto& in : inputs) {
      if (u.contains(in.hint.u) == u.contains(in.hint.v)) {
        continue;
      }
      const std::string col = in.label();
      const Rational expected = static_cast<long>(cut_edge_count(u, in.matching)) - 1;
      const Rational actual = expectation_at(t, x, t.y_index(col));
      ++check.pairs_checked;
      if (actual != expected) {
        check.ok = false;
        check.first_mismatch = Mismatch{row, col, expected, actual};
        return check;
      }
    }
  }
  return check;
}

}  // namespace slackcomm
