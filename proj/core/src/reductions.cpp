#include "slackcomm/reductions.hpp"

#include <stdexcept>
#include <vector>

namespace slackcomm {

namespace {

void check_instance(const DisjointnessInstance& inst) {
  if (inst.n < 0 || !inst.a.within(inst.n) || !inst.b.within(inst.n)) {
    throw std::invalid_argument("A and B must be subsets of [" + std::to_string(inst.n) + "]");
  }
}

std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out{VertexSet{}};
  if (n == 0) {
    return out;
  }
  for (auto& s : enumerate_proper_subsets(n)) {
    out.push_back(std::move(s));
  }
  return out;
}

// Pairs the listed vertices two at a time in ascending order.
void pair_consecutive(const std::vector<Vertex>& unmatched, std::vector<Edge>& edges) {
  if (unmatched.size() % 2 != 0) {
    throw std::logic_error("odd number of unmatched vertices in a block");
  }
  for (std::size_t i = 0; i + 1 < unmatched.size(); i += 2) {
    edges.emplace_back(unmatched[i], unmatched[i + 1]);
  }
}

}  // namespace

int disj(const DisjointnessInstance& inst) { return intersection(inst.a, inst.b).empty() ? 1 : 0; }

PMReductionOutput reduce_to_pm(const DisjointnessInstance& inst, bool drop_anchor) {
  check_instance(inst);
  int k = inst.n;
  std::vector<Vertex> b = inst.b.members();
  PMReductionOutput out;
  if (b.size() % 2 != 0) {
    b.push_back(++k);
    ++out.dummies_added;
  }
  if ((static_cast<std::size_t>(k) - b.size()) % 2 != 0) {
    ++k;
    ++out.dummies_added;
  }
  const VertexSet padded(b);
  out.k = k;
  out.ell = 3 * k + 2;

  std::vector<Vertex> u;
  for (Vertex i : inst.a) {
    u.push_back(i);
  }
  for (Vertex i : inst.a) {
    u.push_back(i + k);
  }
  if (!drop_anchor) {
    u.push_back(3 * k + 1);
  }
  out.u = VertexSet(u);

  std::vector<Edge> edges;
  std::vector<Vertex> first_block, third_block;
  for (Vertex i = 1; i <= k; ++i) {
    if (padded.contains(i)) {
      edges.emplace_back(i + k, i + 2 * k);
      first_block.push_back(i);
    } else {
      edges.emplace_back(i, i + k);
      third_block.push_back(i + 2 * k);
    }
  }
  edges.emplace_back(3 * k + 1, 3 * k + 2);
  pair_consecutive(first_block, edges);
  pair_consecutive(third_block, edges);
  out.m = EdgeSet(std::move(edges));
  return out;
}

STReductionOutput reduce_to_st(const DisjointnessInstance& inst, bool drop_anchor) {
  check_instance(inst);
  const int n = inst.n;
  const Vertex hub = 2 * n + 1;
  STReductionOutput out;
  out.ell = hub;
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    edges.emplace_back(i, hub);
    edges.emplace_back(n + i, inst.b.contains(i) ? i : hub);
  }
  out.t = EdgeSet(std::move(edges));
  std::vector<Vertex> u;
  for (Vertex i : inst.a) {
    u.push_back(n + i);
  }
  if (!drop_anchor) {
    u.push_back(hub);
  }
  out.u = VertexSet(u);
  return out;
}

long reduction_slack(const PMReductionOutput& out) {
  if (out.u.empty()) {
    return -1;
  }
  return static_cast<long>(cut_edge_count(out.u, out.m)) - 1;
}

long reduction_slack(const STReductionOutput& out) {
  if (out.u.empty()) {
    return -1;
  }
  return static_cast<long>(induced_component_count(out.t, out.u)) - 1;
}

ReductionCheck verify_reduction(ReductionTarget target, int n, bool drop_anchor) {
  if (n < 0 || n > 10) {
    throw std::invalid_argument("verify_reduction supports 0 <= n <= 10");
  }
  const auto subsets = all_subsets(n);
  ReductionCheck check;
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      const DisjointnessInstance inst{n, a, b};
      const long slack = target == ReductionTarget::pm
                             ? reduction_slack(reduce_to_pm(inst, drop_anchor))
                             : reduction_slack(reduce_to_st(inst, drop_anchor));
      const int d = disj(inst);
      ++check.pairs_checked;
      if ((d == 1) != (slack == 0)) {
        check.ok = false;
        check.counterexample = ReductionCounterexample{a, b, d, slack};
        return check;
      }
    }
  }
  return check;
}

}  // namespace slackcomm
