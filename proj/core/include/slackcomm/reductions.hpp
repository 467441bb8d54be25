#pragma once

#include <cstddef>
#include <optional>

#include "slackcomm/combinatorics.hpp"

namespace slackcomm {

struct DisjointnessInstance {
  int n = 0;
  VertexSet a;
  VertexSet b;
};

/// 1 when A and B are disjoint, 0 otherwise.
int disj(const DisjointnessInstance& inst);

struct PMReductionOutput {
  int ell = 0;
  int k = 0;  // ground set size after padding
  VertexSet u;
  EdgeSet m;
  std::size_t dummies_added = 0;
};

/// Odd set U and perfect matching M of K_ell with |delta(U) ∩ M| = 1 exactly
/// when A and B are disjoint. B is padded with at most two dummies so that |B|
/// and |[k] - B| are even; dummies never join A. With `drop_anchor` the
/// vertex 3k+1 is left out of U, which breaks the equivalence.
PMReductionOutput reduce_to_pm(const DisjointnessInstance& inst, bool drop_anchor = false);

struct STReductionOutput {
  int ell = 0;
  VertexSet u;
  EdgeSet t;
};

/// Spanning tree T of K_{2n+1} and U containing 2n+1 with T[U] connected
/// exactly when A and B are disjoint. `drop_anchor` leaves 2n+1 out of U.
STReductionOutput reduce_to_st(const DisjointnessInstance& inst, bool drop_anchor = false);

/// Slack of the produced pair, from cut and component counts. An empty U
/// (possible only with a dropped anchor) has slack -1.
long reduction_slack(const PMReductionOutput& out);
long reduction_slack(const STReductionOutput& out);

enum class ReductionTarget { pm, st };

struct ReductionCounterexample {
  VertexSet a;
  VertexSet b;
  int disj = 0;
  long slack = 0;
};

struct ReductionCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::optional<ReductionCounterexample> counterexample;
};

/// Checks disj(A,B) = 1 <=> slack = 0 over all 4^n pairs of subsets of [n],
/// stopping at the first counterexample. Throws std::invalid_argument for
/// n < 0 or n > 10.
ReductionCheck verify_reduction(ReductionTarget target, int n, bool drop_anchor = false);

}  // namespace slackcomm
