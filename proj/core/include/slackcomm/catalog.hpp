#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slackcomm/combinatorics.hpp"
#include "slackcomm/protocol.hpp"

namespace slackcomm {

/// Family of (n/2)-subsets of [n] such that every perfect matching of K_n has
/// all its edges crossing some member.
struct CoverFamily {
  int n = 0;
  std::vector<VertexSet> subsets;
};

/// Every edge of `m` has exactly one end in `x`.
bool is_compatible(const VertexSet& x, const EdgeSet& m);

/// Greedy set cover over all perfect matchings of K_n with the (n/2)-subsets
/// as candidate sets; ties go to the shortlex-first subset. Throws
/// std::invalid_argument unless n is even and 4 <= n <= 10.
CoverFamily greedy_matching_cover(int n);

/// (1 + ln(n! / (2^{n/2} (n/2)!))) * 2^{n/2} / sqrt(n), the greedy size bound,
/// with the logarithm scaled by `log_scale`.
double matching_cover_bound(int n, double log_scale = 1.0);

/// Index of the first member compatible with `m`, if any.
std::optional<std::size_t> first_compatible(const CoverFamily& cover, const EdgeSet& m);

/// Bob's input in the hint-edge protocol: a perfect matching plus one of its
/// edges that is known to cross Alice's odd set.
struct HintedInput {
  EdgeSet matching;
  Edge hint;

  /// "H:<matching>@<edge>", e.g. "H:12.34.56@34".
  std::string label() const;
};

/// Every (matching, edge of that matching) pair for K_n, matchings in
/// enumeration order and edges ascending.
std::vector<HintedInput> hinted_inputs(int n);

enum class VertexChoice { smallest, largest };

/// Deterministic protocol for the clique rows of the STAB slack matrix of a
/// claw-free perfect graph. Alice names u in K; Bob names the (at most two)
/// members of S in N(u) + u, each as one of n+1 options; Alice outputs
/// 1 - |K ∩ S| through a final node with leaves 1 and 0.
///
/// Height: ceil(lg n) + 2 ceil(lg(n+1)) + 1 <= 3 ceil(lg n) + kClawFreeHeightConstant.
/// Throws std::invalid_argument naming a claw when g is not claw-free.
ProtocolTree clawfree_stable_set_protocol(const Graph& g,
                                          VertexChoice choice = VertexChoice::smallest);
inline constexpr std::size_t kClawFreeHeightConstant = 3;

struct SpanningTreeProtocolOptions {
  VertexChoice root_choice = VertexChoice::smallest;
  /// Restrict Alice's rows (default: every nonempty subset of [n]).
  std::optional<std::vector<VertexSet>> subsets;
  /// Restrict Bob's columns (default: every spanning tree of K_n).
  std::optional<std::vector<EdgeSet>> trees;
};

/// Randomized protocol computing components(T[U]) - 1 in expectation. Alice
/// names a root u in U; Bob picks a uniform edge of T oriented towards u and
/// names its tail v and head w; Alice outputs n - 1 when v is in U and w is
/// not, 0 otherwise. Height 3 ceil(lg n) + kSpanningTreeHeightConstant.
ProtocolTree spanning_tree_protocol(int n, const SpanningTreeProtocolOptions& options = {});
inline constexpr std::size_t kSpanningTreeHeightConstant = 1;

/// Randomized protocol computing |delta(U) ∩ M| - 1 in expectation over odd
/// sets U and perfect matchings M of K_n. Bob names the first compatible cover
/// member X; Alice takes whichever of X and its complement holds fewer
/// vertices of U (ties to X), names a uniform vertex u of U on that side,
/// Bob names the mate u', and Alice outputs |U| - 1 when u' is outside U and
/// |U| - 1 - 2|U ∩ side| otherwise. When U misses the chosen side entirely
/// the output is |U| - 1.
///
/// Height ceil(lg |cover|) + 2 ceil(lg n) + ceil(lg(n/2)). Throws
/// std::invalid_argument when the cover leaves some matching uncovered.
ProtocolTree perfect_matching_protocol(int n, const CoverFamily& cover);

/// Bob, knowing one edge e of M in delta(U), names a uniform e' in M - e;
/// Alice outputs |M| - 1 = n/2 - 1 when e' crosses U and 0 otherwise.
/// Columns are hinted_inputs(n); only pairs whose hint crosses U are
/// meaningful. Height 2 ceil(lg n) + 1. Throws for odd n or n < 4.
ProtocolTree hint_edge_protocol(int n);

/// Same protocol over an explicit list of hinted inputs. Throws
/// std::invalid_argument if a hint is not an edge of its matching.
ProtocolTree hint_edge_protocol(int n, const std::vector<HintedInput>& inputs);

/// Checks the expected output of `t` against |delta(U) ∩ M| - 1 on every
/// (U, M, e) with e crossing U, the cut counted edge by edge. Columns of `t`
/// must be hinted-input labels of K_n.
ExpectationCheck verify_hint_edge_protocol(const ProtocolTree& t, int n);

}  // namespace slackcomm
