#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "slackcomm/rational.hpp"
#include "slackcomm/slack.hpp"

namespace slackcomm {

/// Owner of an internal node. Alice holds a row (X), Bob a column (Y).
enum class Player { alice, bob };

char player_symbol(Player p);

class Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable protocol-tree node. Subtrees may be shared between parents; the
/// semantics are those of the fully expanded tree.
///
/// An internal node stores, for every element of its owner's domain (by
/// index), the probability of descending to the LEFT child. Deterministic
/// nodes use only 0 and 1. Nothing is validated at construction; see
/// validate().
class Node {
  struct Token {};

 public:
  Node(Token, Rational value);
  Node(Token, Player owner, std::vector<Rational> left_probability, NodePtr left, NodePtr right);

  static NodePtr leaf(Rational value);
  static NodePtr internal(Player owner, std::vector<Rational> left_probability, NodePtr left,
                          NodePtr right);

  bool is_leaf() const { return !left_; }
  const Rational& value() const { return value_; }
  Player owner() const { return owner_; }
  const std::vector<Rational>& left_probability() const { return left_probability_; }
  const NodePtr& left() const { return left_; }
  const NodePtr& right() const { return right_; }

  /// Height in edges; a leaf has height 0.
  std::size_t height() const { return height_; }
  /// Leaves of the expanded tree, saturating at UINT64_MAX.
  std::uint64_t leaf_count() const { return leaf_count_; }

 private:
  Rational value_;
  Player owner_ = Player::alice;
  std::vector<Rational> left_probability_;
  NodePtr left_;
  NodePtr right_;
  std::size_t height_ = 0;
  std::uint64_t leaf_count_ = 1;
};

/// Randomized protocol with private coins over row labels X and column labels Y.
class ProtocolTree {
 public:
  /// Throws std::invalid_argument on a null root or duplicate domain labels.
  ProtocolTree(NodePtr root, std::vector<std::string> x_domain, std::vector<std::string> y_domain);

  const NodePtr& root() const { return root_; }
  const std::vector<std::string>& x_domain() const { return x_domain_; }
  const std::vector<std::string>& y_domain() const { return y_domain_; }

  /// Throws std::out_of_range for an unknown label.
  std::size_t x_index(std::string_view label) const;
  std::size_t y_index(std::string_view label) const;

 private:
  NodePtr root_;
  std::vector<std::string> x_domain_;
  std::vector<std::string> y_domain_;
  std::unordered_map<std::string, std::size_t> x_lookup_;
  std::unordered_map<std::string, std::size_t> y_lookup_;
};

struct ExecutionSemantics {
  Rational expectation;
  Rational nonzero_probability;
  /// Leaf index (left-to-right order in the expanded tree) -> probability of
  /// ending there. Only leaves reached with positive probability appear.
  std::map<std::uint64_t, Rational> leaf_distribution;
};

/// Exact distribution of an execution on (x, y). Throws std::out_of_range
/// for unknown labels.
ExecutionSemantics evaluate(const ProtocolTree& t, std::string_view x, std::string_view y);
ExecutionSemantics evaluate_at(const ProtocolTree& t, std::size_t x, std::size_t y);

/// Expected output only; skips building the leaf distribution.
Rational expectation_at(const ProtocolTree& t, std::size_t x, std::size_t y);

struct Mismatch {
  std::string row;
  std::string col;
  Rational expected;
  Rational actual;
};

struct ExpectationCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::optional<Mismatch> first_mismatch;
};

/// Compares the expected output with `m` on every pair in `m`'s label order
/// and stops at the first mismatch. The protocol's domains must hold exactly
/// the labels of `m` (in any order); otherwise std::invalid_argument.
ExpectationCheck computes_in_expectation(const ProtocolTree& t, const LabeledMatrix& m);

/// Height of the tree.
std::size_t complexity(const ProtocolTree& t);

struct Violation {
  std::string path;  // "root", then 'L'/'R' steps, e.g. "root.LR"
  std::string message;
};

/// Empty iff every transition table covers its domain with values in [0,1],
/// every internal node has two children and every leaf value is >= 0.
std::vector<Violation> validate(const ProtocolTree& t);

bool is_deterministic(const ProtocolTree& t);

/// Runs `t` k times in sequence, grafting a fresh copy at every leaf of the
/// previous stage. A leaf of the result has value 1 if its path crossed a
/// positive-valued original leaf and 0 otherwise. Throws for k == 0.
ProtocolTree amplify_support(const ProtocolTree& t, std::size_t repetitions);

/// 1 - (1 - q)^k with q the nonzero probability of `t` on (x, y): the
/// semantics of amplify_support without materializing it.
Rational amplified_nonzero_probability(const ProtocolTree& t, std::size_t repetitions,
                                       std::size_t x, std::size_t y);

struct SimulationResult {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// Monte-Carlo estimate of the expected output on (x, y).
SimulationResult simulate(const ProtocolTree& t, std::size_t x, std::size_t y, std::size_t samples,
                          std::uint64_t seed);

// Construction helpers shared by the protocol builders.

/// Balanced subtree of ceil(lg options) levels in which `speaker` names one of
/// `options` values. Element e of the speaker's domain names option o with
/// probability weight(e, o) / sum_o weight(e, o); weights must be >= 0. A
/// node no element can reach gets transition 1. Option o continues with
/// next(o). With one option no node is emitted.
NodePtr announce(Player speaker, std::size_t domain_size, std::size_t options,
                 const std::function<Rational(std::size_t, std::size_t)>& weight,
                 const std::function<NodePtr(std::size_t)>& next);

/// announce() where element e always names choice(e).
NodePtr announce_deterministic(Player speaker, std::size_t domain_size, std::size_t options,
                               const std::function<std::size_t(std::size_t)>& choice,
                               const std::function<NodePtr(std::size_t)>& next);

}  // namespace slackcomm
