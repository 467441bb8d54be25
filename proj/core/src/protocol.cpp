#include "slackcomm/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace slackcomm {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

const Rational& transition(const Node& node, std::size_t x, std::size_t y) {
  const std::size_t index = node.owner() == Player::alice ? x : y;
  if (index >= node.left_probability().size()) {
    throw std::invalid_argument("transition table too short for domain element " +
                                std::to_string(index));
  }
  return node.left_probability()[index];
}

}  // namespace

char player_symbol(Player p) { return p == Player::alice ? 'X' : 'Y'; }

Node::Node(Token, Rational value) : value_(std::move(value)) {}

Node::Node(Token, Player owner, std::vector<Rational> left_probability, NodePtr left,
           NodePtr right)
    : owner_(owner),
      left_probability_(std::move(left_probability)),
      left_(std::move(left)),
      right_(std::move(right)) {
  if (!left_ || !right_) {
    throw std::invalid_argument("internal node needs two children");
  }
  height_ = 1 + std::max(left_->height(), right_->height());
  leaf_count_ = saturating_add(left_->leaf_count(), right_->leaf_count());
}

NodePtr Node::leaf(Rational value) { return std::make_shared<const Node>(Token{}, std::move(value)); }

NodePtr Node::internal(Player owner, std::vector<Rational> left_probability, NodePtr left,
                       NodePtr right) {
  return std::make_shared<const Node>(Token{}, owner, std::move(left_probability), std::move(left),
                                      std::move(right));
}

ProtocolTree::ProtocolTree(NodePtr root, std::vector<std::string> x_domain,
                           std::vector<std::string> y_domain)
    : root_(std::move(root)), x_domain_(std::move(x_domain)), y_domain_(std::move(y_domain)) {
  if (!root_) {
    throw std::invalid_argument("protocol tree needs a root");
  }
  for (std::size_t i = 0; i < x_domain_.size(); ++i) {
    if (!x_lookup_.emplace(x_domain_[i], i).second) {
      throw std::invalid_argument("duplicate row label '" + x_domain_[i] + "'");
    }
  }
  for (std::size_t j = 0; j < y_domain_.size(); ++j) {
    if (!y_lookup_.emplace(y_domain_[j], j).second) {
      throw std::invalid_argument("duplicate column label '" + y_domain_[j] + "'");
    }
  }
}

std::size_t ProtocolTree::x_index(std::string_view label) const {
  const auto it = x_lookup_.find(std::string(label));
  if (it == x_lookup_.end()) {
    throw std::out_of_range("unknown row label '" + std::string(label) + "'");
  }
  return it->second;
}

std::size_t ProtocolTree::y_index(std::string_view label) const {
  const auto it = y_lookup_.find(std::string(label));
  if (it == y_lookup_.end()) {
    throw std::out_of_range("unknown column label '" + std::string(label) + "'");
  }
  return it->second;
}

ExecutionSemantics evaluate(const ProtocolTree& t, std::string_view x, std::string_view y) {
  return evaluate_at(t, t.x_index(x), t.y_index(y));
}

ExecutionSemantics evaluate_at(const ProtocolTree& t, std::size_t x, std::size_t y) {
  struct Frame {
    const Node* node;
    Rational probability;
    std::uint64_t first_leaf;
  };
  ExecutionSemantics out;
  std::vector<Frame> stack;
  stack.push_back({t.root().get(), Rational(1), 0});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.node->is_leaf()) {
      out.expectation += f.probability * f.node->value();
      if (f.node->value() > 0) {
        out.nonzero_probability += f.probability;
      }
      out.leaf_distribution[f.first_leaf] += f.probability;
      continue;
    }
    const Rational& p = transition(*f.node, x, y);
    const std::uint64_t right_first = saturating_add(f.first_leaf, f.node->left()->leaf_count());
    if (p != 1) {
      stack.push_back({f.node->right().get(), f.probability * (1 - p), right_first});
    }
    if (p != 0) {
      stack.push_back({f.node->left().get(), f.probability * p, f.first_leaf});
    }
  }
  return out;
}

Rational expectation_at(const ProtocolTree& t, std::size_t x, std::size_t y) {
  std::vector<std::pair<const Node*, Rational>> stack;
  stack.emplace_back(t.root().get(), Rational(1));
  Rational total;
  while (!stack.empty()) {
    auto [node, probability] = std::move(stack.back());
    stack.pop_back();
    if (node->is_leaf()) {
      if (node->value() != 0) {
        total += probability * node->value();
      }
      continue;
    }
    const Rational& p = transition(*node, x, y);
    if (p != 1) {
      stack.emplace_back(node->right().get(), probability * (1 - p));
    }
    if (p != 0) {
      stack.emplace_back(node->left().get(), probability * p);
    }
  }
  return total;
}

ExpectationCheck computes_in_expectation(const ProtocolTree& t, const LabeledMatrix& m) {
  if (t.x_domain().size() != m.rows() || t.y_domain().size() != m.cols()) {
    throw std::invalid_argument("protocol domains are " + std::to_string(t.x_domain().size()) +
                                "x" + std::to_string(t.y_domain().size()) + ", matrix is " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  std::vector<std::size_t> xs, ys;
  try {
    for (const auto& r : m.row_labels()) {
      xs.push_back(t.x_index(r));
    }
    for (const auto& c : m.col_labels()) {
      ys.push_back(t.y_index(c));
    }
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("label mismatch: ") + e.what());
  }
  ExpectationCheck check;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational actual = expectation_at(t, xs[i], ys[j]);
      ++check.pairs_checked;
      if (actual != m(i, j)) {
        check.ok = false;
        check.first_mismatch =
            Mismatch{m.row_labels()[i], m.col_labels()[j], m(i, j), std::move(actual)};
        return check;
      }
    }
  }
  return check;
}

std::size_t complexity(const ProtocolTree& t) { return t.root()->height(); }

std::vector<Violation> validate(const ProtocolTree& t) {
  std::vector<Violation> out;
  std::unordered_set<const Node*> seen;
  std::vector<std::pair<const Node*, std::string>> stack{{t.root().get(), "root"}};
  while (!stack.empty()) {
    auto [node, path] = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(node).second) {
      continue;
    }
    if (node->is_leaf()) {
      if (node->value() < 0) {
        out.push_back({path, "negative leaf value " + to_string(node->value())});
      }
      continue;
    }
    const auto& domain = node->owner() == Player::alice ? t.x_domain() : t.y_domain();
    const auto& table = node->left_probability();
    if (table.size() != domain.size()) {
      out.push_back({path, "transition table has " + std::to_string(table.size()) +
                               " entries for a domain of " + std::to_string(domain.size())});
    }
    for (std::size_t i = 0; i < std::min(table.size(), domain.size()); ++i) {
      if (table[i] < 0 || table[i] > 1) {
        out.push_back({path, "transition " + to_string(table[i]) + " for '" + domain[i] +
                                 "' outside [0,1]"});
      }
    }
    const std::string sep = path == "root" ? "." : "";
    stack.emplace_back(node->right().get(), path + sep + "R");
    stack.emplace_back(node->left().get(), path + sep + "L");
  }
  return out;
}

bool is_deterministic(const ProtocolTree& t) {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{t.root().get()};
  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    if (node->is_leaf() || !seen.insert(node).second) {
      continue;
    }
    for (const Rational& p : node->left_probability()) {
      if (p != 0 && p != 1) {
        return false;
      }
    }
    stack.push_back(node->left().get());
    stack.push_back(node->right().get());
  }
  return true;
}

ProtocolTree amplify_support(const ProtocolTree& t, std::size_t repetitions) {
  if (repetitions == 0) {
    throw std::invalid_argument("amplify_support needs at least one repetition");
  }
  std::map<std::pair<std::size_t, bool>, NodePtr> stages;
  const NodePtr positive_leaf = Node::leaf(Rational(1));
  const NodePtr zero_leaf = Node::leaf(Rational(0));

  std::function<NodePtr(std::size_t, bool)> stage = [&](std::size_t remaining,
                                                        bool positive) -> NodePtr {
    if (remaining == 0) {
      return positive ? positive_leaf : zero_leaf;
    }
    const auto key = std::make_pair(remaining, positive);
    if (auto it = stages.find(key); it != stages.end()) {
      return it->second;
    }
    std::unordered_map<const Node*, NodePtr> copies;
    std::function<NodePtr(const NodePtr&)> copy = [&](const NodePtr& n) -> NodePtr {
      if (n->is_leaf()) {
        return stage(remaining - 1, positive || n->value() > 0);
      }
      if (auto it = copies.find(n.get()); it != copies.end()) {
        return it->second;
      }
      NodePtr made = Node::internal(n->owner(), n->left_probability(), copy(n->left()),
                                    copy(n->right()));
      copies.emplace(n.get(), made);
      return made;
    };
    NodePtr result = copy(t.root());
    stages.emplace(key, result);
    return result;
  };

  return ProtocolTree(stage(repetitions, false), t.x_domain(), t.y_domain());
}

Rational amplified_nonzero_probability(const ProtocolTree& t, std::size_t repetitions,
                                       std::size_t x, std::size_t y) {
  if (repetitions == 0) {
    throw std::invalid_argument("amplification needs at least one repetition");
  }
  const Rational miss = 1 - evaluate_at(t, x, y).nonzero_probability;
  Rational all_miss(1);
  for (std::size_t i = 0; i < repetitions; ++i) {
    all_miss *= miss;
  }
  return 1 - all_miss;
}

SimulationResult simulate(const ProtocolTree& t, std::size_t x, std::size_t y, std::size_t samples,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Node* node = t.root().get();
    while (!node->is_leaf()) {
      const double p = transition(*node, x, y).convert_to<double>();
      node = coin(rng) < p ? node->left().get() : node->right().get();
    }
    const double v = node->value().convert_to<double>();
    sum += v;
    sum_sq += v * v;
  }
  SimulationResult r;
  r.samples = samples;
  if (samples == 0) {
    return r;
  }
  const double n = static_cast<double>(samples);
  r.mean = sum / n;
  const double variance = samples > 1 ? std::max(0.0, (sum_sq - n * r.mean * r.mean) / (n - 1)) : 0.0;
  r.standard_error = std::sqrt(variance / n);
  return r;
}

namespace {

struct Announcer {
  Player speaker;
  std::size_t domain_size;
  std::size_t options;
  // prefix[e][o] = sum of weights of options < o for element e.
  std::vector<std::vector<Rational>> prefix;
  const std::function<NodePtr(std::size_t)>& next;

  NodePtr build(std::size_t lo, std::size_t hi) const {
    if (hi - lo == 1) {
      return next(lo);
    }
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    std::vector<Rational> left_probability(domain_size);
    for (std::size_t e = 0; e < domain_size; ++e) {
      const Rational total = prefix[e][hi] - prefix[e][lo];
      left_probability[e] = total == 0 ? Rational(1) : (prefix[e][mid] - prefix[e][lo]) / total;
    }
    return Node::internal(speaker, std::move(left_probability), build(lo, mid), build(mid, hi));
  }
};

}  // namespace

NodePtr announce(Player speaker, std::size_t domain_size, std::size_t options,
                 const std::function<Rational(std::size_t, std::size_t)>& weight,
                 const std::function<NodePtr(std::size_t)>& next) {
  if (options == 0) {
    throw std::invalid_argument("announce needs at least one option");
  }
  if (options == 1) {
    return next(0);
  }
  Announcer a{speaker, domain_size, options, {}, next};
  a.prefix.resize(domain_size);
  for (std::size_t e = 0; e < domain_size; ++e) {
    auto& row = a.prefix[e];
    row.resize(options + 1);
    for (std::size_t o = 0; o < options; ++o) {
      Rational w = weight(e, o);
      if (w < 0) {
        throw std::invalid_argument("announce: negative weight");
      }
      row[o + 1] = row[o] + w;
    }
  }
  return a.build(0, options);
}

NodePtr announce_deterministic(Player speaker, std::size_t domain_size, std::size_t options,
                               const std::function<std::size_t(std::size_t)>& choice,
                               const std::function<NodePtr(std::size_t)>& next) {
  std::vector<std::size_t> chosen(domain_size);
  for (std::size_t e = 0; e < domain_size; ++e) {
    chosen[e] = choice(e);
  }
  return announce(
      speaker, domain_size, options,
      [&chosen](std::size_t e, std::size_t o) { return Rational(chosen[e] == o ? 1 : 0); }, next);
}

}  // namespace slackcomm
