#include "slackcomm/protocol_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace slackcomm {

namespace {

void check_label(const std::string& label) {
  if (label.empty() || label.find_first_of(" \t\r\n=") != std::string::npos) {
    throw std::invalid_argument("label '" + label + "' cannot be written in protocol text");
  }
}

void write_domain(std::ostream& out, const char* name, const std::vector<std::string>& domain) {
  out << name;
  for (const auto& label : domain) {
    check_label(label);
    out << ' ' << label;
  }
  out << '\n';
}

void write_node(std::ostream& out, const ProtocolTree& t, const Node& node, std::size_t depth) {
  out << std::string(2 * depth, ' ');
  if (node.is_leaf()) {
    out << "leaf " << to_string(node.value()) << '\n';
    return;
  }
  const auto& domain = node.owner() == Player::alice ? t.x_domain() : t.y_domain();
  out << player_symbol(node.owner());
  const auto& table = node.left_probability();
  if (table.size() != domain.size()) {
    throw std::invalid_argument("cannot print a transition table that does not cover its domain");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << ' ' << domain[i] << '=' << to_string(table[i]);
  }
  out << '\n';
  write_node(out, t, *node.left(), depth + 1);
  write_node(out, t, *node.right(), depth + 1);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

struct Line {
  std::size_t number;
  std::size_t depth;
  std::vector<std::string> tokens;
};

class Parser {
 public:
  Parser(std::vector<Line> lines, const std::vector<std::string>& x,
         const std::vector<std::string>& y)
      : lines_(std::move(lines)), x_(x), y_(y) {}

  NodePtr parse_root() {
    if (lines_.empty()) {
      fail(0, "missing tree");
    }
    NodePtr root = parse(0);
    if (pos_ != lines_.size()) {
      fail(lines_[pos_].number, "unexpected line after the tree ends");
    }
    return root;
  }

 private:
  [[noreturn]] static void fail(std::size_t number, const std::string& message) {
    throw std::invalid_argument("protocol line " + std::to_string(number) + ": " + message);
  }

  NodePtr parse(std::size_t depth) {
    if (pos_ >= lines_.size()) {
      fail(lines_.back().number, "tree ends early");
    }
    const Line& line = lines_[pos_++];
    if (line.depth != depth) {
      fail(line.number, "expected depth " + std::to_string(depth) + ", found " +
                            std::to_string(line.depth));
    }
    const auto& tok = line.tokens;
    if (tok[0] == "leaf") {
      if (tok.size() != 2) {
        fail(line.number, "leaf needs exactly one value");
      }
      return Node::leaf(parse_value(line.number, tok[1]));
    }
    if (tok[0] != "X" && tok[0] != "Y") {
      fail(line.number, "expected 'X', 'Y' or 'leaf', found '" + tok[0] + "'");
    }
    const Player owner = tok[0] == "X" ? Player::alice : Player::bob;
    const auto& domain = owner == Player::alice ? x_ : y_;
    if (tok.size() != domain.size() + 1) {
      fail(line.number, "transition table has " + std::to_string(tok.size() - 1) +
                            " entries for a domain of " + std::to_string(domain.size()));
    }
    std::vector<Rational> table;
    table.reserve(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const std::string& pair = tok[i + 1];
      const auto eq = pair.rfind('=');
      if (eq == std::string::npos || pair.substr(0, eq) != domain[i]) {
        fail(line.number, "expected '" + domain[i] + "=p/q', found '" + pair + "'");
      }
      table.push_back(parse_value(line.number, pair.substr(eq + 1)));
    }
    NodePtr left = parse(depth + 1);
    NodePtr right = parse(depth + 1);
    return Node::internal(owner, std::move(table), std::move(left), std::move(right));
  }

  static Rational parse_value(std::size_t number, const std::string& text) {
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument& e) {
      fail(number, e.what());
    }
  }

  std::vector<Line> lines_;
  const std::vector<std::string>& x_;
  const std::vector<std::string>& y_;
  std::size_t pos_ = 0;
};

}  // namespace

void write_protocol(std::ostream& out, const ProtocolTree& t) {
  out << "protocol\n";
  write_domain(out, "x-domain", t.x_domain());
  write_domain(out, "y-domain", t.y_domain());
  write_node(out, t, *t.root(), 0);
}

std::string to_text(const ProtocolTree& t) {
  std::ostringstream out;
  write_protocol(out, t);
  return out.str();
}

ProtocolTree read_protocol(std::istream& in) {
  std::string raw;
  std::vector<Line> lines;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    const auto first = raw.find_first_not_of(' ');
    if (first == std::string::npos) {
      continue;
    }
    if (first % 2 != 0) {
      throw std::invalid_argument("protocol line " + std::to_string(number) +
                                  ": indentation must be a multiple of two spaces");
    }
    lines.push_back({number, first / 2, tokens(raw)});
  }
  if (lines.size() < 3 || lines[0].tokens != std::vector<std::string>{"protocol"} ||
      lines[1].tokens.front() != "x-domain" || lines[2].tokens.front() != "y-domain" ||
      lines[0].depth != 0 || lines[1].depth != 0 || lines[2].depth != 0) {
    throw std::invalid_argument("protocol text must start with 'protocol', 'x-domain', 'y-domain'");
  }
  std::vector<std::string> x(lines[1].tokens.begin() + 1, lines[1].tokens.end());
  std::vector<std::string> y(lines[2].tokens.begin() + 1, lines[2].tokens.end());
  Parser parser(std::vector<Line>(lines.begin() + 3, lines.end()), x, y);
  NodePtr root = parser.parse_root();
  return ProtocolTree(std::move(root), std::move(x), std::move(y));
}

ProtocolTree parse_protocol(const std::string& text) {
  std::istringstream in(text);
  return read_protocol(in);
}

}  // namespace slackcomm
