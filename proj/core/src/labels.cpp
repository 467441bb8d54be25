#include "slackcomm/labels.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace slackcomm {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  if (text.empty()) {
    return parts;
  }
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string edge_token(const Edge& e) {
  if (e.v < 10) {
    return std::to_string(e.u) + std::to_string(e.v);
  }
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Edge parse_edge_token(std::string_view token) {
  const auto dash = token.find('-');
  if (dash != std::string_view::npos) {
    return Edge(parse_int(token.substr(0, dash)), parse_int(token.substr(dash + 1)));
  }
  if (token.size() != 2) {
    throw std::invalid_argument("malformed edge token '" + std::string(token) + "'");
  }
  return Edge(parse_int(token.substr(0, 1)), parse_int(token.substr(1, 1)));
}

std::string vertex_set_payload(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) {
      out += '-';
    }
    out += std::to_string(v);
  }
  return out;
}

std::string edge_set_payload(const EdgeSet& s) {
  std::string out;
  for (const Edge& e : s) {
    if (!out.empty()) {
      out += '.';
    }
    out += edge_token(e);
  }
  return out;
}

VertexSet parse_vertex_set_payload(std::string_view payload) {
  std::vector<Vertex> members;
  for (auto part : split(payload, '-')) {
    members.push_back(parse_int(part));
  }
  return VertexSet(std::move(members));
}

EdgeSet parse_edge_set_payload(std::string_view payload) {
  std::vector<Edge> members;
  for (auto part : split(payload, '.')) {
    members.push_back(parse_edge_token(part));
  }
  return EdgeSet(std::move(members));
}

std::string make_label(std::string_view prefix, const VertexSet& s) {
  return std::string(prefix) + ":" + vertex_set_payload(s);
}

std::string make_label(std::string_view prefix, const EdgeSet& s) {
  return std::string(prefix) + ":" + edge_set_payload(s);
}

std::pair<std::string_view, std::string_view> split_label(std::string_view label) {
  const auto colon = label.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("label '" + std::string(label) + "' has no ':'");
  }
  return {label.substr(0, colon), label.substr(colon + 1)};
}

std::string RowLabel::to_string() const {
  switch (kind) {
    case RowKind::subset_rank:
      return make_label("U", vertices);
    case RowKind::odd_cut:
      return make_label("O", vertices);
    case RowKind::clique:
      return make_label("K", vertices);
    case RowKind::nonnegativity:
      if (on_vertex) {
        return "x:v" + std::to_string(vertices.members().front());
      }
      return "x:" + edge_token(edge);
    case RowKind::degree_equality:
      return "D:" + std::to_string(vertices.members().front());
    case RowKind::edge_total:
      return "E:all";
  }
  throw std::logic_error("unknown row kind");
}

RowLabel parse_row_label(std::string_view label) {
  const auto [prefix, payload] = split_label(label);
  RowLabel row;
  if (prefix == "U") {
    row.kind = RowKind::subset_rank;
    row.vertices = parse_vertex_set_payload(payload);
  } else if (prefix == "O") {
    row.kind = RowKind::odd_cut;
    row.vertices = parse_vertex_set_payload(payload);
    if (row.vertices.size() % 2 == 0) {
      throw std::invalid_argument("odd-cut row '" + std::string(label) + "' has an even set");
    }
  } else if (prefix == "K") {
    row.kind = RowKind::clique;
    row.vertices = parse_vertex_set_payload(payload);
  } else if (prefix == "x") {
    row.kind = RowKind::nonnegativity;
    if (!payload.empty() && payload.front() == 'v') {
      row.on_vertex = true;
      row.vertices = VertexSet{parse_int(payload.substr(1))};
    } else {
      row.edge = parse_edge_token(payload);
    }
  } else if (prefix == "D") {
    row.kind = RowKind::degree_equality;
    row.vertices = VertexSet{parse_int(payload)};
  } else if (prefix == "E" && payload == "all") {
    row.kind = RowKind::edge_total;
  } else {
    throw std::invalid_argument("unknown row label '" + std::string(label) + "'");
  }
  return row;
}

RowLabel subset_rank_row(const VertexSet& u) {
  return RowLabel{RowKind::subset_rank, u, {}, false};
}

RowLabel odd_cut_row(const VertexSet& u) {
  if (u.size() % 2 == 0) {
    throw std::invalid_argument("odd-cut row needs an odd set");
  }
  return RowLabel{RowKind::odd_cut, u, {}, false};
}

RowLabel clique_row(const VertexSet& k) { return RowLabel{RowKind::clique, k, {}, false}; }

RowLabel edge_nonnegativity_row(const Edge& e) {
  return RowLabel{RowKind::nonnegativity, {}, e, false};
}

RowLabel vertex_nonnegativity_row(Vertex v) {
  return RowLabel{RowKind::nonnegativity, VertexSet{v}, {}, true};
}

}  // namespace slackcomm
