#include <gtest/gtest.h>

#include "slackcomm/labels.hpp"

using namespace slackcomm;

TEST(EdgeToken, ShortAndLongForms) {
  EXPECT_EQ(edge_token(Edge(1, 2)), "12");
  EXPECT_EQ(edge_token(Edge(3, 11)), "3-11");
  EXPECT_EQ(parse_edge_token("12"), Edge(1, 2));
  EXPECT_EQ(parse_edge_token("10-12"), Edge(10, 12));
  EXPECT_THROW(parse_edge_token("1"), std::invalid_argument);
  EXPECT_THROW(parse_edge_token("11"), std::invalid_argument);
}

TEST(Payloads, RoundTrip) {
  const VertexSet s{1, 4, 12};
  EXPECT_EQ(vertex_set_payload(s), "1-4-12");
  EXPECT_EQ(parse_vertex_set_payload("1-4-12"), s);
  EXPECT_EQ(parse_vertex_set_payload(""), VertexSet{});
  const EdgeSet m{Edge(1, 2), Edge(3, 4), Edge(5, 10)};
  EXPECT_EQ(edge_set_payload(m), "12.34.5-10");
  EXPECT_EQ(parse_edge_set_payload("12.34.5-10"), m);
  EXPECT_EQ(make_label("T", EdgeSet{Edge(1, 2), Edge(1, 3)}), "T:12.13");
  EXPECT_EQ(make_label("S", VertexSet{}), "S:");
}

TEST(SplitLabel, NeedsSeparator) {
  const auto [p, rest] = split_label("U:1-2");
  EXPECT_EQ(p, "U");
  EXPECT_EQ(rest, "1-2");
  EXPECT_THROW(split_label("U12"), std::invalid_argument);
}

TEST(RowLabels, EveryKindRoundTrips) {
  const std::vector<RowLabel> rows{
      subset_rank_row(VertexSet{1, 3}), odd_cut_row(VertexSet{2, 4, 5}),
      clique_row(VertexSet{1, 2}), edge_nonnegativity_row(Edge(2, 3)),
      vertex_nonnegativity_row(7)};
  const std::vector<std::string> text{"U:1-3", "O:2-4-5", "K:1-2", "x:23", "x:v7"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].to_string(), text[i]);
    const RowLabel back = parse_row_label(text[i]);
    EXPECT_EQ(back.kind, rows[i].kind);
    EXPECT_EQ(back.to_string(), text[i]);
  }
  EXPECT_EQ(parse_row_label("E:all").kind, RowKind::edge_total);
  EXPECT_EQ(parse_row_label("D:4").to_string(), "D:4");
}

TEST(RowLabels, RejectsMalformed) {
  EXPECT_THROW(odd_cut_row(VertexSet{1, 2}), std::invalid_argument);
  EXPECT_THROW(parse_row_label("O:1-2"), std::invalid_argument);
  EXPECT_THROW(parse_row_label("Q:1"), std::invalid_argument);
  EXPECT_THROW(parse_row_label("U:1-x"), std::invalid_argument);
}
