#include <gtest/gtest.h>

#include "slackcomm/catalog.hpp"
#include "slackcomm/protocol_io.hpp"

using namespace slackcomm;

TEST(ProtocolText, WritesDocumentedLayout) {
  auto bob = Node::internal(Player::bob, {Rational(1)}, Node::leaf(Rational(1, 2)), Node::leaf(0));
  auto root = Node::internal(Player::alice, {Rational(1), Rational(1, 2), Rational(0)},
                             Node::leaf(3), bob);
  const ProtocolTree t(root, {"U:1", "U:2", "U:1-2"}, {"T:12"});
  EXPECT_EQ(to_text(t),
            "protocol\n"
            "x-domain U:1 U:2 U:1-2\n"
            "y-domain T:12\n"
            "X U:1=1 U:2=1/2 U:1-2=0\n"
            "  leaf 3\n"
            "  Y T:12=1\n"
            "    leaf 1/2\n"
            "    leaf 0\n");
}

TEST(ProtocolText, RoundTripsCatalogProtocol) {
  const auto t = spanning_tree_protocol(3);
  const auto back = parse_protocol(to_text(t));
  EXPECT_EQ(to_text(back), to_text(t));
  EXPECT_EQ(complexity(back), complexity(t));
  for (std::size_t x = 0; x < t.x_domain().size(); ++x) {
    for (std::size_t y = 0; y < t.y_domain().size(); ++y) {
      EXPECT_EQ(expectation_at(back, x, y), expectation_at(t, x, y));
    }
  }
}

TEST(ProtocolText, RejectsMalformedInput) {
  EXPECT_THROW(parse_protocol(""), std::invalid_argument);
  EXPECT_THROW(parse_protocol("protocol\nx-domain a\ny-domain b\n"), std::invalid_argument);
  EXPECT_THROW(parse_protocol("protocol\nx-domain a\ny-domain b\nX a=1\n  leaf 1\n"),
               std::invalid_argument);
  EXPECT_THROW(parse_protocol("protocol\nx-domain a\ny-domain b\nX z=1\n  leaf 1\n  leaf 0\n"),
               std::invalid_argument);
  EXPECT_THROW(parse_protocol("protocol\nx-domain a\ny-domain b\nleaf q\n"),
               std::invalid_argument);
  EXPECT_THROW(parse_protocol("protocol\nx-domain a\ny-domain b\n   leaf 1\n"),
               std::invalid_argument);
  EXPECT_THROW(parse_protocol("protocol\nx-domain a\ny-domain b\nleaf 1\nleaf 2\n"),
               std::invalid_argument);
}
