#pragma once

#include <iosfwd>
#include <string>

#include "slackcomm/protocol.hpp"

namespace slackcomm {

// Text form of a protocol tree, one node per line, two spaces of indentation
// per level of depth, left child before right child:
//
//   protocol
//   x-domain U:1 U:2 U:1-2
//   y-domain T:12
//   X U:1=1 U:2=1/2 U:1-2=0
//     leaf 3
//     Y T:12=1
//       leaf 1/2
//       leaf 0
//
// An internal line names its owner (X = Alice, Y = Bob) followed by the
// probability of descending LEFT for every domain label, in domain order.
// Labels may not contain whitespace or '='.

void write_protocol(std::ostream& out, const ProtocolTree& t);
std::string to_text(const ProtocolTree& t);

/// Throws std::invalid_argument on malformed input: bad indentation, unknown
/// or missing labels, unparsable numbers. Range checks are left to validate().
ProtocolTree read_protocol(std::istream& in);
ProtocolTree parse_protocol(const std::string& text);

}  // namespace slackcomm
