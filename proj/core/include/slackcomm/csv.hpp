#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slackcomm/slack.hpp"

namespace slackcomm {

// CSV layout: the first row holds an empty corner cell followed by the column
// labels; each further row holds a row label followed by its entries written
// as exact rationals ("p/q", or "p" for integers). Labels never contain commas
// or quotes, so no quoting is used.

void write_csv(std::ostream& out, const LabeledMatrix& m);

/// Same layout for matrices with signed entries.
struct Table {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Matrix entries;
};
void write_table(std::ostream& out, const Table& t);
Table read_table(std::istream& in);
std::string to_csv(const LabeledMatrix& m);

/// Throws std::invalid_argument on ragged rows or unparsable entries.
LabeledMatrix read_csv(std::istream& in);
LabeledMatrix from_csv(const std::string& text);

void write_csv_file(const std::string& path, const LabeledMatrix& m);
LabeledMatrix read_csv_file(const std::string& path);

}  // namespace slackcomm
