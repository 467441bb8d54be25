#include "slackcomm/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slackcomm {

namespace {

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    cells.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) {
      break;
    }
    start = pos + 1;
  }
  return cells;
}

void check_label(const std::string& label) {
  if (label.find_first_of(",\"\n\r") != std::string::npos) {
    throw std::invalid_argument("label '" + label + "' cannot be written unquoted");
  }
}

}  // namespace

void write_table(std::ostream& out, const Table& t) {
  for (const auto& c : t.col_labels) {
    check_label(c);
    out << ',' << c;
  }
  out << '\n';
  for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
    check_label(t.row_labels[i]);
    out << t.row_labels[i];
    for (std::size_t j = 0; j < t.col_labels.size(); ++j) {
      out << ',' << to_string(t.entries(i, j));
    }
    out << '\n';
  }
}

void write_csv(std::ostream& out, const LabeledMatrix& m) {
  write_table(out, {m.row_labels(), m.col_labels(), m.entries()});
}

std::string to_csv(const LabeledMatrix& m) {
  std::ostringstream out;
  write_csv(out, m);
  return out.str();
}

Table read_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty CSV input");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  auto header = split_cells(line);
  if (!header.front().empty()) {
    throw std::invalid_argument("CSV corner cell must be empty");
  }
  std::vector<std::string> cols(header.begin() + 1, header.end());
  std::vector<std::string> rows;
  std::vector<Rational> data;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      break;
    }
    auto cells = split_cells(line);
    if (cells.size() != cols.size() + 1) {
      throw std::invalid_argument("CSV row '" + cells.front() + "' has " +
                                  std::to_string(cells.size() - 1) + " entries, expected " +
                                  std::to_string(cols.size()));
    }
    rows.push_back(cells.front());
    for (std::size_t j = 1; j < cells.size(); ++j) {
      data.push_back(parse_rational(cells[j]));
    }
  }
  const std::size_t r = rows.size();
  return {std::move(rows), std::move(cols), Matrix(r, header.size() - 1, std::move(data))};
}

LabeledMatrix read_csv(std::istream& in) {
  Table t = read_table(in);
  return LabeledMatrix(std::move(t.row_labels), std::move(t.col_labels), std::move(t.entries));
}

LabeledMatrix from_csv(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in);
}

void write_csv_file(const std::string& path, const LabeledMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  write_csv(out, m);
}

LabeledMatrix read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return read_csv(in);
}

}  // namespace slackcomm
