#include "clusterlogit/csv.hpp"

#include <fstream>
#include <sstream>

namespace clusterlogit {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  out.push_back(cell);
  return out;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

InputTable read_csv(std::istream& in) {
  InputTable table;
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::BadInput, "empty input");
  for (const auto& name : split_line(line)) {
    InputColumn col;
    col.name = trimmed(name);
    if (col.name.empty()) fail(ErrorCode::BadInput, "empty column name in header");
    table.columns.push_back(std::move(col));
  }
  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (cells.size() != table.columns.size())
      fail(ErrorCode::BadInput, "row " + std::to_string(row) + " has " +
                                    std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(table.columns.size()));
    for (size_t j = 0; j < cells.size(); ++j) table.columns[j].raw.push_back(trimmed(cells[j]));
  }
  // Attach numeric views to the columns that parse completely.
  for (auto& col : table.columns) {
    std::vector<double> values;
    values.reserve(col.raw.size());
    bool ok = true;
    for (const auto& cell : col.raw) {
      if (cell.empty()) {
        ok = false;
        break;
      }
      try {
        size_t pos = 0;
        double v = std::stod(cell, &pos);
        if (pos != cell.size()) {
          ok = false;
          break;
        }
        values.push_back(v);
      } catch (const std::exception&) {
        ok = false;
        break;
      }
    }
    if (ok) col.numeric = std::move(values);
  }
  return table;
}

InputTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::BadInput, "cannot open " + path);
  return read_csv(in);
}

}  // namespace clusterlogit
