#include "cqfb_cli/metrics_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cqfb/error.hpp"

namespace cqfb::cli {
namespace {

std::optional<std::vector<std::uint64_t>> parse_row(const std::string& line) {
  std::vector<std::uint64_t> row;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    auto end = line.find(',', pos);
    if (end == std::string::npos) end = line.size();
    std::string_view field(line.data() + pos, end - pos);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
      field.remove_suffix(1);
    }
    std::uint64_t v = 0;
    const auto r = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || r.ec != std::errc{} || r.ptr != field.data() + field.size()) {
      return std::nullopt;
    }
    row.push_back(v);
    pos = end + 1;
  }
  return row;
}

}  // namespace

ContingencyMatrix read_contingency(std::istream& in) {
  std::vector<std::vector<std::uint64_t>> rows;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    auto row = parse_row(line);
    if (!row) {
      if (first) {
        first = false;
        continue;
      }
      throw FormatError("contingency line " + std::to_string(line_no) + ": expected integers");
    }
    first = false;
    rows.push_back(std::move(*row));
  }
  try {
    return ContingencyMatrix(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("contingency matrix: ") + e.what());
  }
}

ContingencyMatrix read_contingency(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_contingency(in);
}

}  // namespace cqfb::cli
