#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <system_error>

#include "swvortex/cli.hpp"

namespace swvortex::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text == "nan" || text == "-nan") return std::nan("");
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad number '" +
                             std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] == name) return k;
  }
  throw std::out_of_range("csv: no column '" + name + "'");
}

std::map<std::string, std::string> CsvTable::metadata_map() const {
  return {metadata.begin(), metadata.end()};
}

std::string format_number(double v, ColumnFormat format) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::to_chars_result res{};
  switch (format.style) {
    case NumberStyle::Shortest:
      res = std::to_chars(buf, buf + sizeof buf, v);
      break;
    case NumberStyle::Scientific:
      res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, format.digits);
      break;
    case NumberStyle::Fixed:
      res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, format.digits);
      break;
  }
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const CsvTable& table, const std::vector<ColumnFormat>& formats) {
  if (!formats.empty() && formats.size() != table.columns.size()) {
    throw std::invalid_argument("write_csv: one format per column required");
  }
  for (const auto& note : table.notes) os << "## " << note << '\n';
  for (const auto& [key, value] : table.metadata) os << "# " << key << " = " << value << '\n';
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    os << (k ? "," : "") << table.columns[k];
  }
  os << '\n';
  std::string line;
  for (const auto& row : table.rows) {
    line.clear();
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) line += ',';
      line += format_number(row[k], formats.empty() ? ColumnFormat{} : formats[k]);
    }
    line += '\n';
    os << line;
  }
  if (!os) throw std::runtime_error("write_csv: write failed");
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(is, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.substr(0, 2) == "##") {
      table.notes.emplace_back(trim(line.substr(2)));
      continue;
    }
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) {
        table.notes.emplace_back(body);
      } else {
        table.metadata.emplace_back(std::string(trim(body.substr(0, eq))),
                                    std::string(trim(body.substr(eq + 1))));
      }
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!have_header) {
      for (auto f : fields) table.columns.emplace_back(trim(f));
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(table.columns.size()) + " fields");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (auto f : fields) row.push_back(parse_number(f, line_no));
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("csv: missing header line");
  return table;
}

}  // namespace swvortex::cli
