#include "qrlab/report.hpp"

#include <charconv>
#include <ostream>

#include "json.hpp"

namespace qrlab {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

nlohmann::ordered_json table_cell(const std::string& cell) {
  if (cell.empty()) return nullptr;
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec == std::errc() && ptr == cell.data() + cell.size()) return v;
  return cell;
}

}  // namespace

void write_json_lines(std::ostream& out, const std::vector<VerificationReport>& reports) {
  for (const auto& report : reports) {
    nlohmann::ordered_json line;
    line["prime"] = report.prime;
    line["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      nlohmann::ordered_json entry;
      entry["name"] = c.name;
      entry["pass"] = c.pass;
      entry["computed"] = c.computed;
      entry["expected"] = c.expected;
      entry["micros"] = c.micros;
      line["checks"].push_back(std::move(entry));
    }
    out << line.dump() << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports) {
  out << "prime,check,pass,computed,expected,micros\n";
  for (const auto& report : reports) {
    for (const auto& c : report.checks) {
      out << report.prime << ',' << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ','
          << csv_field(c.computed) << ',' << csv_field(c.expected) << ',' << c.micros << '\n';
    }
  }
}

void write_table_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
}

void write_table_json_lines(std::ostream& out, const Table& table) {
  for (const auto& row : table.rows) {
    nlohmann::ordered_json line;
    for (std::size_t i = 0; i < row.size(); ++i) line[table.columns[i]] = table_cell(row[i]);
    out << line.dump() << '\n';
  }
}

}  // namespace qrlab
