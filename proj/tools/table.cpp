#include "table.hpp"

#include <cmath>

#include "chargent/format.hpp"

namespace cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

struct CsvCell {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(std::int64_t i) const { return std::to_string(i); }
  std::string operator()(double d) const { return chargent::format_double(d); }
  std::string operator()(const std::string& s) const { return csv_escape(s); }
  std::string operator()(const Decimal& d) const { return d.text; }
};

struct JsonCell {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(bool b) const { return b; }
  nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
  nlohmann::ordered_json operator()(double d) const {
    if (!std::isfinite(d)) return nullptr;
    return d;
  }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  nlohmann::ordered_json operator()(const Decimal& d) const { return d.text; }
};

}  // namespace

void write_table(std::ostream& os, Format format, const nlohmann::ordered_json& meta, const Table& table) {
  if (format == Format::csv) {
    os << "# " << meta.dump() << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
      os << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["meta"] = meta;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = std::visit(JsonCell{}, row[i]);
    doc["rows"].push_back(obj);
  }
  os << doc.dump(2) << '\n';
}

}  // namespace cli
