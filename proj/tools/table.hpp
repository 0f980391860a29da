#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chargent/bigint.hpp"

namespace cli {

// A cell that prints unquoted in CSV. Used for big integers, which JSON
// receives as strings.
struct Decimal {
  std::string text;
};

using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string, Decimal>;

inline Cell big(const chargent::BigInt& x) { return Decimal{chargent::to_decimal(x)}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

enum class Format { csv, json };

// CSV: "# <meta json>" line, header, rows. JSON: {"meta": ..., "rows": [...]}.
void write_table(std::ostream& os, Format format, const nlohmann::ordered_json& meta, const Table& table);

}  // namespace cli
