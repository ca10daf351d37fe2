#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace wfuse {

// Empty cells render as an empty CSV field and as JSON null. Exact rational
// parts are stored as decimal strings so they never overflow.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

// Comma separated, header first, '\n' line ends, doubles with 17 significant
// digits.
void write_csv(const Table& table, std::ostream& out);
// Array of objects keyed by the header names.
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, OutputFormat format, std::ostream& out);

std::string format_double(double value);

}  // namespace wfuse
