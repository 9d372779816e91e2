#include "cascade_duel/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "cascade_duel/error.hpp"

namespace cascade_duel {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw std::logic_error("CsvTable: row has " + std::to_string(row.size()) +
                           " fields, header has " + std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

namespace {

void write_line(const std::vector<std::string>& fields, std::ostream& out) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out << ',';
    out << fields[k];
  }
  out << '\n';
}

}  // namespace

void write_csv(const CsvTable& table, std::ostream& out) {
  write_line(table.header, out);
  for (const auto& row : table.rows) write_line(row, out);
}

void emit_csv(const CsvTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_csv(table, out);
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace cascade_duel
