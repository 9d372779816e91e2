#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace cascade_duel {

/// Real numbers in every CSV: 12 significant digits, "nan" for NaN.
std::string format_real(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

void write_csv(const CsvTable& table, std::ostream& out);
/// Throws IoError naming `path` on failure.
void emit_csv(const CsvTable& table, const std::filesystem::path& path);

}  // namespace cascade_duel
