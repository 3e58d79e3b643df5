#pragma once

#include <string>
#include <vector>

namespace higine {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a named column, -1 when absent.
  int column(const std::string& name) const;
};

// Comma-separated with a header row. Double-quoted fields may contain commas
// and doubled quotes; embedded newlines are not supported.
CsvTable read_csv(const std::string& path);

}  // namespace higine
