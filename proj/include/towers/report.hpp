#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace towers {

using Json = nlohmann::json;

/// One checked identity instance.
struct Cell {
  std::string identity;
  Json inputs = Json::object();
  Json lhs;
  Json rhs;
  bool equal = false;
};

struct Report {
  Json request = Json::object();
  std::vector<Cell> cells;
  std::int64_t elapsed_ms = 0;

  void add(Cell c) { cells.push_back(std::move(c)); }
  void append(const Report& other);
  bool passed() const;
  /// First unequal cell, or nullptr.
  const Cell* first_failure() const;

  Json to_json() const;
  /// Canonical text: sorted keys, two-space indent, trailing newline.
  std::string json_text() const;
  std::string csv_text() const;
};

/// Quotes a field for CSV output when needed.
std::string csv_field(const std::string& s);

}  // namespace towers
