#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "magspec/cli/config.hpp"

namespace magspec::cli {

using Cell = std::variant<double, long long, bool, std::string>;

struct ErrorEntry {
  std::string context;  // which sample failed
  std::string kind;     // config | hypothesis | numerical
  std::string message;
};

struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<ErrorEntry> errors;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

void write_csv(const Report& report, std::ostream& out);
void write_error_csv(const Report& report, std::ostream& out);
void write_json(const Report& report, const RunConfig& config, double wall_seconds,
                std::ostream& out);

}  // namespace magspec::cli
