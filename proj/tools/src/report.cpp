#include "magspec/cli/report.hpp"

#include <cmath>

#include <json.hpp>

#include "magspec/domain_io.hpp"
#include "magspec/version.hpp"

namespace magspec::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return csv_field(v);
        }
      },
      cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
        }
        return v;
      },
      cell);
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = std::string(command_name(c.command));
  j["m"] = c.m;
  j["b"] = c.b;
  j["p"] = c.p ? nlohmann::ordered_json(*c.p) : nlohmann::ordered_json(nullptr);
  j["R"] = c.R ? nlohmann::ordered_json(*c.R) : nlohmann::ordered_json(nullptr);
  j["domain"] = c.domain;
  j["out"] = c.out;
  j["format"] = c.format == Format::Json ? "json" : "csv";
  return j;
}

}  // namespace

void write_csv(const Report& report, std::ostream& out) {
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(report.columns[i]);
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_error_csv(const Report& report, std::ostream& out) {
  out << "context,kind,message\n";
  for (const auto& e : report.errors) {
    out << csv_field(e.context) << ',' << csv_field(e.kind) << ',' << csv_field(e.message) << '\n';
  }
}

void write_json(const Report& report, const RunConfig& config, double wall_seconds,
                std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["metadata"] = {{"version", kVersion},
                     {"config", config_json(config)},
                     {"wall_time_s", wall_seconds}};
  doc["columns"] = report.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) {
      obj[report.columns[i]] = cell_json(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  auto errors = nlohmann::ordered_json::array();
  for (const auto& e : report.errors) {
    errors.push_back({{"context", e.context}, {"kind", e.kind}, {"message", e.message}});
  }
  doc["errors"] = std::move(errors);
  out << doc.dump(2) << '\n';
}

}  // namespace magspec::cli
