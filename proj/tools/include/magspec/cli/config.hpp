#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magspec::cli {

enum class Command {
  BandScan,
  Crossing,
  Temple,
  DiskAsymptotics,
  Effective,
  DomainMoments,
  DomainBound,
  LocalOpt,
  WeakFieldG,
  SpecfunSelftest,
};

enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::BandScan;
  std::vector<int> m;     // empty: command default
  std::vector<double> b;  // empty: command default
  std::optional<double> p;
  std::optional<double> R;
  std::string domain;
  std::string out;  // empty: standard output
  Format format = Format::Csv;
};

std::string_view command_name(Command c);
std::optional<Command> command_from_name(std::string_view name);
const std::vector<std::string>& command_names();

/// "0.05:0.05:0.8" (inclusive), "0.1,0.3" or "0.2".
std::vector<double> parse_grid(const std::string& text);

/// "1..3", "1,2,4" or "2".
std::vector<int> parse_int_range(const std::string& text);

/// Accepts "--key value" flags and bare "key=value" tokens. Throws
/// ParseError on malformed input. Returns nullopt when help was printed.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv,
                                            std::string* help_text = nullptr);

}  // namespace magspec::cli
