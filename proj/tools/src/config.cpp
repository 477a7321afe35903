#include "magspec/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "magspec/errors.hpp"

namespace magspec::cli {
namespace {

struct NamedCommand {
  Command command;
  const char* name;
};

constexpr NamedCommand kCommands[] = {
    {Command::BandScan, "band-scan"},
    {Command::Crossing, "crossing"},
    {Command::Temple, "temple"},
    {Command::DiskAsymptotics, "disk-asymptotics"},
    {Command::Effective, "effective"},
    {Command::DomainMoments, "domain-moments"},
    {Command::DomainBound, "domain-bound"},
    {Command::LocalOpt, "local-opt"},
    {Command::WeakFieldG, "weak-field-G"},
    {Command::SpecfunSelftest, "specfun-selftest"},
};

double parse_real(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ParseError("invalid number '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("invalid integer '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return parts;
}

// Grid points such as 0.05 + 2 * 0.05 are rounded to 15 significant digits
// so that they print as typed.
double tidy(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return parse_real(buf);
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& nc : kCommands) {
    if (nc.command == c) return nc.name;
  }
  return "unknown";
}

std::optional<Command> command_from_name(std::string_view name) {
  for (const auto& nc : kCommands) {
    if (name == nc.name) return nc.command;
  }
  return std::nullopt;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& nc : kCommands) v.emplace_back(nc.name);
    return v;
  }();
  return names;
}

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) throw ParseError("empty grid");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ParseError("grid must read start:step:stop");
    const double start = parse_real(parts[0]);
    const double step = parse_real(parts[1]);
    const double stop = parse_real(parts[2]);
    if (!(step > 0.0) || stop < start) throw ParseError("grid needs step > 0 and stop >= start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000) throw ParseError("grid has too many points");
    std::vector<double> grid;
    for (long i = 0; i < count; ++i) grid.push_back(tidy(start + static_cast<double>(i) * step));
    return grid;
  }
  std::vector<double> grid;
  for (const auto part : split(text, ',')) grid.push_back(parse_real(part));
  return grid;
}

std::vector<int> parse_int_range(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer range");
  if (const auto pos = text.find(".."); pos != std::string::npos) {
    const int lo = parse_int(std::string_view(text).substr(0, pos));
    const int hi = parse_int(std::string_view(text).substr(pos + 2));
    if (hi < lo || hi - lo > 1000) throw ParseError("invalid integer range '" + text + "'");
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::vector<int> out;
  for (const auto part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv,
                                            std::string* help_text) {
  // Bare key=value tokens become --key value.
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    const std::string token = argv[i];
    const auto eq = token.find('=');
    if (!token.starts_with("-") && eq != std::string::npos && eq > 0) {
      args.push_back("--" + token.substr(0, eq));
      args.push_back(token.substr(eq + 1));
    } else {
      args.push_back(token);
    }
  }

  CLI::App app{"Magnetic Neumann spectra outside the unit disk and star-shaped domains", "magspec"};
  app.set_help_flag("-h,--help", "Print this help message and exit");
  std::string command;
  std::string m_text, b_text, grid_text, format_text = "csv";
  RunConfig config;
  double p = 0.0, R = 0.0;
  app.add_option("command", command, "Report to produce")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--m", m_text, "Angular mode: integer, list a,b,c or range lo..hi");
  app.add_option("--b", b_text, "Field strength: real, list or start:step:stop");
  app.add_option("--grid", grid_text, "Field grid start:step:stop (alias of --b)");
  auto* p_opt = app.add_option("--p", p, "Moment exponent p > 2");
  auto* r_opt = app.add_option("--R", R, "Disk radius R > 0");
  app.add_option("--domain", config.domain, "Domain file with Fourier coefficients");
  app.add_option("--out", config.out, "Output path (default: standard output)");
  app.add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    if (help_text != nullptr) *help_text = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  config.command = *command_from_name(command);
  config.format = format_text == "json" ? Format::Json : Format::Csv;
  if (!m_text.empty()) config.m = parse_int_range(m_text);
  if (!b_text.empty() && !grid_text.empty()) throw ParseError("give either --b or --grid, not both");
  if (!b_text.empty()) config.b = parse_grid(b_text);
  if (!grid_text.empty()) config.b = parse_grid(grid_text);
  if (p_opt->count() > 0) config.p = p;
  if (r_opt->count() > 0) config.R = R;
  return config;
}

}  // namespace magspec::cli
