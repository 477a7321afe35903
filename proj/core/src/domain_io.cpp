#include "magspec/domain_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>
#include <vector>

#include "magspec/errors.hpp"

namespace magspec {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view text, int line) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    fail(line, "invalid number '" + std::string(text) + "'");
  }
  return v;
}

// "a0" -> ('a', 0), "b12" -> ('b', 12)
std::pair<char, int> parse_key(std::string_view key, int line) {
  if (key.size() < 2 || (key[0] != 'a' && key[0] != 'b')) {
    fail(line, "unknown key '" + std::string(key) + "'");
  }
  const std::string_view digits = key.substr(1);
  if (digits.size() > 1 && digits[0] == '0') fail(line, "unknown key '" + std::string(key) + "'");
  int index = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || index < 0) {
    fail(line, "unknown key '" + std::string(key) + "'");
  }
  if (key[0] == 'b' && index == 0) fail(line, "unknown key 'b0'");
  if (index > 4096) fail(line, "harmonic index too large");
  return {key[0], index};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

geometry::StarShapedDomain parse_domain(std::string_view text) {
  std::map<std::pair<char, int>, double> values;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    const auto key = parse_key(trim(line.substr(0, eq)), line_no);
    const double value = parse_number(trim(line.substr(eq + 1)), line_no);
    if (!values.emplace(key, value).second) fail(line_no, "duplicate key");
  }

  const auto a0 = values.find({'a', 0});
  if (a0 == values.end()) throw ParseError("missing required key a0");
  int order = 0;
  for (const auto& [key, v] : values) order = std::max(order, key.second);
  std::vector<double> cos_coeffs(static_cast<std::size_t>(order), 0.0);
  std::vector<double> sin_coeffs(static_cast<std::size_t>(order), 0.0);
  for (const auto& [key, v] : values) {
    if (key.second == 0) continue;
    auto& target = key.first == 'a' ? cos_coeffs : sin_coeffs;
    target[static_cast<std::size_t>(key.second - 1)] = v;
  }
  return {a0->second, std::move(cos_coeffs), std::move(sin_coeffs)};
}

geometry::StarShapedDomain parse_domain_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open domain file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_domain(buf.str());
}

std::string emit_domain(const geometry::StarShapedDomain& d) {
  std::string out = "a0 = " + format_double(d.a0()) + "\n";
  for (int j = 1; j <= d.order(); ++j) {
    const auto i = static_cast<std::size_t>(j - 1);
    out += "a" + std::to_string(j) + " = " + format_double(d.cos_coeffs()[i]) + "\n";
    out += "b" + std::to_string(j) + " = " + format_double(d.sin_coeffs()[i]) + "\n";
  }
  return out;
}

}  // namespace magspec
