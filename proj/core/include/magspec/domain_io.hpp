#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "magspec/geometry.hpp"

namespace magspec {

// Domain files are line oriented:
//
//   # comment
//   a0 = 1.0
//   a3 = 0.1      cosine coefficient of 3 theta
//   b1 = -0.02    sine coefficient of theta
//
// Every key appears at most once and a0 is required.

geometry::StarShapedDomain parse_domain(std::string_view text);
geometry::StarShapedDomain parse_domain_file(const std::filesystem::path& path);

/// Text that parses back to bit-identical coefficients.
std::string emit_domain(const geometry::StarShapedDomain& d);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

}  // namespace magspec
