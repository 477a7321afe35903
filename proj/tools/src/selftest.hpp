#pragma once

#include "magspec/cli/report.hpp"

namespace magspec::cli {

/// Contiguous-relation residuals and derivative checks of the special
/// functions on a fixed pseudo-random grid.
Report specfun_selftest();

}  // namespace magspec::cli
