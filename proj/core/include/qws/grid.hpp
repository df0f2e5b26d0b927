#pragma once

#include <span>
#include <vector>

namespace qws {

/// count evenly spaced points from a to b inclusive (count >= 2).
std::vector<double> linspace(double a, double b, int count);

/// Evenly spaced points with any point landing within `zone` of an
/// excluded abscissa nudged just outside the zone (outward from the
/// exclusion). Used to keep comparison grids away from density
/// singularities and support endpoints.
std::vector<double> interior_grid(double lo, double hi, int count,
                                  std::span<const double> exclusions, double zone);

}  // namespace qws
