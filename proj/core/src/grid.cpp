#include "qws/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace qws {

std::vector<double> linspace(double a, double b, int count) {
    if (count < 2) throw std::invalid_argument("linspace needs count >= 2");
    std::vector<double> out(static_cast<std::size_t>(count));
    const double h = (b - a) / (count - 1);
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = a + h * i;
    out.back() = b;
    return out;
}

std::vector<double> interior_grid(double lo, double hi, int count,
                                  std::span<const double> exclusions, double zone) {
    std::vector<double> grid = linspace(lo, hi, count);
    for (double& t : grid) {
        for (double e : exclusions) {
            if (std::abs(t - e) < zone) t = (t < e) ? e - zone : e + zone;
        }
    }
    return grid;
}

}  // namespace qws
