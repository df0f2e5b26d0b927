#include "qws/format.hpp"

#include <cmath>
#include <cstdio>

namespace qws {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[40];
    if (std::abs(v) < 1e-4)
        std::snprintf(buf, sizeof(buf), "%.11e", v);
    else
        std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace qws
