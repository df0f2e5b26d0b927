#include "qws/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace qws {

namespace {

void check_r(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("measure parameter r must lie in (0,1)");
}

}  // namespace

void validate(const MeasureSpec& spec) {
    if (const auto* sym = std::get_if<Symmetric>(&spec)) {
        check_r(sym->r);
    } else if (const auto* asym = std::get_if<Asymmetric>(&spec)) {
        check_r(asym->r);
        if (std::abs(asym->c) * asym->r > 1.0 + 1e-12)
            throw std::invalid_argument("measure parameter c must lie in [-1/r, 1/r]");
    } else {
        const auto& gj = std::get<GeneralJacobi>(spec);
        if (gj.head_gammas.empty()) throw std::invalid_argument("general measure needs at least one head gamma");
        for (double p : gj.head_gammas)
            if (!(p > 0.0)) throw std::invalid_argument("head gammas must be positive");
        if (!(gj.tail_gamma > 0.0)) throw std::invalid_argument("tail gamma must be positive");
    }
}

}  // namespace qws
