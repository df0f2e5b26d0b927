#pragma once

#include <string>

namespace qws {

/// Deterministic numeric token: 12 significant digits, scientific
/// notation when 0 < |v| < 1e-4, "0" for zero, "nan"/"inf"/"-inf" for
/// non-finite values. Identical inputs produce byte-identical tokens on
/// every platform, which keeps emitted tables diffable.
std::string format_number(double v);

}  // namespace qws
