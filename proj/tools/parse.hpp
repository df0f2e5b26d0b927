#pragma once

#include <string>
#include <vector>

#include "qws/coin.hpp"

namespace qws::cli {

/// "re:im" -> complex value. Both parts are required.
complexd parse_complex(const std::string& token);

/// Comma-separated list of doubles.
std::vector<double> parse_double_list(const std::string& text);

/// "hadamard" or four comma-separated "re:im" entries a,b,c,d. The coin
/// is validated, never adjusted.
Coin parse_coin(const std::string& text);

/// Two comma-separated "re:im" entries alpha,beta. The vector is
/// normalized (command-line literals rarely carry 12 exact digits);
/// near-zero vectors are rejected.
QubitState parse_state(const std::string& text);

}  // namespace qws::cli
