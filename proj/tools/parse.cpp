#include "parse.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qws::cli {

namespace {

double parse_double(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty numeric token");
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size())
        throw std::invalid_argument("cannot parse number '" + token + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

complexd parse_complex(const std::string& token) {
    const std::vector<std::string> parts = split(token, ':');
    if (parts.size() != 2)
        throw std::invalid_argument("complex value '" + token + "' must look like re:im");
    return {parse_double(parts[0]), parse_double(parts[1])};
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    for (const std::string& part : split(text, ',')) values.push_back(parse_double(part));
    return values;
}

Coin parse_coin(const std::string& text) {
    if (text == "hadamard") return hadamard_coin();
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 4)
        throw std::invalid_argument("coin must be 'hadamard' or four re:im entries a,b,c,d");
    return make_coin(parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2]),
                     parse_complex(parts[3]));
}

QubitState parse_state(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 2) throw std::invalid_argument("state must be two re:im entries alpha,beta");
    const complexd alpha = parse_complex(parts[0]);
    const complexd beta = parse_complex(parts[1]);
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (norm < 1e-6) throw std::invalid_argument("state vector is numerically zero");
    return make_state(alpha / norm, beta / norm);
}

}  // namespace qws::cli
