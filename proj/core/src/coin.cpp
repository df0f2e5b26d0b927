#include "qws/coin.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qws {

namespace {

[[noreturn]] void reject(const char* what, double magnitude) {
    std::ostringstream msg;
    msg << what << " (violation " << magnitude << ", tolerance " << unitarity_tol << ")";
    throw std::invalid_argument(msg.str());
}

}  // namespace

Coin make_coin(complexd a, complexd b, complexd c, complexd d) {
    const double row1 = std::norm(a) + std::norm(b) - 1.0;
    if (std::abs(row1) > unitarity_tol) reject("top row is not normalized: |a|^2+|b|^2 != 1", std::abs(row1));

    const double row2 = std::norm(c) + std::norm(d) - 1.0;
    if (std::abs(row2) > unitarity_tol) reject("bottom row is not normalized: |c|^2+|d|^2 != 1", std::abs(row2));

    const complexd ortho = a * std::conj(b) + c * std::conj(d);
    if (std::abs(ortho) > unitarity_tol)
        reject("row orthogonality violated: a*conj(b)+c*conj(d) != 0", std::abs(ortho));

    const complexd det = a * d - b * c;
    const double det_c = std::abs(c + det * std::conj(b));
    if (det_c > unitarity_tol) reject("determinant identity violated: c != -det*conj(b)", det_c);
    const double det_d = std::abs(d - det * std::conj(a));
    if (det_d > unitarity_tol) reject("determinant identity violated: d != det*conj(a)", det_d);

    return Coin{a, b, c, d};
}

Coin hadamard_coin() {
    const double h = 1.0 / std::sqrt(2.0);
    return make_coin(h, h, h, -h);
}

QubitState make_state(complexd alpha, complexd beta) {
    const double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1.0) > unitarity_tol) {
        std::ostringstream msg;
        msg << "initial state is not normalized: |alpha|^2+|beta|^2 = " << norm;
        throw std::invalid_argument(msg.str());
    }
    return QubitState{alpha, beta};
}

std::pair<Mat2, Mat2> split(const Coin& coin) {
    const Mat2 p{coin.a, coin.b, 0.0, 0.0};
    const Mat2 q{0.0, 0.0, coin.c, coin.d};
    return {p, q};
}

LimitParams limit_params(const Coin& coin, const QubitState& state) {
    for (const complexd& entry : {coin.a, coin.b, coin.c, coin.d}) {
        if (std::abs(entry) <= unitarity_tol)
            throw std::domain_error("limit law requires abcd != 0: a coin entry vanishes");
    }

    const double r = std::abs(coin.a);
    const complexd aa = coin.a * state.alpha;
    const complexd bb = coin.b * state.beta;
    const complexd cross = aa * std::conj(bb) + std::conj(aa) * bb;
    if (std::abs(cross.imag()) > unitarity_tol)
        throw std::domain_error("drift coefficient came out non-real");

    double c = std::norm(state.alpha) - std::norm(state.beta) + cross.real() / (r * r);
    const double bound = 1.0 / r;
    if (std::abs(c) > bound + 1e-9)
        throw std::domain_error("drift coefficient outside [-1/r, 1/r]");
    if (c > bound) c = bound;
    if (c < -bound) c = -bound;

    return LimitParams{r, c};
}

}  // namespace qws
