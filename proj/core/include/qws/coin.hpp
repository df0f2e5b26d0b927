#pragma once

#include <utility>

#include "qws/common.hpp"

namespace qws {

/// A U(2) coin driving one step of the walk. Entries satisfy
/// |a|^2+|b|^2 = |c|^2+|d|^2 = 1, a*conj(b)+c*conj(d) = 0,
/// c = -det*conj(b), d = det*conj(a) (det = ad-bc), all within
/// unitarity_tol. Construct through make_coin(); the fields are
/// plain values so coins copy and share freely.
struct Coin {
    complexd a, b, c, d;
};

/// Normalized two-component initial state (alpha, beta).
struct QubitState {
    complexd alpha, beta;
};

/// Parameters of the rescaled-position limit law: r = |a| in (0,1) and
/// the drift coefficient c in [-1/r, 1/r].
struct LimitParams {
    double r;
    double c;
};

/// Two-component amplitude; `left` moves one site left, `right` one right.
struct Spinor {
    complexd left{}, right{};
};

/// Dense 2x2 complex matrix (row major).
struct Mat2 {
    complexd m00, m01, m10, m11;

    Spinor apply(const Spinor& v) const {
        return {m00 * v.left + m01 * v.right, m10 * v.left + m11 * v.right};
    }
};

/// Validates the unitarity identities and returns the coin.
/// Throws std::invalid_argument naming the first violated identity.
Coin make_coin(complexd a, complexd b, complexd c, complexd d);

Coin hadamard_coin();

/// Validates |alpha|^2+|beta|^2 = 1 (within unitarity_tol).
QubitState make_state(complexd alpha, complexd beta);

/// U = P + Q with P carrying the upper row (left move) and Q the lower
/// row (right move). Entries are copied bit-exactly.
std::pair<Mat2, Mat2> split(const Coin& coin);

/// Weak-limit parameters r = |a| and
/// c = |alpha|^2 - |beta|^2 + (a alpha conj(b beta) + conj(a alpha) b beta) / |a|^2.
/// Requires abcd != 0 (every entry nonzero in modulus beyond unitarity_tol);
/// throws std::domain_error otherwise.
///
/// Sign convention: the limit density of X_n/n is (1 - c x) k(x:r), which is
/// the measure mu(r, -c) in the (1 + c x) k(x:r) parametrization used by the
/// density/moment/transform modules.
LimitParams limit_params(const Coin& coin, const QubitState& state);

}  // namespace qws
