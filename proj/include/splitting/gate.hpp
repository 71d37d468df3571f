#pragma once

#include "splitting/method.hpp"
#include "splitting/sigma.hpp"

namespace splitting {

// Commutator-gate methods approximate exp([A1, A2]) and only carry meaning
// for two operators. Their time advance is sigma^2; sigma^1 must vanish.

/// 34 units, fourth order, sigma^2 = 24.
Method commutator_method_4();

/// The fourth-order gate followed by itself with all coefficients negated.
/// Odd-order terms cancel while sigma^2 adds: fifth order, sigma^2 = 48.
Method commutator_method_5();

/// order_of against the commutator target. Negative sigma^2 is reported
/// through reversed_direction, not rejected.
OrderReport verify_commutator(const Method& m);

} // namespace splitting
