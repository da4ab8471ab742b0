#pragma once

// Weston's closed formula for the order of [omega] in Cl(R), valid for
// generators whose exponents are all nonzero.

#include <cstdint>
#include <optional>
#include <vector>

#include "quotsing/group.hpp"

namespace quotsing {

struct WestonData {
  // d[j][i] = gcd of the exponents of generator j other than a_ij, and o_j.
  std::vector<std::vector<std::int64_t>> d;
  // m[j]: least m >= 1 with m * sum_i d[j][i] * a_ij == 0 mod o_j.
  std::vector<std::int64_t> m;
  std::int64_t order = 1;  // lcm of the m[j]
};

// Throws Error(HypothesisViolation) if any exponent is zero.
WestonData weston_data(const DiagonalAction& action);

std::int64_t omega_order_weston(const DiagonalAction& action);

struct CrossCheck {
  std::optional<std::int64_t> weston;  // absent: some a_ij == 0
  std::optional<std::int64_t> direct;  // absent: action not small
  std::optional<bool> agree;           // present only when both ran
};

// Runs both order computations where their preconditions hold. A
// disagreement is reported, never resolved.
CrossCheck cross_check(const DiagonalAction& action, std::size_t cap = kDefaultCap);

}  // namespace quotsing
