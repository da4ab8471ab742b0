#include "quotsing/weston.hpp"

#include <numeric>

#include "quotsing/error.hpp"

namespace quotsing {

WestonData weston_data(const DiagonalAction& action) {
  if (!action.all_exponents_nonzero()) {
    throw Error(ErrorCode::HypothesisViolation,
                "Weston's formula needs 1 <= a_ij < o_j; " + action.label() +
                    " has a zero exponent");
  }
  WestonData data;
  for (const auto& g : action.generators()) {
    const std::size_t n = g.exponents.size();
    std::vector<std::int64_t> d(n);
    std::int64_t weighted = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t hat = g.order;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) hat = std::gcd(hat, g.exponents[k]);
      }
      d[i] = hat;
      weighted = (weighted + (hat % g.order) * g.exponents[i]) % g.order;
    }
    const std::int64_t m = g.order / std::gcd(g.order, weighted);
    data.d.push_back(std::move(d));
    data.m.push_back(m);
    data.order = std::lcm(data.order, m);
  }
  return data;
}

std::int64_t omega_order_weston(const DiagonalAction& action) { return weston_data(action).order; }

CrossCheck cross_check(const DiagonalAction& action, std::size_t cap) {
  CrossCheck result;
  if (action.all_exponents_nonzero()) result.weston = omega_order_weston(action);
  if (is_small(action, cap)) result.direct = det_character(action).order();
  if (result.weston && result.direct) result.agree = *result.weston == *result.direct;
  return result;
}

}  // namespace quotsing
