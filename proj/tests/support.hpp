#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "quotsing/group.hpp"
#include "quotsing/semigroup.hpp"

namespace testing_support {

inline oracle::RawAction raw(const quotsing::DiagonalAction& action) {
  oracle::RawAction g;
  g.n = action.dimension();
  for (const auto& gen : action.generators()) {
    g.orders.push_back(gen.order);
    g.exps.push_back(gen.exponents);
  }
  return g;
}

inline quotsing::DiagonalAction cyclic(std::int64_t r, std::vector<std::int64_t> a) {
  const int n = static_cast<int>(a.size());
  return quotsing::validate(n, {quotsing::Generator{r, std::move(a)}});
}

inline std::vector<std::vector<std::int64_t>> exps_of(const std::vector<quotsing::Monomial>& atoms) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& m : atoms) out.emplace_back(m.exps.begin(), m.exps.end());
  return out;
}

// Random diagonal actions: 1 to max_gens generators, orders in [2, max_order].
class ActionGenerator {
 public:
  explicit ActionGenerator(std::uint32_t seed) : rng_(seed) {}

  quotsing::DiagonalAction next(int max_n, int max_gens, std::int64_t max_order) {
    while (true) {
      const int n = pick(1, max_n);
      const int t = pick(1, max_gens);
      std::vector<quotsing::Generator> gens;
      bool trivial = false;
      for (int j = 0; j < t; ++j) {
        quotsing::Generator g{pick<std::int64_t>(2, max_order), {}};
        for (int i = 0; i < n; ++i) g.exponents.push_back(pick<std::int64_t>(0, g.order - 1));
        trivial = trivial || std::all_of(g.exponents.begin(), g.exponents.end(),
                                         [](auto a) { return a == 0; });
        gens.push_back(std::move(g));
      }
      if (!trivial) return quotsing::validate(n, std::move(gens));
    }
  }

  template <class T>
  T pick(T lo, T hi) {
    return std::uniform_int_distribution<T>(lo, hi)(rng_);
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace testing_support
