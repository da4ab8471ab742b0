#include "quotsing/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "quotsing/error.hpp"
#include "quotsing/orders.hpp"
#include "quotsing/weston.hpp"

namespace quotsing {

namespace {

using Exps = std::vector<std::uint32_t>;

void compositions(std::size_t n, std::uint64_t degree, const std::function<void(const Exps&)>& visit) {
  Exps a(n, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == n) {
      a[i] = static_cast<std::uint32_t>(left);
      visit(a);
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      a[i] = static_cast<std::uint32_t>(v);
      rec(i + 1, left - v);
    }
  };
  rec(0, degree);
}

Character weight_of(const Exps& a, const DiagonalAction& action) {
  std::vector<std::int64_t> wide(a.begin(), a.end());
  return weight(wide, action);
}

bool below(const Exps& h, const Exps& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (h[i] > a[i]) return false;
  }
  return true;
}

bool antichain(const std::vector<Monomial>& atoms) {
  for (std::size_t x = 0; x < atoms.size(); ++x) {
    for (std::size_t y = 0; y < atoms.size(); ++y) {
      if (x != y && below(atoms[x].exps, atoms[y].exps)) return false;
    }
  }
  return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  unsigned __int128 b = 1;
  for (std::uint64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return static_cast<std::uint64_t>(b);
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok && result_.failures.size() < 20) result_.failures.push_back(describe());
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

SuiteResult weston_suite(const VerifyOptions& options) {
  Suite suite("weston");
  const int n_top = std::min(options.n_max, 4);
  for (int n = 2; n <= n_top; ++n) {
    for (std::int64_t r = 2; r <= options.order_max; ++r) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(n), 1);
      while (true) {
        const auto action = validate(n, {Generator{r, a}});
        const auto data = weston_data(action);
        const auto& g = action.generators().front();
        std::int64_t weighted = 0;
        for (std::size_t i = 0; i < a.size(); ++i) weighted += data.d[0][i] * g.exponents[i];
        suite.check(data.m[0] == least_multiplier_scan(weighted, g.order), [&] {
          return action.label() + ": closed-form m differs from linear scan";
        });

        auto reversed = g.exponents;
        std::reverse(reversed.begin(), reversed.end());
        suite.check(omega_order_weston(validate(n, {Generator{g.order, reversed}})) == data.order,
                    [&] { return action.label() + ": Weston order changes under permutation"; });

        if (is_small(action, options.cap)) {
          const auto direct = omega_order_direct(action, options.cap);
          suite.check(direct == data.order, [&] {
            return action.label() + ": Weston " + std::to_string(data.order) + " vs direct " +
                   std::to_string(direct);
          });
          suite.check(direct == order_by_iteration(det_character(action)),
                      [&] { return action.label() + ": direct order differs from iteration"; });
        }

        std::size_t i = 0;
        while (i < a.size() && a[i] == r - 1) a[i++] = 1;
        if (i == a.size()) break;
        ++a[i];
      }
    }
  }
  return suite.take();
}

SuiteResult semigroup_suite(const Catalog& cat, const VerifyOptions& options) {
  Suite suite("semigroup");
  const SearchLimits limits{options.cap, SearchLimits{}.candidate_cap};
  for (const auto& e : cat.entries) {
    if (e.action.dimension() > 4 || e.report.group_order > 8) continue;
    const auto& action = e.action;
    auto atoms = hilbert_basis(action, limits).atoms;
    if (options.inject_fault && !atoms.empty()) atoms.pop_back();
    const auto order = e.report.group_order;

    Monomial witness;
    suite.check(regenerates(atoms, action, 2 * order, &witness), [&] {
      return e.label + ": " + witness.to_string() + " is not a sum of atoms";
    });
    suite.check(antichain(atoms), [&] { return e.label + ": atoms are not an antichain"; });
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      auto rest = atoms;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      suite.check(!regenerates(rest, action, order), [&] {
        return e.label + ": atom " + atoms[k].to_string() + " is redundant";
      });
    }

    const auto unit = module_generators(action, Character::zero(action.orders()), limits).atoms;
    suite.check(unit.size() == 1 && unit.front().degree() == 0,
                [&] { return e.label + ": M_0 is not generated by 1"; });
    const auto omega = module_generators(action, det_character(action), limits).atoms;
    suite.check(antichain(omega), [&] { return e.label + ": omega generators not an antichain"; });
    suite.check(std::all_of(omega.begin(), omega.end(),
                            [&](const Monomial& m) { return weight(m, action) == det_character(action); }),
                [&] { return e.label + ": omega generator of the wrong weight"; });
  }
  return suite.take();
}

SuiteResult counting_suite(const Catalog& cat, const VerifyOptions& options) {
  Suite suite("counting");
  for (const auto& e : cat.entries) {
    if (e.action.dimension() > 4) continue;
    const auto n = static_cast<std::uint64_t>(e.action.dimension());
    for (std::uint32_t d = 0; d <= 10; ++d) {
      const auto dp = hilbert_counts(e.action, d, options.cap);
      const auto brute = brute_force_counts(e.action, d);
      suite.check(dp == brute, [&] {
        return e.label + ": DP counts differ from enumeration at degree " + std::to_string(d);
      });
      std::uint64_t total = 0;
      for (auto c : dp) total += c;
      suite.check(total == binomial(n - 1 + d, d), [&] {
        return e.label + ": counts at degree " + std::to_string(d) + " do not partition monomials";
      });
    }
  }
  return suite.take();
}

SuiteResult gorenstein_order_suite(const Catalog& cat, const VerifyOptions& options) {
  Suite suite("gorenstein-order");
  for (const auto& e : cat.entries) {
    if (!e.report.is_small) continue;
    const auto delta = det_character(e.action);
    const bool direct = is_gorenstein_order_r_omega(e.action, options.cap);
    const auto omega = r_plus_omega(delta);
    const bool columns = is_gorenstein_order_splitting(omega, delta);
    suite.check(direct == columns, [&] { return e.label + ": Gorenstein-order paths disagree"; });
    suite.check(is_steady(omega) == (delta + delta).is_zero(),
                [&] { return e.label + ": steadiness of R+omega differs from 2 delta = 0"; });
    suite.check(e.report.is_gorenstein_order.value == direct,
                [&] { return e.label + ": report disagrees with the criterion"; });
  }
  return suite.take();
}

SuiteResult corollary_suite(const Catalog& cat, const VerifyOptions& options) {
  Suite suite("corollary");
  for (const auto& e : cat.entries) {
    if (!e.report.is_small) continue;
    if (det_character(e.action).order() == 2) {
      suite.check(e.report.group_order % 2 == 0,
                  [&] { return e.label + ": [omega] of order 2 with |G| odd"; });
    }
    suite.check(even_order_check(e.action, options.cap),
                [&] { return e.label + ": even-order check failed"; });
  }
  return suite.take();
}

SuiteResult gldim_suite(const Catalog& cat, const VerifyOptions&) {
  Suite suite("gldim");
  using Kind = GldimVerdict::Kind;
  for (const auto& e : cat.entries) {
    const auto& verdict = e.report.gldim;
    if (!e.report.is_small) {
      suite.check(verdict == GldimVerdict::not_applicable(Reason::NotSmall),
                  [&] { return e.label + ": verdict given for a non-small action"; });
      continue;
    }
    if (det_character(e.action).order() != 2) {
      suite.check(verdict == GldimVerdict::not_applicable(Reason::OmegaOrderNotTwo),
                  [&] { return e.label + ": verdict given without [omega] of order 2"; });
      continue;
    }
    suite.check((verdict.kind == Kind::Finite) == (e.report.group_order == 2),
                [&] { return e.label + ": finite gldim does not match |G| = 2"; });
    if (verdict.kind == Kind::Finite) {
      suite.check(verdict.j % 2 == 1 && verdict.j >= 3 && verdict.j <= e.action.dimension(),
                  [&] { return e.label + ": j = " + std::to_string(verdict.j) + " out of range"; });
      const auto group = enumerate_group(e.action);
      const auto& sigma = group.elements.back().coords;
      const auto negated = std::count_if(sigma.begin(), sigma.end(), [](auto c) { return c != 0; });
      suite.check(negated == verdict.j, [&] { return e.label + ": j miscounted"; });
    }
  }
  return suite.take();
}

SuiteResult characters_suite(const Catalog& cat, const VerifyOptions& options) {
  Suite suite("characters");
  for (const auto& e : cat.entries) {
    const auto all = CharacterSet::make(realized_characters(e.action, options.cap));
    const auto delta = det_character(e.action);
    suite.check(all.size() == e.report.group_order,
                [&] { return e.label + ": character group size differs from |G|"; });
    suite.check(is_steady(all), [&] { return e.label + ": full character set not steady"; });
    suite.check(is_generator(all), [&] { return e.label + ": full character set not a generator"; });
    suite.check(is_gorenstein_order_splitting(all, delta),
                [&] { return e.label + ": full character set fails the Gorenstein-order test"; });
  }
  return suite.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weston",    "semigroup", "counting", "gorenstein-order",
                                              "corollary", "gldim",     "characters"};
  return names;
}

std::int64_t least_multiplier_scan(std::int64_t value, std::int64_t modulus) {
  for (std::int64_t m = 1; m <= modulus; ++m) {
    if ((m * value) % modulus == 0) return m;
  }
  return modulus;
}

std::int64_t order_by_iteration(const Character& c) {
  Character acc = c;
  std::int64_t m = 1;
  while (!acc.is_zero()) {
    acc = acc + c;
    ++m;
  }
  return m;
}

std::vector<std::uint64_t> brute_force_counts(const DiagonalAction& action, std::uint32_t degree) {
  const CharacterIndexer indexer(action.orders());
  std::vector<std::uint64_t> counts(indexer.size(), 0);
  compositions(static_cast<std::size_t>(action.dimension()), degree,
               [&](const Exps& a) { ++counts[indexer.index(weight_of(a, action))]; });
  return counts;
}

bool regenerates(const std::vector<Monomial>& atoms, const DiagonalAction& action,
                 std::uint64_t max_degree, Monomial* witness) {
  const auto n = static_cast<std::size_t>(action.dimension());
  std::set<Exps> reachable{Exps(n, 0)};
  bool ok = true;
  for (std::uint64_t d = 1; d <= max_degree && ok; ++d) {
    compositions(n, d, [&](const Exps& a) {
      if (!ok || !weight_of(a, action).is_zero()) return;
      for (const auto& h : atoms) {
        if (!below(h.exps, a)) continue;
        Exps rest(n);
        for (std::size_t i = 0; i < n; ++i) rest[i] = a[i] - h.exps[i];
        if (reachable.count(rest)) {
          reachable.insert(a);
          return;
        }
      }
      ok = false;
      if (witness) *witness = Monomial{a};
    });
  }
  return ok;
}

std::vector<SuiteResult> verify(const VerifyOptions& options) {
  for (const auto& name : options.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw Error(ErrorCode::Validation, "unknown suite '" + name + "'");
    }
  }
  const auto wanted = [&](const std::string& name) {
    return options.suites.empty() ||
           std::find(options.suites.begin(), options.suites.end(), name) != options.suites.end();
  };

  std::vector<SuiteResult> results;
  if (wanted("weston")) results.push_back(weston_suite(options));

  const bool needs_catalog = std::any_of(suite_names().begin() + 1, suite_names().end(), wanted);
  if (!needs_catalog) return results;
  CatalogOptions catalog_options;
  catalog_options.n_min = std::min(3, options.n_max);
  catalog_options.n_max = options.n_max;
  catalog_options.order_max = options.order_max;
  catalog_options.cap = options.cap;
  catalog_options.threads = options.threads;
  const auto cat = catalog(catalog_options);

  if (wanted("semigroup")) results.push_back(semigroup_suite(cat, options));
  if (wanted("counting")) results.push_back(counting_suite(cat, options));
  if (wanted("gorenstein-order")) results.push_back(gorenstein_order_suite(cat, options));
  if (wanted("corollary")) results.push_back(corollary_suite(cat, options));
  if (wanted("gldim")) results.push_back(gldim_suite(cat, options));
  if (wanted("characters")) results.push_back(characters_suite(cat, options));
  return results;
}

}  // namespace quotsing
