#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "quotsing/catalog.hpp"
#include "quotsing/error.hpp"
#include "quotsing/verify.hpp"
#include "support.hpp"

using namespace quotsing;
using testing_support::cyclic;

namespace {

const CatalogEntry* find(const Catalog& c, const std::string& label) {
  for (const auto& e : c.entries) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

Catalog sweep(int n_max, std::int64_t order_max, unsigned threads = 0) {
  CatalogOptions options;
  options.n_max = n_max;
  options.order_max = order_max;
  options.threads = threads;
  return catalog(options);
}

}  // namespace

TEST_CASE("small sweeps") {
  const auto c32 = sweep(3, 2);
  const auto* veronese = find(c32, "1/2(1,1,1)");
  REQUIRE(veronese != nullptr);
  CHECK(veronese->report.gldim == GldimVerdict::finite(3));

  const auto c42 = sweep(4, 2);
  const auto* four = find(c42, "1/2(1,1,1,1)");
  REQUIRE(four != nullptr);
  CHECK(four->report.is_gorenstein_ring == Applicable<bool>::of(true));

  const auto c33 = sweep(3, 3);
  const auto* cube = find(c33, "1/3(1,1,1)");
  REQUIRE(cube != nullptr);
  CHECK(cube->report.is_small);
  CHECK(cube->report.omega_order_direct == Applicable<std::int64_t>::of(1));
  CHECK(cube->report.is_gorenstein_ring == Applicable<bool>::of(true));
}

TEST_CASE("cyclic normal form") {
  CHECK(cyclic_normal_form(cyclic(5, {2, 1, 0})) == cyclic_normal_form(cyclic(5, {0, 1, 2})));
  CHECK(cyclic_normal_form(cyclic(5, {1, 2, 3})) == cyclic_normal_form(cyclic(5, {2, 4, 1})));
  CHECK(cyclic_normal_form(cyclic(7, {1, 2, 4})).label() == "1/7(1,2,4)");
  CHECK(cyclic_normal_form(cyclic(4, {2, 2, 2})) == cyclic(2, {1, 1, 1}));
  CHECK_FALSE(cyclic_normal_form(cyclic(5, {1, 1, 2})) == cyclic_normal_form(cyclic(5, {1, 1, 1})));
}

TEST_CASE("catalog entries are distinct normal forms in sorted order") {
  const auto c = sweep(4, 6);
  std::set<std::string> labels;
  for (const auto& e : c.entries) {
    CHECK(cyclic_normal_form(e.action) == e.action);
    CHECK(e.label == e.action.label());
    labels.insert(e.label);
  }
  CHECK(labels.size() == c.entries.size());
  CHECK(c.summary.total == c.entries.size());
  CHECK(std::is_sorted(c.entries.begin(), c.entries.end(), [](const auto& a, const auto& b) {
    return a.action.dimension() < b.action.dimension();
  }));
}

TEST_CASE("property: normal form is invariant under permutation and unit rescaling") {
  testing_support::ActionGenerator gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.pick(1, 5);
    const std::int64_t r = gen.pick<std::int64_t>(2, 12);
    std::vector<std::int64_t> a(n);
    for (auto& x : a) x = gen.pick<std::int64_t>(0, r - 1);
    if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) continue;
    std::int64_t u = 1;
    do {
      u = gen.pick<std::int64_t>(1, r - 1);
    } while (std::gcd(u, r) != 1);
    auto b = a;
    std::shuffle(b.begin(), b.end(), gen.rng());
    for (auto& x : b) x = (x * u) % r;
    CAPTURE(r);
    CHECK(cyclic_normal_form(cyclic(r, a)) == cyclic_normal_form(cyclic(r, b)));
  }
}

TEST_CASE("group keys identify the same group") {
  const auto one = validate(3, {Generator{2, {1, 1, 0}}, Generator{2, {0, 1, 1}}});
  const auto other = validate(3, {Generator{2, {1, 0, 1}}, Generator{2, {1, 1, 0}}});
  CHECK(group_key(one, 2) == group_key(other, 2));
  CHECK(group_key(cyclic(5, {1, 2, 3}), 5) == group_key(cyclic(5, {2, 4, 1}), 5));
  CHECK_FALSE(group_key(cyclic(5, {1, 1, 2}), 5) == group_key(cyclic(5, {1, 1, 1}), 5));
}

TEST_CASE("multi-generator sweep") {
  CatalogOptions options;
  options.n_max = 3;
  options.order_max = 4;
  options.multi_gen = true;
  const auto c = catalog(options);
  const auto cyclic_only = sweep(3, 4);
  CHECK(c.entries.size() > cyclic_only.entries.size());
  bool saw_two = false;
  for (const auto& e : c.entries) saw_two = saw_two || e.action.generator_count() == 2;
  CHECK(saw_two);

  options.cap = 10;
  CHECK_THROWS_AS(catalog(options), Error);
}

TEST_CASE("results do not depend on thread count") {
  const auto serial = to_json(sweep(4, 8, 1)).dump();
  CHECK(serial == to_json(sweep(4, 8, 3)).dump());
  CHECK(serial == to_json(sweep(4, 8, 0)).dump());
}

TEST_CASE("verify passes by default and catches an injected fault") {
  VerifyOptions options;
  options.n_max = 4;
  options.order_max = 8;
  for (const auto& s : verify(options)) {
    CAPTURE(s.name);
    CHECK(s.passed());
    CHECK(s.checks > 0);
  }

  options.suites = {"semigroup"};
  options.inject_fault = true;
  const auto faulty = verify(options);
  REQUIRE(faulty.size() == 1);
  CHECK_FALSE(faulty[0].passed());

  options.suites = {"weston"};
  const auto weston_only = verify(options);
  REQUIRE(weston_only.size() == 1);
  CHECK(weston_only[0].name == "weston");
  CHECK(weston_only[0].passed());

  options.suites = {"nope"};
  CHECK_THROWS_AS(verify(options), Error);
}

TEST_CASE("verify helpers") {
  CHECK(least_multiplier_scan(4, 6) == 3);
  CHECK(least_multiplier_scan(0, 6) == 1);
  CHECK(order_by_iteration(Character({2, 1}, {4, 3})) == 6);
  const auto action = cyclic(3, {1, 2});
  CHECK(regenerates(hilbert_basis(action).atoms, action, 6));
  auto atoms = hilbert_basis(action).atoms;
  atoms.pop_back();
  Monomial witness;
  CHECK_FALSE(regenerates(atoms, action, 6, &witness));
  CHECK(witness.degree() > 0);
}
