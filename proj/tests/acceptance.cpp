// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit status
// if any criterion fails. Reference values come from tests/oracles.hpp.

#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quotsing/catalog.hpp"
#include "quotsing/orders.hpp"
#include "quotsing/report.hpp"
#include "quotsing/semigroup.hpp"
#include "quotsing/weston.hpp"

using namespace quotsing;
using oracle::Vec;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

oracle::RawAction raw(const DiagonalAction& action) {
  oracle::RawAction g;
  g.n = action.dimension();
  for (const auto& gen : action.generators()) {
    g.orders.push_back(gen.order);
    g.exps.push_back(gen.exponents);
  }
  return g;
}

DiagonalAction cyclic(std::int64_t r, std::vector<std::int64_t> a) {
  const int n = static_cast<int>(a.size());
  return validate(n, {Generator{r, std::move(a)}});
}

std::vector<Vec> exps_of(const std::vector<Monomial>& ms) {
  std::vector<Vec> out;
  for (const auto& m : ms) out.emplace_back(m.exps.begin(), m.exps.end());
  return out;
}

std::vector<std::string> names_of(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

std::int64_t omega_order_oracle(const DiagonalAction& action) {
  const auto g = raw(action);
  return oracle::order_by_addition(oracle::weight(g, Vec(static_cast<std::size_t>(g.n), 1)), g.orders);
}

template <class T>
bool not_small(const Applicable<T>& a) {
  return !a.has_value() && a.reason == Reason::NotSmall;
}

const Catalog& default_catalog() {
  static const Catalog c = catalog(CatalogOptions{});
  return c;
}

Outcome veronese_three() {
  Outcome o;
  const auto r = analyze(cyclic(2, {1, 1, 1}));
  o.expect(r.is_small, "small");
  o.expect(r.is_gorenstein_ring == Applicable<bool>::of(false), "Gorenstein ring");
  o.expect(r.omega_order_direct == Applicable<std::int64_t>::of(2), "omega order (direct)");
  o.expect(r.omega_order_weston == Applicable<std::int64_t>::of(2), "omega order (Weston)");
  o.expect(r.omega_orders_agree == Applicable<bool>::of(true), "agree");
  o.expect(r.is_gorenstein_order == Applicable<bool>::of(true), "Gorenstein order");
  o.expect(r.steady == Applicable<bool>::of(true), "steady");
  o.expect(r.basic == Applicable<bool>::of(true), "basic");
  o.expect(r.gldim == GldimVerdict::finite(3), "gldim");
  const std::vector<std::string> quadrics{"x^2", "xy", "xz", "y^2", "yz", "z^2"};
  o.expect(r.invariant_atoms.has_value() && names_of(*r.invariant_atoms.value) == quadrics, "atoms");
  return o;
}

Outcome veronese_four() {
  Outcome o;
  const auto action = cyclic(2, {1, 1, 1, 1});
  const auto r = analyze(action);
  o.expect(r.delta.is_zero(), "delta = 0");
  o.expect(oracle::is_zero(oracle::weight(raw(action), Vec(4, 1))), "delta = 0 (oracle)");
  o.expect(r.is_gorenstein_ring == Applicable<bool>::of(true), "Gorenstein ring");
  o.expect(r.omega_order_direct == Applicable<std::int64_t>::of(1), "omega order");
  o.expect(r.even_order_check == Applicable<bool>::of(true), "even-order check");
  return o;
}

Outcome involution_family() {
  Outcome o;
  for (int j : {3, 5}) {
    for (int n = j; n <= 6; ++n) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
      std::vector<Vec> negated;
      for (int i = n - j; i < n; ++i) {
        a[static_cast<std::size_t>(i)] = 1;
        Vec unit(static_cast<std::size_t>(n), 0);
        unit[static_cast<std::size_t>(i)] = 1;
        negated.push_back(unit);
      }
      const auto action = cyclic(2, a);
      const auto r = analyze(action);
      const auto tag = action.label();
      o.expect(r.is_small && oracle::small(raw(action)), tag + " small");
      o.expect(r.omega_order_direct == Applicable<std::int64_t>::of(2) && omega_order_oracle(action) == 2,
               tag + " omega order");
      o.expect(r.gldim == GldimVerdict::finite(j), tag + " gldim");
      auto got = r.omega_generators.has_value() ? exps_of(*r.omega_generators.value) : std::vector<Vec>{};
      std::sort(got.begin(), got.end());
      std::sort(negated.begin(), negated.end());
      o.expect(got == negated, tag + " omega generators");
      o.expect(oracle::module_generators(raw(action), {1}, n) == negated, tag + " omega generators (oracle)");
    }
  }
  return o;
}

Outcome reflection() {
  Outcome o;
  const auto action = cyclic(2, {0, 1});
  const auto r = analyze(action);
  o.expect(!r.is_small && !oracle::small(raw(action)), "small = false");
  o.expect(not_small(r.is_gorenstein_ring), "Gorenstein ring");
  o.expect(not_small(r.omega_order_direct), "omega order (direct)");
  o.expect(not_small(r.omega_order_weston), "omega order (Weston)");
  o.expect(not_small(r.omega_orders_agree), "agree");
  o.expect(not_small(r.is_gorenstein_order), "Gorenstein order");
  o.expect(not_small(r.steady), "steady");
  o.expect(not_small(r.basic), "basic");
  o.expect(not_small(r.generator), "generator");
  o.expect(not_small(r.even_order_check), "even-order check");
  o.expect(not_small(r.omega_generators), "omega generators");
  o.expect(r.gldim == GldimVerdict::not_applicable(Reason::NotSmall), "gldim");
  return o;
}

Outcome weston_sweep() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    for (std::int64_t r = 2; r <= 12; ++r) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(n), 1);
      while (true) {
        const auto action = cyclic(r, a);
        if (oracle::small(raw(action))) {
          const auto tag = "1/" + std::to_string(r) + " " + action.label();
          try {
            const auto data = weston_data(action);
            o.expect(data.order == omega_order_oracle(action), tag + " order");
            const auto& gens = action.generators();
            for (std::size_t j = 0; j < gens.size(); ++j) {
              const auto& e = gens[j].exponents;
              const auto oj = gens[j].order;
              std::int64_t s = 0;
              for (std::size_t i = 0; i < e.size(); ++i) {
                std::int64_t d = oj;
                for (std::size_t k = 0; k < e.size(); ++k) {
                  if (k != i) d = std::gcd(d, e[k]);
                }
                s = (s + d * e[i]) % oj;
              }
              std::int64_t m = 1;
              while ((m * s) % oj != 0) ++m;
              o.expect(data.m[j] == m, tag + " m_j");
            }
          } catch (const std::exception& ex) {
            o.expect(false, tag + " threw: " + ex.what());
          }
        }
        std::size_t i = 0;
        while (i < a.size() && a[i] == r - 1) a[i++] = 1;
        if (i == a.size()) break;
        ++a[i];
      }
    }
  }
  return o;
}

Outcome corollary_sweep() {
  Outcome o;
  for (const auto& e : default_catalog().entries) {
    if (!e.report.is_small) continue;
    const auto order = static_cast<std::int64_t>(oracle::group(raw(e.action)).size());
    const auto omega = omega_order_oracle(e.action);
    o.expect(static_cast<std::int64_t>(e.report.group_order) == order, e.label + " |G|");
    o.expect(e.report.omega_order_direct == Applicable<std::int64_t>::of(omega), e.label + " omega order");
    if (omega != 2) continue;
    o.expect(order % 2 == 0, e.label + " |G| even");
    const bool finite = e.report.gldim.kind == GldimVerdict::Kind::Finite;
    o.expect(finite == (order == 2), e.label + " gldim");
  }
  return o;
}

Outcome two_paths() {
  Outcome o;
  for (const auto& e : default_catalog().entries) {
    const auto delta = det_character(e.action);
    const bool two_delta_zero = (delta + delta).is_zero();
    o.expect(is_steady(r_plus_omega(delta)) == two_delta_zero, e.label + " steady");
    if (!e.report.is_small) {
      o.expect(not_small(e.report.is_gorenstein_order), e.label + " not applicable");
      continue;
    }
    const bool by_criterion = is_gorenstein_order_r_omega(e.action);
    o.expect(by_criterion == is_gorenstein_order_splitting(r_plus_omega(delta), delta), e.label + " paths");
    o.expect(by_criterion == (omega_order_oracle(e.action) <= 2), e.label + " order test");
  }
  return o;
}

// Every invariant monomial of degree <= max_degree is a sum of atoms.
bool regenerates(const oracle::RawAction& g, const std::vector<Vec>& atoms, std::int64_t max_degree) {
  std::map<Vec, bool> reachable;
  reachable[Vec(static_cast<std::size_t>(g.n), 0)] = true;
  bool ok = true;
  for (std::int64_t d = 1; d <= max_degree; ++d) {
    oracle::monomials_of_degree(g.n, d, [&](const Vec& m) {
      if (!oracle::is_zero(oracle::weight(g, m))) return;
      bool hit = false;
      for (const auto& a : atoms) {
        Vec rest(m.size());
        bool fits = true;
        for (std::size_t i = 0; i < m.size() && fits; ++i) {
          rest[i] = m[i] - a[i];
          fits = rest[i] >= 0;
        }
        if (fits && reachable.count(rest)) {
          hit = true;
          break;
        }
      }
      if (hit) reachable[m] = true;
      ok = ok && hit;
    });
  }
  return ok;
}

Outcome semigroup_suite() {
  Outcome o;
  for (const auto& e : default_catalog().entries) {
    if (e.action.dimension() > 4 || e.report.group_order > 8) continue;
    const auto g = raw(e.action);
    const auto order = static_cast<std::int64_t>(e.report.group_order);
    auto atoms = exps_of(hilbert_basis(e.action).atoms);
    std::sort(atoms.begin(), atoms.end());
    o.expect(atoms == oracle::hilbert_basis(g), e.label + " atoms");
    o.expect(regenerates(g, atoms, 2 * order), e.label + " regeneration");

    const CharacterIndexer index(e.action.orders());
    for (std::uint32_t d = 0; d <= 10; ++d) {
      const auto counts = hilbert_counts(e.action, d);
      std::uint64_t total = 0;
      bool match = counts.size() == index.size();
      for (std::size_t k = 0; k < counts.size() && match; ++k) {
        match = counts[k] == oracle::count(g, index.at(k).evals(), d);
        total += counts[k];
      }
      o.expect(match, e.label + " counts at degree " + std::to_string(d));
      std::uint64_t binom = 1;
      for (std::uint64_t k = 1; k <= d; ++k) binom = binom * (static_cast<std::uint64_t>(g.n) - 1 + k) / k;
      o.expect(total == binom, e.label + " partition at degree " + std::to_string(d));
    }
  }
  return o;
}

Outcome full_character_set() {
  Outcome o;
  for (const auto& e : default_catalog().entries) {
    const auto chars = realized_characters(e.action);
    const auto set = CharacterSet::make(chars);
    const auto delta = det_character(e.action);
    o.expect(is_steady(set), e.label + " steady");
    o.expect(is_generator(set), e.label + " generator");
    o.expect(is_gorenstein_order_splitting(set, delta), e.label + " splitting");
    if (e.report.is_small) {
      o.expect(chars.size() == oracle::group(raw(e.action)).size(), e.label + " character count");
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"order-two action on three variables", veronese_three},
      {"order-two action on four variables", veronese_four},
      {"involutions with 3 or 5 negated variables", involution_family},
      {"reflection diag(1,-1)", reflection},
      {"Weston formula against direct order", weston_sweep},
      {"even order and finite gldim over the catalog", corollary_sweep},
      {"Gorenstein-order two-path agreement", two_paths},
      {"semigroup regeneration and counting", semigroup_suite},
      {"full character set consistency", full_character_set},
  };

  int failed = 0;
  int id = 0;
  for (const auto& [name, run] : criteria) {
    ++id;
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& ex) {
      outcome.failures.push_back(std::string("exception: ") + ex.what());
    }
    const bool ok = outcome.failures.empty() && outcome.checks > 0;
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%zu checks)\n", ok ? "PASS" : "FAIL", id, name.c_str(), outcome.checks);
    for (const auto& f : outcome.failures) std::printf("    %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
