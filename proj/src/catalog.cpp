#include "quotsing/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "quotsing/error.hpp"

namespace quotsing {

namespace {

using Key = std::vector<std::vector<std::int64_t>>;

// Calls visit(a) for every nondecreasing a in [0, r)^n except the zero vector.
template <class Visit>
void for_each_sorted_vector(int n, std::int64_t r, Visit&& visit) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
  while (true) {
    if (a.back() != 0) visit(a);
    int i = n - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == r - 1) --i;
    if (i < 0) return;
    const auto next = a[static_cast<std::size_t>(i)] + 1;
    for (auto k = static_cast<std::size_t>(i); k < a.size(); ++k) a[k] = next;
  }
}

// Calls visit(a) for every a in [0, r)^n except the zero vector.
template <class Visit>
void for_each_vector(int n, std::int64_t r, Visit&& visit) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
  while (true) {
    std::size_t i = 0;
    while (i < a.size() && a[i] == r - 1) a[i++] = 0;
    if (i == a.size()) return;
    ++a[i];
    visit(a);
  }
}

bool entry_less(const DiagonalAction& x, const DiagonalAction& y) {
  if (x.dimension() != y.dimension()) return x.dimension() < y.dimension();
  if (x.generator_count() != y.generator_count()) return x.generator_count() < y.generator_count();
  const auto& gx = x.generators();
  const auto& gy = y.generators();
  return std::lexicographical_compare(
      gx.begin(), gx.end(), gy.begin(), gy.end(), [](const Generator& a, const Generator& b) {
        return std::tie(a.order, a.exponents) < std::tie(b.order, b.exponents);
      });
}

std::size_t power_sum(int n, std::int64_t order_max, std::size_t limit) {
  std::size_t total = 0;
  for (std::int64_t r = 2; r <= order_max; ++r) {
    std::size_t p = 1;
    for (int i = 0; i < n; ++i) {
      p *= static_cast<std::size_t>(r);
      if (p > limit) return limit + 1;
    }
    total += p;
    if (total > limit) return limit + 1;
  }
  return total;
}

}  // namespace

DiagonalAction cyclic_normal_form(const DiagonalAction& action) {
  if (action.generator_count() != 1) {
    throw Error(ErrorCode::Precondition, "cyclic normal form needs exactly one generator");
  }
  const auto& g = action.generators().front();
  std::vector<std::int64_t> best;
  for (std::int64_t u = 1; u < g.order; ++u) {
    if (std::gcd(u, g.order) != 1) continue;
    std::vector<std::int64_t> b(g.exponents.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = u * g.exponents[i] % g.order;
    std::sort(b.begin(), b.end());
    if (best.empty() || b < best) best = std::move(b);
  }
  return validate(action.dimension(), {Generator{g.order, std::move(best)}});
}

Key group_key(const DiagonalAction& action, std::int64_t scale, std::size_t cap) {
  if (scale % action.modulus() != 0) {
    throw Error(ErrorCode::Precondition, "group key scale must be a multiple of N");
  }
  const auto group = enumerate_group(action, cap);
  const auto factor = scale / action.modulus();
  const auto n = static_cast<std::size_t>(action.dimension());

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Key best;
  Key candidate(group.order(), std::vector<std::int64_t>(n));
  do {
    for (std::size_t e = 0; e < group.order(); ++e) {
      for (std::size_t i = 0; i < n; ++i) {
        candidate[e][i] = static_cast<std::int64_t>(group.elements[e].coords[perm[i]]) * factor;
      }
    }
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<DiagonalAction> cyclic_classes(int n_min, int n_max, std::int64_t order_max) {
  std::set<std::pair<int, Generator>, bool (*)(const std::pair<int, Generator>&,
                                               const std::pair<int, Generator>&)>
      seen([](const std::pair<int, Generator>& x, const std::pair<int, Generator>& y) {
        return std::tie(x.first, x.second.order, x.second.exponents) <
               std::tie(y.first, y.second.order, y.second.exponents);
      });
  for (int n = std::max(n_min, 1); n <= n_max; ++n) {
    for (std::int64_t r = 2; r <= order_max; ++r) {
      for_each_sorted_vector(n, r, [&](const std::vector<std::int64_t>& a) {
        const auto nf = cyclic_normal_form(validate(n, {Generator{r, a}}));
        seen.insert({n, nf.generators().front()});
      });
    }
  }
  std::vector<DiagonalAction> out;
  out.reserve(seen.size());
  for (const auto& [n, g] : seen) out.push_back(validate(n, {g}));
  return out;
}

Catalog catalog(const CatalogOptions& options) {
  if (options.n_min < 1 || options.n_max < options.n_min || options.order_max < 2) {
    throw Error(ErrorCode::Validation, "catalog needs 1 <= n_min <= n_max and order_max >= 2");
  }
  std::vector<DiagonalAction> actions = cyclic_classes(options.n_min, options.n_max, options.order_max);

  if (options.multi_gen) {
    std::int64_t scale = 1;
    for (std::int64_t r = 2; r <= options.order_max; ++r) {
      scale = std::lcm(scale, r);
      if (scale > (std::int64_t{1} << 31)) {
        throw Error(ErrorCode::CapExceeded, "order_max too large for a multi-generator sweep");
      }
    }
    std::size_t pairs = 0;
    for (const auto& first : actions) {
      pairs += power_sum(first.dimension(), options.order_max, options.cap);
      if (pairs > options.cap) {
        throw Error(ErrorCode::CapExceeded, "multi-generator sweep needs more than " +
                                                std::to_string(options.cap) + " candidate pairs");
      }
    }

    std::set<std::pair<int, Key>> keys;
    for (const auto& a : actions) keys.insert({a.dimension(), group_key(a, scale, options.cap)});
    std::vector<DiagonalAction> extra;
    for (const auto& first : actions) {
      const int n = first.dimension();
      for (std::int64_t r = 2; r <= options.order_max; ++r) {
        for_each_vector(n, r, [&](const std::vector<std::int64_t>& a) {
          std::vector<Generator> gens{first.generators().front(), Generator{r, a}};
          auto action = validate(n, std::move(gens));
          if (keys.insert({n, group_key(action, scale, options.cap)}).second) {
            extra.push_back(std::move(action));
          }
        });
      }
    }
    actions.insert(actions.end(), extra.begin(), extra.end());
  }
  std::stable_sort(actions.begin(), actions.end(), entry_less);

  Catalog out;
  out.entries.resize(actions.size());
  const AnalyzeOptions analyze_options{options.cap, false, false};
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  const auto worker = [&] {
    try {
      for (std::size_t i = next++; i < actions.size(); i = next++) {
        out.entries[i] =
            CatalogEntry{actions[i].label(), actions[i], analyze(actions[i], analyze_options)};
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = actions.size();
    }
  };
  const unsigned threads =
      std::max(1u, options.threads ? options.threads : std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  auto& s = out.summary;
  for (const auto& e : out.entries) {
    const auto& r = e.report;
    ++s.total;
    s.small += r.is_small;
    s.gorenstein_ring += r.is_gorenstein_ring.value.value_or(false);
    s.omega_order_two += r.omega_order_direct.value.value_or(0) == 2;
    s.gorenstein_order += r.is_gorenstein_order.value.value_or(false);
    s.finite_gldim += r.gldim.kind == GldimVerdict::Kind::Finite;
    s.infinite_gldim += r.gldim.kind == GldimVerdict::Kind::Infinite;
  }
  return out;
}

nlohmann::ordered_json to_json(const Catalog& catalog) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : catalog.entries) {
    auto report = to_json(e.report);
    report.erase("invariant_atoms");
    report.erase("omega_generators");
    rows.push_back(nlohmann::ordered_json{{"label", e.label}, {"report", std::move(report)}});
  }
  const auto& s = catalog.summary;
  nlohmann::ordered_json out;
  out["schema"] = "quotsing.catalog/1";
  out["entries"] = std::move(rows);
  out["summary"] = nlohmann::ordered_json{{"total", s.total},
                                          {"small", s.small},
                                          {"gorenstein_ring", s.gorenstein_ring},
                                          {"omega_order_two", s.omega_order_two},
                                          {"gorenstein_order", s.gorenstein_order},
                                          {"finite_gldim", s.finite_gldim},
                                          {"infinite_gldim", s.infinite_gldim}};
  return out;
}

std::string to_text(const Catalog& catalog) {
  std::ostringstream out;
  const auto opt = [](const auto& a) {
    if (!a.has_value()) return std::string("-");
    if constexpr (std::is_same_v<std::decay_t<decltype(*a.value)>, bool>) {
      return std::string(*a.value ? "yes" : "no");
    } else {
      return std::to_string(*a.value);
    }
  };
  out << std::left << std::setw(28) << "action" << std::setw(6) << "|G|" << std::setw(7) << "small"
      << std::setw(6) << "gor" << std::setw(8) << "[omega]" << std::setw(8) << "weston"
      << std::setw(10) << "gor-order" << "gldim\n";
  for (const auto& e : catalog.entries) {
    const auto& r = e.report;
    out << std::left << std::setw(28) << e.label << std::setw(6) << r.group_order << std::setw(7)
        << (r.is_small ? "yes" : "no") << std::setw(6) << opt(r.is_gorenstein_ring) << std::setw(8)
        << opt(r.omega_order_direct) << std::setw(8) << opt(r.omega_order_weston) << std::setw(10)
        << opt(r.is_gorenstein_order) << to_string(r.gldim) << "\n";
  }
  const auto& s = catalog.summary;
  out << "\nentries " << s.total << ", small " << s.small << ", Gorenstein rings "
      << s.gorenstein_ring << ", [omega] of order 2 " << s.omega_order_two
      << ", Gorenstein orders " << s.gorenstein_order << ", finite gldim " << s.finite_gldim
      << ", infinite gldim " << s.infinite_gldim << "\n";
  return out.str();
}

}  // namespace quotsing
