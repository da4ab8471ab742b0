#include "quotsing/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "quotsing/error.hpp"

namespace quotsing {

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
}

std::string Monomial::to_string() const {
  static constexpr const char* kShortNames[] = {"x", "y", "z"};
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (exps.size() <= 3) {
      out << kShortNames[i];
    } else {
      out << "x" << (i + 1);
    }
    if (exps[i] > 1) out << "^" << exps[i];
    any = true;
  }
  return any ? out.str() : "1";
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

Character weight(const Monomial& m, const DiagonalAction& action) {
  std::vector<std::int64_t> exps(m.exps.begin(), m.exps.end());
  return weight(exps, action);
}

namespace {

// Walks exponent vectors while maintaining their weight incrementally.
class Walker {
 public:
  Walker(const DiagonalAction& action, std::size_t cap)
      : n_(static_cast<std::size_t>(action.dimension())),
        t_(action.generator_count()),
        cap_(cap),
        exps_(n_, 0),
        evals_(n_ + 1, std::vector<std::int64_t>(t_, 0)) {
    for (const auto& g : action.generators()) {
      orders_.push_back(g.order);
    }
    coeffs_.assign(n_, std::vector<std::int64_t>(t_));
    for (std::size_t j = 0; j < t_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) coeffs_[i][j] = action.generators()[j].exponents[i];
    }
  }

  // Vectors with sum == degree and exps[i] <= bound[i], in descending lex order.
  template <class Visit>
  void of_degree(std::uint64_t degree, const std::vector<std::int64_t>& bound, Visit&& visit) {
    degree_walk(0, degree, bound, visit);
  }

  // Vectors with 0 <= exps[i] < bound[i].
  template <class Visit>
  void in_box(const std::vector<std::int64_t>& bound, Visit&& visit) {
    box_walk(0, bound, visit);
  }

 private:
  void set(std::size_t i, std::uint32_t value) {
    exps_[i] = value;
    for (std::size_t j = 0; j < t_; ++j) {
      evals_[i + 1][j] = (evals_[i][j] + static_cast<std::int64_t>(value) % orders_[j] * coeffs_[i][j]) %
                         orders_[j];
    }
  }

  void tick() {
    if (++visited_ > cap_) {
      throw Error(ErrorCode::CapExceeded,
                  "more than " + std::to_string(cap_) + " candidate monomials");
    }
  }

  template <class Visit>
  void degree_walk(std::size_t i, std::uint64_t remaining, const std::vector<std::int64_t>& bound,
                   Visit& visit) {
    if (i + 1 == n_) {
      if (remaining > static_cast<std::uint64_t>(bound[i])) return;
      set(i, static_cast<std::uint32_t>(remaining));
      tick();
      visit(exps_, evals_[n_]);
      return;
    }
    const auto top = std::min<std::uint64_t>(remaining, static_cast<std::uint64_t>(bound[i]));
    for (std::uint64_t v = top + 1; v-- > 0;) {
      set(i, static_cast<std::uint32_t>(v));
      degree_walk(i + 1, remaining - v, bound, visit);
    }
  }

  template <class Visit>
  void box_walk(std::size_t i, const std::vector<std::int64_t>& bound, Visit& visit) {
    if (i == n_) {
      tick();
      visit(exps_, evals_[n_]);
      return;
    }
    for (std::int64_t v = 0; v < bound[i]; ++v) {
      set(i, static_cast<std::uint32_t>(v));
      box_walk(i + 1, bound, visit);
    }
  }

  std::size_t n_;
  std::size_t t_;
  std::size_t cap_;
  std::size_t visited_ = 0;
  std::vector<std::int64_t> orders_;
  std::vector<std::vector<std::int64_t>> coeffs_;
  std::vector<std::uint32_t> exps_;
  std::vector<std::vector<std::int64_t>> evals_;  // evals_[i]: weight of exps_[0..i)
};

bool is_zero_tuple(const std::vector<std::int64_t>& evals) {
  return std::all_of(evals.begin(), evals.end(), [](auto r) { return r == 0; });
}

void sort_atoms(std::vector<Monomial>& atoms) {
  std::sort(atoms.begin(), atoms.end(), monomial_less);
}

}  // namespace

std::vector<std::int64_t> variable_orders(const DiagonalAction& action) {
  const auto n = static_cast<std::size_t>(action.dimension());
  std::vector<std::int64_t> orders(n);
  std::vector<std::int64_t> unit(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = 1;
    orders[i] = weight(unit, action).order();
    unit[i] = 0;
  }
  return orders;
}

SemigroupBasis hilbert_basis(const DiagonalAction& action, const SearchLimits& limits) {
  const auto group_order = enumerate_group(action, limits.group_cap).order();
  const auto bound = variable_orders(action);
  const auto n = static_cast<std::size_t>(action.dimension());

  kernels::RowBlock found(n);
  std::vector<Monomial> atoms;
  Walker walker(action, limits.candidate_cap);
  for (std::uint64_t d = 1; d <= group_order; ++d) {
    walker.of_degree(d, bound, [&](const std::vector<std::uint32_t>& exps,
                                   const std::vector<std::int64_t>& evals) {
      if (!is_zero_tuple(evals) || found.any_below(exps)) return;
      found.push(exps);
      atoms.push_back(Monomial{exps});
    });
  }
  sort_atoms(atoms);
  return SemigroupBasis{std::move(atoms), Character::zero(action.orders())};
}

std::vector<Character> realized_characters(const DiagonalAction& action, std::size_t cap) {
  const auto n = static_cast<std::size_t>(action.dimension());
  std::vector<Character> steps;
  std::vector<std::int64_t> unit(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = 1;
    steps.push_back(weight(unit, action));
    unit[i] = 0;
  }
  std::set<Character> seen{Character::zero(action.orders())};
  std::vector<Character> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Character> grown;
    for (const auto& c : frontier) {
      for (const auto& step : steps) {
        auto next = c + step;
        if (seen.insert(next).second) {
          if (seen.size() > cap) {
            throw Error(ErrorCode::CapExceeded,
                        "more than " + std::to_string(cap) + " realized characters");
          }
          grown.push_back(std::move(next));
        }
      }
    }
    frontier = std::move(grown);
  }
  return {seen.begin(), seen.end()};
}

SemigroupBasis module_generators(const DiagonalAction& action, const Character& c,
                                 const SearchLimits& limits) {
  if (c.moduli() != action.orders()) {
    throw Error(ErrorCode::ModulusMismatch,
                "character " + c.to_string() + " does not belong to " + action.label());
  }
  const auto realized = realized_characters(action, limits.group_cap);
  if (!std::binary_search(realized.begin(), realized.end(), c)) {
    throw Error(ErrorCode::UnrealizedCharacter,
                "no monomial has weight " + c.to_string() + " under " + action.label());
  }

  const auto ring = hilbert_basis(action, limits);
  const auto n = static_cast<std::size_t>(action.dimension());
  kernels::RowBlock invariants(n);
  for (const auto& atom : ring.atoms) invariants.push(atom.exps);

  const auto bound = variable_orders(action);
  std::vector<Monomial> atoms;
  Walker walker(action, limits.candidate_cap);
  walker.in_box(bound, [&](const std::vector<std::uint32_t>& exps,
                           const std::vector<std::int64_t>& evals) {
    if (evals != c.evals() || invariants.any_below(exps)) return;
    atoms.push_back(Monomial{exps});
  });
  sort_atoms(atoms);
  return SemigroupBasis{std::move(atoms), c};
}

CharacterIndexer::CharacterIndexer(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_) {
    if (size_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(m)) {
      throw Error(ErrorCode::Overflow, "character table too large");
    }
    size_ *= static_cast<std::size_t>(m);
  }
}

std::size_t CharacterIndexer::index(const Character& c) const {
  if (c.moduli() != moduli_) {
    throw Error(ErrorCode::ModulusMismatch, "character " + c.to_string() + " has foreign moduli");
  }
  std::size_t index = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    index = index * static_cast<std::size_t>(moduli_[j]) + static_cast<std::size_t>(c.evals()[j]);
  }
  return index;
}

Character CharacterIndexer::at(std::size_t index) const {
  std::vector<std::int64_t> evals(moduli_.size());
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    const auto m = static_cast<std::size_t>(moduli_[j]);
    evals[j] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return Character(std::move(evals), moduli_);
}

std::vector<std::uint64_t> hilbert_counts(const DiagonalAction& action, std::uint32_t degree,
                                          std::size_t cap) {
  const auto n = static_cast<std::size_t>(action.dimension());

  // Total count C(n-1+d, d) bounds every entry.
  unsigned __int128 total = 1;
  for (std::uint64_t k = 1; k <= degree; ++k) {
    total = total * (n - 1 + k) / k;
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorCode::Overflow, "monomial count exceeds 2^64");
    }
  }

  const CharacterIndexer indexer(action.orders());
  const std::size_t width = indexer.size();
  if (width > cap || width > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::CapExceeded, "character table has " + std::to_string(width) + " entries");
  }

  // rows[k][r]: monomials in the variables seen so far of degree k, weight r.
  std::vector<std::vector<std::uint64_t>> rows(degree + 1, std::vector<std::uint64_t>(width, 0));
  rows[0][indexer.index(Character::zero(action.orders()))] = 1;

  std::vector<std::int64_t> unit(n, 0);
  std::vector<std::uint32_t> shift(width);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i] = 1;
    const Character w = weight(unit, action);
    unit[i] = 0;
    for (std::size_t r = 0; r < width; ++r) {
      shift[r] = static_cast<std::uint32_t>(indexer.index(indexer.at(r) - w));
    }
    for (std::size_t k = 1; k <= degree; ++k) {
      kernels::gather_add(rows[k], rows[k - 1], shift, rows[k]);
    }
  }
  return std::move(rows[degree]);
}

std::uint64_t hilbert_function(const DiagonalAction& action, const Character& c,
                               std::uint32_t degree, std::size_t cap) {
  const CharacterIndexer indexer(action.orders());
  const auto index = indexer.index(c);
  return hilbert_counts(action, degree, cap)[index];
}

}  // namespace quotsing
