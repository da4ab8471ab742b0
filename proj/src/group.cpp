#include "quotsing/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "quotsing/error.hpp"

namespace quotsing {

namespace {

constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

std::int64_t reduce(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

struct ElementHash {
  std::size_t operator()(const std::vector<kernels::Residue>& coords) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto c : coords) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::vector<std::int64_t> DiagonalAction::orders() const {
  std::vector<std::int64_t> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.order);
  return out;
}

bool DiagonalAction::all_exponents_nonzero() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Generator& g) {
    return std::all_of(g.exponents.begin(), g.exponents.end(), [](auto a) { return a != 0; });
  });
}

std::string DiagonalAction::label() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    if (j > 0) out << " + ";
    out << "1/" << generators_[j].order << "(";
    for (std::size_t i = 0; i < generators_[j].exponents.size(); ++i) {
      if (i > 0) out << ",";
      out << generators_[j].exponents[i];
    }
    out << ")";
  }
  return out.str();
}

DiagonalAction validate(int n, std::vector<Generator> generators) {
  if (n < 1) throw Error(ErrorCode::Validation, "n must be positive, got " + std::to_string(n));
  if (generators.empty()) throw Error(ErrorCode::Validation, "no generators");

  std::int64_t modulus = 1;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    auto& g = generators[j];
    const std::string where = "generator " + std::to_string(j + 1);
    if (g.order < 1) {
      throw Error(ErrorCode::Validation, where + ": order must be positive");
    }
    if (g.order > kMaxModulus) {
      throw Error(ErrorCode::Validation, where + ": order exceeds 2^31-1");
    }
    if (g.exponents.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::DimensionMismatch,
                  where + ": expected " + std::to_string(n) + " exponents, got " +
                      std::to_string(g.exponents.size()));
    }
    std::int64_t common = g.order;
    for (auto& a : g.exponents) {
      a = reduce(a, g.order);
      common = std::gcd(common, a);
    }
    if (common == g.order) throw Error(ErrorCode::Validation, where + ": acts trivially");
    g.order /= common;
    for (auto& a : g.exponents) a /= common;

    modulus = std::lcm(modulus, g.order);
    if (modulus > kMaxModulus) {
      throw Error(ErrorCode::Validation, "exponent of G exceeds 2^31-1");
    }
  }

  DiagonalAction action;
  action.n_ = n;
  action.generators_ = std::move(generators);
  action.modulus_ = modulus;
  return action;
}

bool GroupElement::is_identity() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

Group enumerate_group(const DiagonalAction& action, std::size_t cap) {
  using kernels::Residue;
  const auto n = static_cast<std::size_t>(action.dimension());
  const std::int64_t modulus = action.modulus();

  std::vector<std::vector<Residue>> steps;
  for (const auto& g : action.generators()) {
    std::vector<Residue> step(n);
    const std::int64_t scale = modulus / g.order;
    for (std::size_t i = 0; i < n; ++i) step[i] = static_cast<Residue>(g.exponents[i] * scale);
    steps.push_back(std::move(step));
  }
  const std::vector<Residue> moduli(n, static_cast<Residue>(modulus));

  std::unordered_set<std::vector<Residue>, ElementHash> seen;
  std::vector<std::vector<Residue>> frontier{std::vector<Residue>(n, 0)};
  seen.insert(frontier.front());
  std::vector<Residue> next(n);
  while (!frontier.empty()) {
    std::vector<std::vector<Residue>> grown;
    for (const auto& element : frontier) {
      for (const auto& step : steps) {
        kernels::add_mod(element, step, moduli, next);
        if (seen.insert(next).second) {
          if (seen.size() > cap) {
            throw Error(ErrorCode::CapExceeded,
                        "group has more than " + std::to_string(cap) + " elements");
          }
          grown.push_back(next);
        }
      }
    }
    frontier = std::move(grown);
  }

  Group group;
  group.modulus = modulus;
  group.elements.reserve(seen.size());
  for (const auto& coords : seen) group.elements.push_back(GroupElement{coords});
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

bool is_pseudo_reflection(const GroupElement& g) { return kernels::count_nonzero(g.coords) == 1; }

bool is_small(const Group& group) {
  return std::none_of(group.elements.begin(), group.elements.end(), is_pseudo_reflection);
}

bool is_small(const DiagonalAction& action, std::size_t cap) {
  return is_small(enumerate_group(action, cap));
}

Character::Character(std::vector<std::int64_t> evals, std::vector<std::int64_t> moduli)
    : evals_(std::move(evals)), moduli_(std::move(moduli)) {
  if (evals_.size() != moduli_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "character has " + std::to_string(evals_.size()) +
                                                  " values for " + std::to_string(moduli_.size()) +
                                                  " generators");
  }
  for (std::size_t j = 0; j < evals_.size(); ++j) {
    if (moduli_[j] < 1) throw Error(ErrorCode::Validation, "character modulus must be positive");
    evals_[j] = reduce(evals_[j], moduli_[j]);
  }
}

Character Character::zero(std::vector<std::int64_t> moduli) {
  std::vector<std::int64_t> evals(moduli.size(), 0);
  return Character(std::move(evals), std::move(moduli));
}

bool Character::is_zero() const {
  return std::all_of(evals_.begin(), evals_.end(), [](auto r) { return r == 0; });
}

std::int64_t Character::order() const {
  std::int64_t order = 1;
  for (std::size_t j = 0; j < evals_.size(); ++j) {
    order = std::lcm(order, moduli_[j] / std::gcd(moduli_[j], evals_[j]));
  }
  return order;
}

Character Character::scaled(std::int64_t k) const {
  std::vector<std::int64_t> evals(evals_.size());
  for (std::size_t j = 0; j < evals_.size(); ++j) {
    const auto factor = reduce(k, moduli_[j]);
    evals[j] = static_cast<std::int64_t>((static_cast<__int128>(evals_[j]) * factor) % moduli_[j]);
  }
  return Character(std::move(evals), moduli_);
}

Character Character::operator-() const {
  std::vector<std::int64_t> evals(evals_.size());
  for (std::size_t j = 0; j < evals_.size(); ++j) evals[j] = -evals_[j];
  return Character(std::move(evals), moduli_);
}

Character Character::operator+(const Character& other) const {
  if (moduli_ != other.moduli_) {
    throw Error(ErrorCode::ModulusMismatch, "characters " + to_string() + " and " +
                                                other.to_string() + " belong to different groups");
  }
  std::vector<std::int64_t> evals(evals_.size());
  for (std::size_t j = 0; j < evals_.size(); ++j) evals[j] = evals_[j] + other.evals_[j];
  return Character(std::move(evals), moduli_);
}

Character Character::operator-(const Character& other) const { return *this + (-other); }

std::string Character::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t j = 0; j < evals_.size(); ++j) {
    if (j > 0) out << ",";
    out << evals_[j];
  }
  out << ")";
  return out.str();
}

Character weight(std::span<const std::int64_t> exps, const DiagonalAction& action) {
  if (exps.size() != static_cast<std::size_t>(action.dimension())) {
    throw Error(ErrorCode::DimensionMismatch, "monomial has " + std::to_string(exps.size()) +
                                                  " exponents, action has n = " +
                                                  std::to_string(action.dimension()));
  }
  std::vector<std::int64_t> evals;
  evals.reserve(action.generator_count());
  for (const auto& g : action.generators()) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      acc = (acc + reduce(exps[i], g.order) * g.exponents[i]) % g.order;
    }
    evals.push_back(acc);
  }
  return Character(std::move(evals), action.orders());
}

Character det_character(const DiagonalAction& action) {
  std::vector<std::int64_t> evals;
  for (const auto& g : action.generators()) {
    evals.push_back(std::accumulate(g.exponents.begin(), g.exponents.end(), std::int64_t{0}));
  }
  return Character(std::move(evals), action.orders());
}

namespace {

void require_small(const DiagonalAction& action, std::size_t cap, const char* what) {
  if (!is_small(action, cap)) {
    throw Error(ErrorCode::NotApplicable,
                std::string(what) + " requires a small action; " + action.label() +
                    " contains a pseudo-reflection");
  }
}

}  // namespace

bool is_gorenstein_ring(const DiagonalAction& action, std::size_t cap) {
  require_small(action, cap, "is_gorenstein_ring");
  return det_character(action).is_zero();
}

std::int64_t omega_order_direct(const DiagonalAction& action, std::size_t cap) {
  require_small(action, cap, "omega_order_direct");
  return det_character(action).order();
}

}  // namespace quotsing
