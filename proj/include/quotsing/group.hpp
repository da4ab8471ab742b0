#pragma once

// Diagonal finite abelian group actions on k[[x_1..x_n]], their characters,
// and the direct computation of the order of the canonical class.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quotsing/kernels.hpp"

namespace quotsing {

inline constexpr std::size_t kDefaultCap = 1'000'000;

// One diagonal generator: eigenvalue zeta_order^exponents[i] on x_i.
struct Generator {
  std::int64_t order = 0;
  std::vector<std::int64_t> exponents;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// A validated diagonal action. Construct through validate().
class DiagonalAction {
 public:
  int dimension() const { return n_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  // N = lcm of the generator orders.
  std::int64_t modulus() const { return modulus_; }
  // (o_1, ..., o_t)
  std::vector<std::int64_t> orders() const;
  bool all_exponents_nonzero() const;
  // Shorthand "1/r(a1,...,an)", joined with " + " for several generators.
  std::string label() const;

  friend bool operator==(const DiagonalAction&, const DiagonalAction&) = default;

 private:
  friend DiagonalAction validate(int n, std::vector<Generator> generators);

  int n_ = 0;
  std::vector<Generator> generators_;
  std::int64_t modulus_ = 1;
};

// Reduces exponents mod o_j and divides each generator by
// gcd(o_j, a_1j, ..., a_nj) so that o_j is the true order of g_j.
// Throws Error(Validation) for n < 1, o_j < 1, missing generators, a
// generator acting trivially, or N >= 2^31; Error(DimensionMismatch) when an
// exponent list does not have n entries.
DiagonalAction validate(int n, std::vector<Generator> generators);

// Element of G scaled to the common modulus N: eigenvalue zeta_N^coords[i].
struct GroupElement {
  std::vector<kernels::Residue> coords;

  bool is_identity() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct Group {
  std::int64_t modulus = 1;
  std::vector<GroupElement> elements;  // sorted, identity first

  std::size_t order() const { return elements.size(); }
};

// Closure of the scaled generators under addition mod N.
// Throws Error(CapExceeded) once more than `cap` elements are found.
Group enumerate_group(const DiagonalAction& action, std::size_t cap = kDefaultCap);

// Exactly one eigenvalue differs from 1.
bool is_pseudo_reflection(const GroupElement& g);

bool is_small(const Group& group);
bool is_small(const DiagonalAction& action, std::size_t cap = kDefaultCap);

// A character of G, stored as its values on the input generators: evals[j]
// is taken mod moduli[j] = o_j.
class Character {
 public:
  Character() = default;
  Character(std::vector<std::int64_t> evals, std::vector<std::int64_t> moduli);

  static Character zero(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& evals() const { return evals_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  bool is_zero() const;
  // Least m >= 1 with m * this == 0.
  std::int64_t order() const;
  Character scaled(std::int64_t k) const;

  Character operator-() const;
  // Throw Error(ModulusMismatch) for characters of different actions.
  Character operator+(const Character& other) const;
  Character operator-(const Character& other) const;

  std::string to_string() const;

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;

 private:
  std::vector<std::int64_t> evals_;
  std::vector<std::int64_t> moduli_;
};

// Character of the monomial with exponent vector `exps`.
// Throws Error(DimensionMismatch) when |exps| != n.
Character weight(std::span<const std::int64_t> exps, const DiagonalAction& action);

// delta: the determinant character, i.e. the weight of x_1 x_2 ... x_n.
Character det_character(const DiagonalAction& action);

// delta == 0. Throws Error(NotApplicable) unless the action is small.
bool is_gorenstein_ring(const DiagonalAction& action, std::size_t cap = kDefaultCap);

// Order of [omega] in Cl(R), read off as the order of delta.
// Throws Error(NotApplicable) unless the action is small.
std::int64_t omega_order_direct(const DiagonalAction& action, std::size_t cap = kDefaultCap);

}  // namespace quotsing
