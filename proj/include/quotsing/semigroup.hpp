#pragma once

// Monomial model of R = k[[x]]^G and of its rank-one reflexive modules M_c
// (spans of the semi-invariant monomials of character c).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quotsing/group.hpp"

namespace quotsing {

struct Monomial {
  std::vector<std::uint32_t> exps;

  std::uint64_t degree() const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Degree ascending, then lexicographic with x_1 > x_2 > ... (x^2 before xy).
bool monomial_less(const Monomial& a, const Monomial& b);

Character weight(const Monomial& m, const DiagonalAction& action);

struct SemigroupBasis {
  std::vector<Monomial> atoms;  // sorted by monomial_less
  Character character;          // zero for the invariant ring
};

struct SearchLimits {
  std::size_t group_cap = kDefaultCap;
  std::size_t candidate_cap = 50'000'000;  // monomials examined
};

// Minimal generators of the invariant monomial semigroup, searched up to the
// Noether bound deg <= |G|.
SemigroupBasis hilbert_basis(const DiagonalAction& action, const SearchLimits& limits = {});

// Minimal generators of M_c over R. Throws Error(UnrealizedCharacter) when c
// is not a weight of any monomial.
SemigroupBasis module_generators(const DiagonalAction& action, const Character& c,
                                 const SearchLimits& limits = {});

// order of weight(x_i) for each variable; x_i^ord is invariant.
std::vector<std::int64_t> variable_orders(const DiagonalAction& action);

// Subgroup of characters generated by the variable weights, sorted.
std::vector<Character> realized_characters(const DiagonalAction& action,
                                           std::size_t cap = kDefaultCap);

// Mixed-radix indexing of all eval tuples (r_1 mod o_1, ..., r_t mod o_t).
class CharacterIndexer {
 public:
  explicit CharacterIndexer(std::vector<std::int64_t> moduli);

  std::size_t size() const { return size_; }
  std::size_t index(const Character& c) const;
  Character at(std::size_t index) const;

 private:
  std::vector<std::int64_t> moduli_;
  std::size_t size_ = 1;
};

// #{a : |a| = d, weight(a) = c} by dynamic programming over the variables.
std::uint64_t hilbert_function(const DiagonalAction& action, const Character& c,
                               std::uint32_t degree, std::size_t cap = kDefaultCap);

// Counts for every character at once, indexed by CharacterIndexer(action.orders()).
std::vector<std::uint64_t> hilbert_counts(const DiagonalAction& action, std::uint32_t degree,
                                          std::size_t cap = kDefaultCap);

}  // namespace quotsing
