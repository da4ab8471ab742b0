#pragma once

// Character-level model of splitting endomorphism rings End_R(M_{c_1} + ... +
// M_{c_s}) over a small abelian quotient singularity. Rank-one reflexive
// modules are identified with their classes, i.e. with characters.

#include <cstddef>
#include <optional>
#include <vector>

#include "quotsing/error.hpp"
#include "quotsing/group.hpp"

namespace quotsing {

// Distinct characters c_1..c_s standing for the module M = (+) M_{c_i}.
class CharacterSet {
 public:
  // Throws Error(DuplicateCharacter) on repeated characters and
  // Error(ModulusMismatch) on characters of different actions.
  static CharacterSet make(std::vector<Character> chars);
  static std::optional<CharacterSet> try_make(std::vector<Character> chars);

  const std::vector<Character>& chars() const { return chars_; }
  std::size_t size() const { return chars_.size(); }
  bool contains(const Character& c) const;
  bool is_generator() const;

 private:
  std::vector<Character> chars_;
};

// The distinct classes among {0, delta}: R (+) omega, or just R when R is
// Gorenstein.
CharacterSet r_plus_omega(const Character& delta);

// Class of Hom(M_from, M_to), namely to - from.
Character hom_character(const Character& from, const Character& to);

struct EndDecomposition {
  // grid[k][i]: class of Hom(M_{c_i}, M_{c_k}).
  std::vector<std::vector<Character>> grid;
  // columns[i] = (grid[0][i], ..., grid[s-1][i]), the left-module summands.
  std::vector<std::vector<Character>> columns;
};

EndDecomposition end_decomposition(const CharacterSet& set);

// End_R(R (+) omega) is a Gorenstein order iff omega = omega*, i.e. 2 delta = 0.
// Throws Error(NotApplicable) unless the action is small.
bool is_gorenstein_order_r_omega(const DiagonalAction& action, std::size_t cap = kDefaultCap);

// Column test for general splitting modules: Hom_R(End(M), omega) is
// projective iff c - delta lies in the set for every c. Proven for
// M = R (+) omega; the s > 2 case is an extension of the same column
// argument. Throws Error(Precondition) unless 0 is in the set.
bool is_gorenstein_order_splitting(const CharacterSet& set, const Character& delta);

// Generator with End_R(M) in add M: closed under pairwise differences.
bool is_steady(const CharacterSet& set);
bool is_basic(const CharacterSet& set);
bool is_splitting(const CharacterSet& set);
bool is_generator(const CharacterSet& set);

struct GldimVerdict {
  enum class Kind { Finite, Infinite, NotApplicable };

  Kind kind = Kind::NotApplicable;
  int j = 0;  // eigenvalue -1 count, set for Finite
  std::optional<Reason> reason;

  static GldimVerdict finite(int j) { return {Kind::Finite, j, std::nullopt}; }
  static GldimVerdict infinite() { return {Kind::Infinite, 0, std::nullopt}; }
  static GldimVerdict not_applicable(Reason why) { return {Kind::NotApplicable, 0, why}; }

  friend bool operator==(const GldimVerdict&, const GldimVerdict&) = default;
};

// Finite global dimension of End_R(R (+) omega) for small G with [omega] of
// order exactly 2: finite iff |G| = 2, where G = <diag(1,..,1,-1,..,-1)> with
// j odd, j >= 3.
GldimVerdict decide_finite_gldim(const Group& group, const Character& delta);
GldimVerdict decide_finite_gldim(const DiagonalAction& action, std::size_t cap = kDefaultCap);

// order([omega]) == 2 implies |G| even. Throws Error(NotApplicable) unless small.
bool even_order_check(const DiagonalAction& action, std::size_t cap = kDefaultCap);

}  // namespace quotsing
