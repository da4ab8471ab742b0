#include "quotsing/orders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "quotsing/error.hpp"

namespace quotsing {

CharacterSet CharacterSet::make(std::vector<Character> chars) {
  for (std::size_t a = 0; a < chars.size(); ++a) {
    if (chars[a].moduli() != chars.front().moduli()) {
      throw Error(ErrorCode::ModulusMismatch, "characters of different actions in one set");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (chars[a] == chars[b]) {
        throw Error(ErrorCode::DuplicateCharacter,
                    "character " + chars[a].to_string() + " appears twice");
      }
    }
  }
  CharacterSet set;
  set.chars_ = std::move(chars);
  return set;
}

std::optional<CharacterSet> CharacterSet::try_make(std::vector<Character> chars) {
  try {
    return make(std::move(chars));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DuplicateCharacter) return std::nullopt;
    throw;
  }
}

bool CharacterSet::contains(const Character& c) const {
  return std::find(chars_.begin(), chars_.end(), c) != chars_.end();
}

bool CharacterSet::is_generator() const {
  return std::any_of(chars_.begin(), chars_.end(), [](const Character& c) { return c.is_zero(); });
}

CharacterSet r_plus_omega(const Character& delta) {
  auto zero = Character::zero(delta.moduli());
  if (delta.is_zero()) return CharacterSet::make({zero});
  return CharacterSet::make({zero, delta});
}

Character hom_character(const Character& from, const Character& to) { return to - from; }

EndDecomposition end_decomposition(const CharacterSet& set) {
  const auto& chars = set.chars();
  const std::size_t s = chars.size();
  EndDecomposition out;
  out.grid.assign(s, std::vector<Character>(s));
  out.columns.assign(s, std::vector<Character>(s));
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t i = 0; i < s; ++i) {
      out.grid[k][i] = hom_character(chars[i], chars[k]);
      out.columns[i][k] = out.grid[k][i];
    }
  }
  return out;
}

bool is_gorenstein_order_r_omega(const DiagonalAction& action, std::size_t cap) {
  if (!is_small(action, cap)) {
    throw Error(ErrorCode::NotApplicable, "Gorenstein-order criterion needs a small action");
  }
  const auto delta = det_character(action);
  return (delta + delta).is_zero();
}

bool is_gorenstein_order_splitting(const CharacterSet& set, const Character& delta) {
  if (!set.is_generator()) {
    throw Error(ErrorCode::Precondition, "splitting Gorenstein-order test needs R as a summand");
  }
  return std::all_of(set.chars().begin(), set.chars().end(),
                     [&](const Character& c) { return set.contains(c - delta); });
}

bool is_steady(const CharacterSet& set) {
  if (!set.is_generator()) return false;
  for (const auto& a : set.chars()) {
    for (const auto& b : set.chars()) {
      if (!set.contains(hom_character(b, a))) return false;
    }
  }
  return true;
}

bool is_basic(const CharacterSet& set) {
  const auto& chars = set.chars();
  for (std::size_t a = 0; a < chars.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (chars[a] == chars[b]) return false;
    }
  }
  return true;
}

bool is_splitting(const CharacterSet&) { return true; }

bool is_generator(const CharacterSet& set) { return set.is_generator(); }

GldimVerdict decide_finite_gldim(const Group& group, const Character& delta) {
  if (!is_small(group)) return GldimVerdict::not_applicable(Reason::NotSmall);
  if (delta.order() != 2) return GldimVerdict::not_applicable(Reason::OmegaOrderNotTwo);
  if (group.order() != 2) return GldimVerdict::infinite();

  const auto& involution = group.elements.back();
  const auto j = static_cast<int>(kernels::count_nonzero(involution.coords));
  if (j % 2 != 1 || j < 3) {
    // det = -1 forces j odd and smallness excludes j = 1.
    throw std::logic_error("involution with " + std::to_string(j) + " eigenvalues -1 in a small group");
  }
  return GldimVerdict::finite(j);
}

GldimVerdict decide_finite_gldim(const DiagonalAction& action, std::size_t cap) {
  return decide_finite_gldim(enumerate_group(action, cap), det_character(action));
}

bool even_order_check(const DiagonalAction& action, std::size_t cap) {
  const auto group = enumerate_group(action, cap);
  if (!is_small(group)) {
    throw Error(ErrorCode::NotApplicable, "even-order check needs a small action");
  }
  return det_character(action).order() != 2 || group.order() % 2 == 0;
}

}  // namespace quotsing
