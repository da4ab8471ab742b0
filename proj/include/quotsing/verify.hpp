#pragma once

// Self-check harness: runs every property of the analyzer against slow,
// independent brute-force routines and reports per-suite results.

#include <cstdint>
#include <string>
#include <vector>

#include "quotsing/catalog.hpp"
#include "quotsing/semigroup.hpp"

namespace quotsing {

struct VerifyOptions {
  std::vector<std::string> suites;  // empty: all
  int n_max = 5;
  std::int64_t order_max = 12;
  // Negative control: drop one Hilbert-basis atom before regeneration.
  bool inject_fault = false;
  std::size_t cap = kDefaultCap;
  unsigned threads = 0;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

// Throws Error(Validation) for an unknown suite name.
std::vector<SuiteResult> verify(const VerifyOptions& options);

// Least m >= 1 with m * value == 0 mod modulus, by scanning.
std::int64_t least_multiplier_scan(std::int64_t value, std::int64_t modulus);

// Least m >= 1 with m * c == 0, by repeated addition.
std::int64_t order_by_iteration(const Character& c);

// Counts per character (CharacterIndexer order) by listing every monomial.
std::vector<std::uint64_t> brute_force_counts(const DiagonalAction& action, std::uint32_t degree);

// Every invariant monomial of degree <= max_degree is a sum of atoms.
// On failure, `witness` receives the first monomial that is not.
bool regenerates(const std::vector<Monomial>& atoms, const DiagonalAction& action,
                 std::uint64_t max_degree, Monomial* witness = nullptr);

}  // namespace quotsing
