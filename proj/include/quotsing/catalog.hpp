#pragma once

// Sweeps over families of diagonal actions, one entry per isomorphism class
// of action up to renaming variables.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "quotsing/group.hpp"
#include "quotsing/report.hpp"

namespace quotsing {

struct CatalogOptions {
  int n_min = 3;
  int n_max = 5;
  std::int64_t order_max = 12;
  // Add two-generator actions; classes are then keyed by the group itself.
  bool multi_gen = false;
  std::size_t cap = kDefaultCap;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CatalogEntry {
  std::string label;
  DiagonalAction action;
  AnalysisReport report;
};

struct CatalogSummary {
  std::size_t total = 0;
  std::size_t small = 0;
  std::size_t gorenstein_ring = 0;
  std::size_t omega_order_two = 0;
  std::size_t gorenstein_order = 0;
  std::size_t finite_gldim = 0;
  std::size_t infinite_gldim = 0;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  CatalogSummary summary;
};

// Normal form of a cyclic action: divided down to its true order, then the
// lexicographically least exponent vector over all variable permutations and
// unit rescalings u*a (gcd(u, r) = 1).
DiagonalAction cyclic_normal_form(const DiagonalAction& action);

// Canonical form of the generated group: element list scaled to `scale`,
// minimized over variable permutations. scale must be a multiple of N.
std::vector<std::vector<std::int64_t>> group_key(const DiagonalAction& action, std::int64_t scale,
                                                 std::size_t cap = kDefaultCap);

// Distinct normal-form cyclic actions 1/r(a) with n_min <= n <= n_max,
// 2 <= r <= order_max, sorted by (n, r, a).
std::vector<DiagonalAction> cyclic_classes(int n_min, int n_max, std::int64_t order_max);

// Throws Error(CapExceeded) if a multi-generator sweep would exceed
// options.cap candidate pairs.
Catalog catalog(const CatalogOptions& options);

nlohmann::ordered_json to_json(const Catalog& catalog);
std::string to_text(const Catalog& catalog);

}  // namespace quotsing
