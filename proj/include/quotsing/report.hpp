#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quotsing/error.hpp"
#include "quotsing/group.hpp"
#include "quotsing/orders.hpp"
#include "quotsing/semigroup.hpp"

namespace quotsing {

inline constexpr const char* kReportSchema = "quotsing.report/1";

// A value, or the reason its precondition failed.
template <class T>
struct Applicable {
  std::optional<T> value;
  std::optional<Reason> reason;

  static Applicable of(T v) { return {std::move(v), std::nullopt}; }
  static Applicable not_applicable(Reason why) { return {std::nullopt, why}; }

  bool has_value() const { return value.has_value(); }

  friend bool operator==(const Applicable&, const Applicable&) = default;
};

struct AnalysisReport {
  std::string label;
  int n = 0;
  std::vector<Generator> generators;
  std::int64_t modulus = 1;
  std::size_t group_order = 0;
  bool is_small = false;
  Character delta;

  Applicable<bool> is_gorenstein_ring;
  Applicable<std::int64_t> omega_order_direct;
  Applicable<std::int64_t> omega_order_weston;
  Applicable<bool> omega_orders_agree;
  Applicable<bool> is_gorenstein_order;
  // Flags of the module R (+) omega.
  Applicable<bool> steady;
  Applicable<bool> basic;
  Applicable<bool> generator;
  Applicable<bool> even_order_check;
  GldimVerdict gldim;

  Applicable<std::vector<Monomial>> invariant_atoms;
  Applicable<std::vector<Monomial>> omega_generators;

  std::optional<double> elapsed_ms;
};

struct AnalyzeOptions {
  std::size_t cap = kDefaultCap;
  bool with_bases = true;
  bool with_timing = false;
};

// Only enumeration-cap errors escape; inapplicable fields carry a reason.
AnalysisReport analyze(const DiagonalAction& action, const AnalyzeOptions& options = {});

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

nlohmann::ordered_json to_json(const GldimVerdict& verdict);
std::string to_string(const GldimVerdict& verdict);

nlohmann::ordered_json to_json(const Monomial& m);

}  // namespace quotsing
