#include "quotsing/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "quotsing/weston.hpp"

namespace quotsing {

AnalysisReport analyze(const DiagonalAction& action, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  AnalysisReport report;
  report.label = action.label();
  report.n = action.dimension();
  report.generators = action.generators();
  report.modulus = action.modulus();

  const auto group = enumerate_group(action, options.cap);
  report.group_order = group.order();
  report.is_small = is_small(group);
  report.delta = det_character(action);
  const auto& delta = report.delta;

  if (report.is_small) {
    const auto omega = r_plus_omega(delta);
    report.is_gorenstein_ring = Applicable<bool>::of(delta.is_zero());
    report.omega_order_direct = Applicable<std::int64_t>::of(delta.order());
    report.is_gorenstein_order = Applicable<bool>::of((delta + delta).is_zero());
    report.steady = Applicable<bool>::of(is_steady(omega));
    // R (+) R is not basic.
    report.basic = Applicable<bool>::of(
        CharacterSet::try_make({Character::zero(delta.moduli()), delta}).has_value());
    report.generator = Applicable<bool>::of(is_generator(omega));
    report.even_order_check =
        Applicable<bool>::of(delta.order() != 2 || group.order() % 2 == 0);
  } else {
    const auto na = Applicable<bool>::not_applicable(Reason::NotSmall);
    report.is_gorenstein_ring = na;
    report.omega_order_direct = Applicable<std::int64_t>::not_applicable(Reason::NotSmall);
    report.is_gorenstein_order = na;
    report.steady = na;
    report.basic = na;
    report.generator = na;
    report.even_order_check = na;
  }

  if (!report.is_small) {
    report.omega_order_weston = Applicable<std::int64_t>::not_applicable(Reason::NotSmall);
  } else if (action.all_exponents_nonzero()) {
    report.omega_order_weston = Applicable<std::int64_t>::of(omega_order_weston(action));
  } else {
    report.omega_order_weston = Applicable<std::int64_t>::not_applicable(Reason::ZeroExponent);
  }
  if (report.omega_order_direct.has_value() && report.omega_order_weston.has_value()) {
    report.omega_orders_agree =
        Applicable<bool>::of(*report.omega_order_direct.value == *report.omega_order_weston.value);
  } else {
    report.omega_orders_agree = Applicable<bool>::not_applicable(
        report.is_small ? Reason::ZeroExponent : Reason::NotSmall);
  }

  report.gldim = decide_finite_gldim(group, delta);

  using Monomials = Applicable<std::vector<Monomial>>;
  if (options.with_bases) {
    const SearchLimits limits{options.cap, SearchLimits{}.candidate_cap};
    report.invariant_atoms = Monomials::of(hilbert_basis(action, limits).atoms);
    report.omega_generators = report.is_small
                                  ? Monomials::of(module_generators(action, delta, limits).atoms)
                                  : Monomials::not_applicable(Reason::NotSmall);
  } else {
    report.invariant_atoms = Monomials::not_applicable(Reason::NotRequested);
    report.omega_generators = Monomials::not_applicable(Reason::NotRequested);
  }

  if (options.with_timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return report;
}

namespace {

using nlohmann::ordered_json;

template <class T, class Encode>
ordered_json field(const Applicable<T>& a, Encode encode) {
  if (a.has_value()) return encode(*a.value);
  return ordered_json{{"not_applicable", std::string(to_string(*a.reason))}};
}

template <class T>
ordered_json field(const Applicable<T>& a) {
  return field(a, [](const T& v) { return ordered_json(v); });
}

ordered_json monomial_list(const std::vector<Monomial>& atoms) {
  ordered_json out = ordered_json::array();
  for (const auto& m : atoms) out.push_back(to_json(m));
  return out;
}

template <class T, class Show>
std::string text(const Applicable<T>& a, Show show) {
  if (a.has_value()) return show(*a.value);
  return "n/a (" + std::string(to_string(*a.reason)) + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string monomial_text(const std::vector<Monomial>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += ", ";
    out += atoms[i].to_string();
  }
  return "{" + out + "}";
}

}  // namespace

ordered_json to_json(const Monomial& m) {
  return ordered_json{{"monomial", m.to_string()}, {"exponents", m.exps}};
}

ordered_json to_json(const GldimVerdict& verdict) {
  switch (verdict.kind) {
    case GldimVerdict::Kind::Finite:
      return ordered_json{{"verdict", "finite"}, {"j", verdict.j}};
    case GldimVerdict::Kind::Infinite:
      return ordered_json{{"verdict", "infinite"}};
    case GldimVerdict::Kind::NotApplicable:
      break;
  }
  return ordered_json{{"not_applicable", std::string(to_string(*verdict.reason))}};
}

std::string to_string(const GldimVerdict& verdict) {
  switch (verdict.kind) {
    case GldimVerdict::Kind::Finite:
      return "finite (j = " + std::to_string(verdict.j) + ")";
    case GldimVerdict::Kind::Infinite:
      return "infinite";
    case GldimVerdict::Kind::NotApplicable:
      break;
  }
  return "n/a (" + std::string(to_string(*verdict.reason)) + ")";
}

ordered_json to_json(const AnalysisReport& r) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : r.generators) {
    gens.push_back(ordered_json{{"order", g.order}, {"exponents", g.exponents}});
  }
  ordered_json out;
  out["schema"] = kReportSchema;
  out["action"] = ordered_json{{"label", r.label}, {"n", r.n}, {"generators", gens}};
  out["modulus"] = r.modulus;
  out["group_order"] = r.group_order;
  out["is_small"] = r.is_small;
  out["delta"] = r.delta.evals();
  out["is_gorenstein_ring"] = field(r.is_gorenstein_ring);
  out["omega_order_direct"] = field(r.omega_order_direct);
  out["omega_order_weston"] = field(r.omega_order_weston);
  out["omega_orders_agree"] = field(r.omega_orders_agree);
  out["is_gorenstein_order"] = field(r.is_gorenstein_order);
  out["steady"] = field(r.steady);
  out["basic"] = field(r.basic);
  out["generator"] = field(r.generator);
  out["even_order_check"] = field(r.even_order_check);
  out["gldim"] = to_json(r.gldim);
  out["invariant_atoms"] = field(r.invariant_atoms, monomial_list);
  out["omega_generators"] = field(r.omega_generators, monomial_list);
  if (r.elapsed_ms) out["elapsed_ms"] = *r.elapsed_ms;
  return out;
}

std::string to_text(const AnalysisReport& r) {
  const auto number = [](std::int64_t v) { return std::to_string(v); };
  std::ostringstream out;
  const auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(22) << key << value << "\n";
  };
  row("action", r.label);
  row("n", std::to_string(r.n));
  row("modulus N", std::to_string(r.modulus));
  row("|G|", std::to_string(r.group_order));
  row("small", yes_no(r.is_small));
  row("delta", r.delta.to_string());
  row("Gorenstein ring", text(r.is_gorenstein_ring, yes_no));
  row("order [omega]", text(r.omega_order_direct, number));
  row("order [omega] Weston", text(r.omega_order_weston, number));
  row("methods agree", text(r.omega_orders_agree, yes_no));
  row("Gorenstein order", text(r.is_gorenstein_order, yes_no));
  row("R+omega steady", text(r.steady, yes_no));
  row("R+omega basic", text(r.basic, yes_no));
  row("R+omega generator", text(r.generator, yes_no));
  row("even-order check", text(r.even_order_check, yes_no));
  row("gldim End(R+omega)", to_string(r.gldim));
  if (r.invariant_atoms.reason != Reason::NotRequested) {
    row("invariant atoms", text(r.invariant_atoms, monomial_text));
    row("omega generators", text(r.omega_generators, monomial_text));
  }
  if (r.elapsed_ms) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << *r.elapsed_ms << " ms";
    row("elapsed", ms.str());
  }
  return out.str();
}

}  // namespace quotsing
