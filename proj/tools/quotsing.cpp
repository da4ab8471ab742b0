// Command-line front end: analyze, basis, modgens, catalog, verify.
//
// Exit codes: 0 ok, 1 usage, 2 validation, 3 verification failure.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "quotsing/catalog.hpp"
#include "quotsing/error.hpp"
#include "quotsing/kernels.hpp"
#include "quotsing/parse.hpp"
#include "quotsing/report.hpp"
#include "quotsing/semigroup.hpp"
#include "quotsing/verify.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;

struct Globals {
  std::string format = "text";
  std::size_t cap = quotsing::kDefaultCap;
  std::uint64_t seed = 0;  // reserved; every algorithm is deterministic
  unsigned threads = 0;
  bool timing = false;
  std::string isa;
};

bool structured(const Globals& g) { return g.format == "structured"; }

void print_basis(const quotsing::SemigroupBasis& basis, const std::string& title, const Globals& g) {
  if (structured(g)) {
    nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
    for (const auto& m : basis.atoms) atoms.push_back(quotsing::to_json(m));
    nlohmann::ordered_json out;
    out["schema"] = "quotsing.basis/1";
    out["character"] = basis.character.evals();
    out["generators"] = std::move(atoms);
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << title << " (character " << basis.character.to_string() << "), "
            << basis.atoms.size() << " generators\n";
  for (const auto& m : basis.atoms) std::cout << "  " << m.to_string() << "\n";
}

int run_verify(const quotsing::VerifyOptions& options, const Globals& g) {
  const auto results = quotsing::verify(options);
  bool ok = true;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (structured(g)) {
      suites.push_back(nlohmann::ordered_json{
          {"suite", r.name}, {"checks", r.checks}, {"passed", r.passed()}, {"failures", r.failures}});
      continue;
    }
    std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checks << " checks)\n";
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
  }
  if (structured(g)) {
    std::cout << nlohmann::ordered_json{{"schema", "quotsing.verify/1"}, {"passed", ok}, {"suites", suites}}
                     .dump(2)
              << "\n";
  }
  return ok ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyzer for abelian quotient singularities k[[x_1..x_n]]^G"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--cap", g.cap, "Enumeration cap")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", g.seed, "Reserved; all algorithms are deterministic");
  app.add_option("--threads", g.threads, "Worker threads for sweeps (0: all cores)");
  app.add_flag("--timing", g.timing, "Include wall-clock timing in analyze reports");
  app.add_option("--isa", g.isa, "Force a kernel variant")->check(CLI::IsMember({"scalar", "avx2", "neon"}));

  std::string action_arg;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one action");
  analyze_cmd->add_option("action", action_arg, "Input file or shorthand 1/r(a1,...,an)")->required();

  auto* basis_cmd = app.add_subcommand("basis", "Hilbert basis of the invariant semigroup");
  basis_cmd->add_option("action", action_arg, "Input file or shorthand")->required();

  std::string character_arg;
  auto* modgens_cmd = app.add_subcommand("modgens", "Generators of the semi-invariant module M_c");
  modgens_cmd->add_option("action", action_arg, "Input file or shorthand")->required();
  modgens_cmd->add_option("--character", character_arg, "Tuple r1,...,rt or \"det\"")->required();

  quotsing::CatalogOptions catalog_options;
  auto* catalog_cmd = app.add_subcommand("catalog", "Sweep over cyclic actions 1/r(a_1..a_n)");
  catalog_cmd->add_option("--n-max", catalog_options.n_max, "Largest n")->capture_default_str();
  catalog_cmd->add_option("--order-max", catalog_options.order_max, "Largest r")->capture_default_str();
  catalog_cmd->add_flag("--multi-gen", catalog_options.multi_gen, "Include two-generator actions");

  quotsing::VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle suites");
  verify_cmd->add_option("--suite", verify_options.suites, "Suite to run (repeatable)")
      ->check(CLI::IsMember(quotsing::suite_names()));
  verify_cmd->add_option("--n-max", verify_options.n_max, "Largest n in the sweeps")->capture_default_str();
  verify_cmd->add_option("--order-max", verify_options.order_max, "Largest r in the sweeps")
      ->capture_default_str();
  verify_cmd->add_flag("--inject-fault", verify_options.inject_fault,
                       "Negative control: drop a Hilbert-basis atom");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!g.isa.empty()) {
      quotsing::kernels::force(g.isa == "avx2"   ? quotsing::kernels::Isa::Avx2
                               : g.isa == "neon" ? quotsing::kernels::Isa::Neon
                                                 : quotsing::kernels::Isa::Scalar);
    }
    const quotsing::SearchLimits limits{g.cap, quotsing::SearchLimits{}.candidate_cap};

    if (*analyze_cmd) {
      const auto action = quotsing::load_action(action_arg);
      const auto report = quotsing::analyze(action, {g.cap, true, g.timing});
      if (structured(g)) {
        std::cout << quotsing::to_json(report).dump(2) << "\n";
      } else {
        std::cout << quotsing::to_text(report);
      }
    } else if (*basis_cmd) {
      const auto action = quotsing::load_action(action_arg);
      print_basis(quotsing::hilbert_basis(action, limits), "invariant atoms of " + action.label(), g);
    } else if (*modgens_cmd) {
      const auto action = quotsing::load_action(action_arg);
      const auto c = quotsing::parse_character(character_arg, action);
      print_basis(quotsing::module_generators(action, c, limits), "generators of M_c for " + action.label(),
                  g);
    } else if (*catalog_cmd) {
      catalog_options.cap = g.cap;
      catalog_options.threads = g.threads;
      const auto cat = quotsing::catalog(catalog_options);
      if (structured(g)) {
        std::cout << quotsing::to_json(cat).dump(2) << "\n";
      } else {
        std::cout << quotsing::to_text(cat);
      }
    } else if (*verify_cmd) {
      verify_options.cap = g.cap;
      verify_options.threads = g.threads;
      return run_verify(verify_options, g);
    }
  } catch (const quotsing::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == quotsing::ErrorCode::Precondition ? kExitUsage : kExitValidation;
  }
  return 0;
}
