// piset: element-order spectra, solvability and IES classification.
//
// Exit status: 0 success, 1 check failure / mismatch / violation,
// 2 usage or input error (including an exceeded enumeration cap).

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "piset/catalog.hpp"
#include "piset/errors.hpp"
#include "piset/genfile.hpp"
#include "piset/ies.hpp"
#include "piset/serialize.hpp"
#include "piset/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string format = "text";
  std::uint64_t cap = piset::kDefaultCap;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_option("--cap", common.cap, "Maximum number of group elements to enumerate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

struct GroupArgs {
  std::string spec;
  std::string gens;
};

void add_group_args(CLI::App* cmd, GroupArgs& args) {
  auto* spec = cmd->add_option("group", args.spec, "Group: A5, Alt:n, L2:q, Sz:q or L3_3");
  auto* gens = cmd->add_option("--gens", args.gens, "Generator file (JSON)");
  spec->excludes(gens);
  gens->excludes(spec);
}

std::string group_label(const GroupArgs& args) { return args.gens.empty() ? args.spec : args.gens; }

piset::Group load_group(const GroupArgs& args, std::uint64_t cap) {
  if (!args.gens.empty()) return piset::load_generator_file(args.gens);
  if (args.spec.empty()) throw piset::InvalidInput("give a group spec or --gens <file>");
  return piset::construct(piset::GroupSpec::parse(args.spec), cap);
}

int cmd_spectrum(const GroupArgs& args, std::string method, const CommonOptions& common) {
  const bool from_file = !args.gens.empty();
  if (!from_file && args.spec.empty()) throw piset::InvalidInput("give a group spec or --gens <file>");
  std::optional<piset::GroupSpec> spec;
  if (!from_file) spec = piset::GroupSpec::parse(args.spec);

  if (method.empty()) {
    const bool has_formula = spec && !(spec->family() == piset::Family::Alt && spec->parameter() != 5);
    method = has_formula ? "formula" : "enumerate";
  }
  if (from_file && method != "enumerate")
    throw piset::InvalidInput("generator files only support --method enumerate");

  piset::SpectrumQuery query{group_label(args), method, std::nullopt, std::nullopt, std::nullopt};
  if (method == "formula" || method == "both") query.formula = piset::spectrum_formula(*spec);
  if (method == "enumerate" || method == "both") {
    const piset::Group group = load_group(args, common.cap);
    query.enumerated = piset::spectrum_enumerate(group, common.cap);
    query.order = piset::enumerate(group, common.cap).size();
  }

  if (common.format == "structured") {
    std::cout << piset::to_json(query);
  } else {
    std::cout << "group: " << query.group << "\n";
    if (query.formula) std::cout << "formula:    " << query.formula->to_string() << "\n";
    if (query.enumerated)
      std::cout << "enumerated: " << query.enumerated->to_string() << "  (order " << *query.order << ")\n";
    if (query.formula && query.enumerated) std::cout << (query.matches() ? "match" : "MISMATCH") << "\n";
  }
  return query.matches() ? kExitOk : kExitCheckFailed;
}

int cmd_solvable(const GroupArgs& args, const CommonOptions& common) {
  const piset::Group group = load_group(args, common.cap);
  const piset::SolvableQuery query{group_label(args), piset::is_solvable(group, common.cap)};
  if (common.format == "structured") {
    std::cout << piset::to_json(query);
    return kExitOk;
  }
  std::cout << "group: " << query.group << "\n"
            << (query.report.solvable ? "solvable" : "non-solvable") << "\nderived series orders: [";
  for (std::size_t i = 0; i < query.report.series_orders.size(); ++i)
    std::cout << (i ? ", " : "") << query.report.series_orders[i];
  std::cout << "]\n";
  return kExitOk;
}

int cmd_ies(const std::string& action, const std::string& set_text, std::uint64_t bound,
            const CommonOptions& common) {
  const piset::CandidateSet set = piset::CandidateSet::parse(set_text);
  const bool structured = common.format == "structured";

  if (action == "classify" || action == "witness") {
    piset::IESVerdict verdict = piset::classify(set);
    if (action == "witness" && !verdict.is_ies) verdict = piset::witness(set);
    if (structured) {
      std::cout << piset::to_json(verdict);
      return kExitOk;
    }
    std::cout << set.to_string() << ": ";
    if (verdict.is_ies) {
      std::cout << "IES, basis " << piset::CandidateSet(verdict.basis).to_string() << "\n";
      if (action == "witness") std::cout << "no witness: every group missing these orders is solvable\n";
      return kExitOk;
    }
    std::cout << "not IES\n";
    if (verdict.witness) {
      std::cout << "witness: " << verdict.witness->to_string() << "\n"
                << "spectrum: " << verdict.witness_spectrum->to_string() << "\n"
                << "scanned:";
      for (const auto& s : verdict.scanned) std::cout << " " << s.to_string();
      std::cout << "\n";
    }
    return kExitOk;
  }

  const piset::EmpiricalReport report = piset::empirical_check(set, bound, common.cap);
  const bool failed = report.classified_ies && !report.violations.empty();
  if (structured) {
    std::cout << piset::to_json(report);
    return failed ? kExitCheckFailed : kExitOk;
  }
  std::cout << set.to_string() << ": " << (report.classified_ies ? "IES" : "not IES") << "\n";
  for (const auto& e : report.entries) {
    std::cout << "  " << e.name;
    if (e.skipped) {
      std::cout << "  skipped (" << e.note << ")\n";
      continue;
    }
    std::cout << "  order " << e.order << "  " << e.spectrum->to_string() << "  "
              << (e.disjoint ? "disjoint" : "meets T") << ", " << (e.solvable ? "solvable" : "non-solvable")
              << (e.violation() ? "  <-- violation" : "") << "\n";
  }
  std::cout << report.violations.size() << " violation(s)\n";
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_verify(const piset::VerifyOptions& options, const CommonOptions& common) {
  const piset::VerifyReport report = piset::run_reproduction_suite(options);
  if (common.format == "structured") {
    std::cout << piset::to_json(report);
  } else {
    for (const auto& c : report.checks)
      std::cout << "[" << piset::to_string(c.status) << "] " << c.name << (c.detail.empty() ? "" : "  -- ")
                << c.detail << "\n";
    std::cout << report.count(piset::CheckStatus::Pass) << " passed, " << report.count(piset::CheckStatus::Fail)
              << " failed, " << report.count(piset::CheckStatus::Skip) << " skipped\n";
  }
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Element-order spectra, solvability and IES-set classification for finite groups"};
  app.require_subcommand(1);

  CommonOptions common;
  GroupArgs group_args;
  std::string method;
  std::string set_text;
  std::uint64_t bound = 13;
  piset::VerifyOptions verify_options;

  auto* spectrum = app.add_subcommand("spectrum", "Print the set of element orders of a group");
  add_group_args(spectrum, group_args);
  spectrum->add_option("--method", method, "formula, enumerate or both (default: formula when available)")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}));
  add_common(spectrum, common);

  auto* solvable = app.add_subcommand("solvable", "Compute the derived series");
  add_group_args(solvable, group_args);
  add_common(solvable, common);

  auto* ies = app.add_subcommand("ies", "Classify candidate sets of element orders");
  ies->require_subcommand(1);
  std::string ies_action;
  for (const char* action : {"classify", "witness", "check"}) {
    auto* sub = ies->add_subcommand(action);
    sub->add_option("set", set_text, "Comma-separated integers >= 2, e.g. 3,5")->required();
    add_common(sub, common);
    if (std::string(action) == "check")
      sub->add_option("--bound", bound, "Parameter bound for the minimal simple groups")->capture_default_str();
    sub->callback([&ies_action, action] { ies_action = action; });
  }
  ies->get_subcommand("classify")->description("Decide whether T is an IES-set");
  ies->get_subcommand("witness")->description("Find a non-solvable group whose spectrum misses T");
  ies->get_subcommand("check")->description("Test the IES implication on the desk-scale corpus");

  auto* verify = app.add_subcommand("verify-paper", "Run the full reproduction suite");
  verify->add_option("--rng-seed", verify_options.rng_seed, "Seed for randomized checks")->capture_default_str();
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(group_args, method, common);
    if (*solvable) return cmd_solvable(group_args, common);
    if (*ies) return cmd_ies(ies_action, set_text, bound, common);
    verify_options.cap = common.cap;
    return cmd_verify(verify_options, common);
  } catch (const piset::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const piset::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (found " << e.partial() << "); raise --cap\n";
  } catch (const piset::ValidationFailed& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const piset::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
