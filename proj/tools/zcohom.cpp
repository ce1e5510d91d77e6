// zcohom: exact 0-cohomology of finite monoids with zero.
//
// Subcommands: validate | nerve | cohomology | cd-probe | resolution-check |
// psi-check | zero-cancellative. Reports are byte-deterministic on stdout;
// timing goes to stderr. Exit codes: 0 success, 1 mathematical check failed,
// 2 input error.

#include "zcohom/formats.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

namespace {

using namespace zcohom;

constexpr std::size_t kSizeGuardrail = 12;
constexpr std::size_t kDegreeGuardrail = 3;

struct CommonArgs {
  std::string monoid;
  std::string coeff = "trivial-Z";
  std::size_t max_degree = 0;
  bool force = false;
  unsigned long seed = 20240917;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args, std::size_t default_degree, bool with_coeff) {
  cmd->add_option("--monoid", args.monoid, "builtin name or path to a monoid JSON file")
      ->required();
  if (with_coeff)
    cmd->add_option("--coeff", args.coeff,
                    "builtin name (trivial-Z, bar:<n>, zero-module:z<k>:...) or path to a "
                    "coefficient JSON file");
  args.max_degree = default_degree;
  cmd->add_option("--max-degree", args.max_degree, "top cohomological degree");
  cmd->add_flag("--force", args.force, "override the size/degree guardrails");
  cmd->add_option("--seed", args.seed, "seed recorded for reproducibility");
  cmd->add_option("--format", args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

void enforce_guardrail(const MonoidWithZero& m, const CommonArgs& args) {
  if (args.force) return;
  if (m.size() > kSizeGuardrail)
    throw ParseError("--monoid", "monoid has " + std::to_string(m.size()) +
                                     " elements, above the guardrail of " +
                                     std::to_string(kSizeGuardrail) + "; pass --force to proceed");
  if (args.max_degree > kDegreeGuardrail)
    throw ParseError("--max-degree", "degree above the guardrail of " +
                                         std::to_string(kDegreeGuardrail) +
                                         "; pass --force to proceed");
}

class Stopwatch {
 public:
  ~Stopwatch() {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << " ms\n";
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_validate(const CommonArgs& args) {
  ReportFormat format = parse_report_format(args.format);
  MonoidWithZero m = resolve_monoid(args.monoid);  // throws on invalid tables
  std::cout << render_validate_report(m, args.monoid, format);
  return 0;
}

int run_nerve(const CommonArgs& args) {
  ReportFormat format = parse_report_format(args.format);
  MonoidWithZero m = resolve_monoid(args.monoid);
  enforce_guardrail(m, args);
  std::cout << render_nerve_report(m, args.monoid, args.max_degree, format);
  return 0;
}

int run_cohomology(const CommonArgs& args) {
  ReportFormat format = parse_report_format(args.format);
  MonoidWithZero m = resolve_monoid(args.monoid);
  enforce_guardrail(m, args);
  NaturalSystem d = resolve_coefficient(args.coeff, m);
  Stopwatch timer;
  std::vector<AbelianInvariants> groups;
  for (std::size_t n = 0; n <= args.max_degree; ++n) groups.push_back(cohomology_group(m, d, n));
  std::cout << render_cohomology_report(m, args.monoid, d.label, args.max_degree, groups, format);
  return 0;
}

int run_cd_probe(const CommonArgs& args) {
  ReportFormat format = parse_report_format(args.format);
  MonoidWithZero m = resolve_monoid(args.monoid);
  enforce_guardrail(m, args);
  Stopwatch timer;
  CdReport report = cd_probe(m, default_battery(m), args.max_degree);
  std::cout << render_cd_report(args.monoid, report, format);
  return 0;
}

int run_resolution_check(const CommonArgs& args) {
  ReportFormat format = parse_report_format(args.format);
  MonoidWithZero m = resolve_monoid(args.monoid);
  enforce_guardrail(m, args);
  Stopwatch timer;
  ResolutionCheckResult result = resolution_check(m, args.max_degree);
  std::cout << render_resolution_report(args.monoid, args.max_degree, result, format);
  return result.ok ? 0 : 1;
}

int run_psi_check(const CommonArgs& args) {
  ReportFormat format = parse_report_format(args.format);
  MonoidWithZero m = resolve_monoid(args.monoid);
  enforce_guardrail(m, args);
  NaturalSystem d = resolve_coefficient(args.coeff, m);
  Stopwatch timer;
  PsiCheckResult result = psi_check(m, d, args.max_degree);
  std::cout << render_psi_report(args.monoid, d.label, args.max_degree, result, format);
  return result.ok ? 0 : 1;
}

int run_zero_cancellative(const CommonArgs& args) {
  ReportFormat format = parse_report_format(args.format);
  MonoidWithZero m = resolve_monoid(args.monoid);
  std::cout << render_cancellativity_report(m, args.monoid, is_zero_cancellative(m), format);
  return 0;
}

void print_builtins() {
  std::cout << "builtin monoids:\n";
  for (const std::string& name : builtin_monoid_names()) std::cout << "  " << name << "\n";
  std::cout << "builtin coefficient kinds:\n";
  for (const std::string& name : builtin_coefficient_kinds()) std::cout << "  " << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 0-cohomology of finite monoids with zero"};
  app.require_subcommand(0, 1);
  bool list_builtins = false;
  app.add_flag("--list-builtins", list_builtins, "list builtin monoids and coefficient kinds");

  CommonArgs validate_args, nerve_args, cohomology_args, cd_args, resolution_args, psi_args,
      cancel_args;

  CLI::App* cmd_validate = app.add_subcommand("validate", "check the monoid-with-zero laws");
  add_common(cmd_validate, validate_args, 0, false);
  cmd_validate->get_option("--max-degree")->group("");  // not meaningful here

  CLI::App* cmd_nerve = app.add_subcommand("nerve", "sizes of the nerve sets Ner_n");
  add_common(cmd_nerve, nerve_args, 3, false);

  CLI::App* cmd_cohomology =
      app.add_subcommand("cohomology", "cohomology groups H^0..H^N as invariant factors");
  add_common(cmd_cohomology, cohomology_args, 2, true);

  CLI::App* cmd_cd =
      app.add_subcommand("cd-probe", "vanishing evidence for H^n, n >= 2, over a battery");
  add_common(cmd_cd, cd_args, 3, false);

  CLI::App* cmd_resolution =
      app.add_subcommand("resolution-check", "bar complex is an exact augmented complex");
  add_common(cmd_resolution, resolution_args, 3, false);

  CLI::App* cmd_psi = app.add_subcommand(
      "psi-check", "the Hom-complex and cochain-complex comparison isomorphism");
  add_common(cmd_psi, psi_args, 2, true);

  CLI::App* cmd_cancel =
      app.add_subcommand("zero-cancellative", "the 0-cancellativity predicate with witness");
  add_common(cmd_cancel, cancel_args, 0, false);
  cmd_cancel->get_option("--max-degree")->group("");

  try {
    app.parse(argc, argv);
    if (list_builtins) {
      print_builtins();
      return 0;
    }
    if (cmd_validate->parsed()) return run_validate(validate_args);
    if (cmd_nerve->parsed()) return run_nerve(nerve_args);
    if (cmd_cohomology->parsed()) return run_cohomology(cohomology_args);
    if (cmd_cd->parsed()) return run_cd_probe(cd_args);
    if (cmd_resolution->parsed()) return run_resolution_check(resolution_args);
    if (cmd_psi->parsed()) return run_psi_check(psi_args);
    if (cmd_cancel->parsed()) return run_zero_cancellative(cancel_args);
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NotAssociative& e) {
    std::cerr << "invalid monoid: " << e.what() << "\n";
    return 1;
  } catch (const BadIdentity& e) {
    std::cerr << "invalid monoid: " << e.what() << "\n";
    return 1;
  } catch (const BadZero& e) {
    std::cerr << "invalid monoid: " << e.what() << "\n";
    return 1;
  } catch (const IdentityEqualsZero& e) {
    std::cerr << "invalid monoid: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
