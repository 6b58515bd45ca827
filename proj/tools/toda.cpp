// Command-line front end for the Toda characteristic-integral engine.
//
// Subcommands:
//   quick <algebra>   factorized-operator pipeline (non-branching families)
//   ds <algebra>      gauge reduction of -d_x + epsilon + u to a Kostant slice
//   verify <target>   run an independent checker on an algebra or a JSON file
//
// Exit codes: 0 success, 1 usage or parse error, 2 unsupported request,
// 3 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toda/diffop.hpp"
#include "toda/dsgauge.hpp"
#include "toda/errors.hpp"
#include "toda/serialize.hpp"
#include "toda/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitCheckFailed = 3;

void print_integral_set(const toda::IntegralSet& set, const std::string& format) {
  if (format == "json")
    std::cout << toda::to_json(set) << "\n";
  else if (format == "latex")
    std::cout << toda::to_latex(set);
  else
    std::cout << toda::to_text(set);
}

int run_quick(const std::string& algebra, const std::string& format) {
  const toda::AlgebraSpec spec = toda::AlgebraSpec::parse(algebra);
  const toda::IntegralSet set =
      toda::extract_integrals(toda::factorized_product(spec), spec);
  print_integral_set(set, format);
  return kExitOk;
}

int run_ds(const std::string& algebra, const std::string& slice,
           const std::string& format) {
  const toda::AlgebraSpec spec = toda::AlgebraSpec::parse(algebra);
  const toda::SliceStyle style = toda::slice_style_parse(slice);
  const toda::GaugeResult result = toda::reduce_to_slice(spec, style);
  if (format == "json")
    std::cout << toda::to_json(result) << "\n";
  else
    print_integral_set(result.integrals, format);
  return kExitOk;
}

// Renders a report and converts it into a process exit status.
int finish_check(const toda::CheckReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << toda::to_json(report) << "\n";
  } else if (report.ok) {
    std::cout << "PASS\n";
  } else {
    std::cout << "FAIL: " << report.residual_terms
              << " residual monomial(s); first witnesses:\n";
    for (const auto& witness : report.first_failing_monomials)
      std::cout << "  " << witness << "\n";
  }
  return report.ok ? kExitOk : kExitCheckFailed;
}

toda::CheckReport report_from_j_relations(const toda::JRelationReport& jr,
                                          const toda::AlgebraSpec& spec) {
  toda::CheckReport report;
  report.ok = jr.ok;
  const toda::Naming naming = toda::naming_for(spec);
  for (const auto& [label, diff] : jr.failures) {
    report.residual_terms += static_cast<long>(diff.term_count());
    if (report.first_failing_monomials.size() < 3 && !diff.is_zero())
      report.first_failing_monomials.push_back(
          label + ": " + toda::monomial_text(diff.terms().begin()->first, naming));
  }
  return report;
}

// The integral set used when `verify` is pointed at an algebra name rather
// than a file: the factorized pipeline where it applies, the gauge
// reduction for the branching family D.
toda::IntegralSet pipeline_set(const toda::AlgebraSpec& spec) {
  if (spec.family == toda::Family::D)
    return toda::reduce_to_slice(spec, toda::SliceStyle::canonical).integrals;
  return toda::extract_integrals(toda::factorized_product(spec), spec);
}

int run_verify(const std::string& target, const std::string& mode,
               const std::string& format) {
  // An argument that parses as an algebra name selects the built-in
  // pipeline; anything else is read as an IntegralSet JSON file.
  bool is_spec = true;
  toda::AlgebraSpec spec;
  try {
    spec = toda::AlgebraSpec::parse(target);
  } catch (const std::invalid_argument&) {
    is_spec = false;
  }

  toda::IntegralSet set;
  if (is_spec) {
    if (mode != "zero-curvature") set = pipeline_set(spec);
  } else {
    std::ifstream in(target);
    if (!in) {
      std::cerr << "error: cannot open '" << target
                << "' (not an algebra name or a readable file)\n";
      return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    set = toda::integral_set_from_json(buffer.str());
    spec = set.spec;
  }

  if (mode == "integrals") {
    toda::CheckReport report = toda::check_integral_set(set);
    const toda::CheckReport degrees = toda::check_degrees(set, spec);
    report.ok = report.ok && degrees.ok;
    report.residual_terms += degrees.residual_terms;
    for (const auto& witness : degrees.first_failing_monomials)
      if (report.first_failing_monomials.size() < 3)
        report.first_failing_monomials.push_back(witness);
    return finish_check(report, format);
  }
  if (mode == "zero-curvature")
    return finish_check(toda::check_zero_curvature(spec), format);
  if (mode == "degrees")
    return finish_check(toda::check_degrees(set, spec), format);
  // mode == "g2-relations"
  return finish_check(report_from_j_relations(toda::check_j_relations_g2(set), spec),
                      format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact characteristic integrals of two-dimensional Toda field theories.\n"
      "Algebras are named A1, A2, ..., B2, C3, D4, G2."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "toda 1.0.0");

  std::string algebra;
  std::string format = "text";
  std::string slice = "canonical";
  std::string target;
  std::string mode = "integrals";

  const auto format_check = CLI::IsMember({"text", "latex", "json"});

  CLI::App* quick = app.add_subcommand(
      "quick", "Compute integrals by composing the factorized operator");
  quick->add_option("algebra", algebra, "Algebra name, e.g. A2 or G2")
      ->required();
  quick->add_option("--format", format, "Output format")
      ->check(format_check)
      ->capture_default_str();

  CLI::App* ds = app.add_subcommand(
      "ds", "Compute integrals by gauge reduction to a Kostant slice");
  ds->add_option("algebra", algebra, "Algebra name, e.g. A2 or D4")->required();
  ds->add_option("--slice", slice,
                 "Slice style: canonical, or reference (D4 only)")
      ->capture_default_str();
  ds->add_option("--format", format,
                 "Output format (json includes gauge element and transcript)")
      ->check(format_check)
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "Check integrals: algebra name runs the pipeline first, "
                "a path is read as IntegralSet JSON");
  verify->add_option("target", target, "Algebra name or JSON file path")
      ->required();
  verify->add_option("--mode", mode, "Checker to run")
      ->check(CLI::IsMember({"integrals", "zero-curvature", "degrees",
                             "g2-relations"}))
      ->capture_default_str();
  verify->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests carry exit code 0; genuine parse errors map to 1.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (quick->parsed()) return run_quick(algebra, format);
    if (ds->parsed()) return run_ds(algebra, slice, format);
    return run_verify(target, mode, format);
  } catch (const toda::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
