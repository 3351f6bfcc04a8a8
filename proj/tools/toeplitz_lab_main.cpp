// toeplitz-lab: experiment drivers for inner-function Toeplitz operators,
// their *-semigroup words, and exact regular representations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "tzlab/errors.hpp"
#include "tzlab/experiments.hpp"

namespace {

tzlab::Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return tzlab::Rational(std::stoll(text));
  return tzlab::Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

void print_human(const tzlab::ExperimentReport& report) {
  const char* status = report.skipped ? "SKIP" : report.pass ? "PASS" : "FAIL";
  std::cout << status << "  " << report.experiment << "  [" << report.claim << "]\n";
  if (report.skipped) {
    std::cout << "      " << report.skip_reason << "\n";
    return;
  }
  for (const auto& [key, value] : report.results.items())
    std::cout << "      " << key << " = " << value.dump() << "\n";
}

int write_out(const std::string& path, const nlohmann::json& payload) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot open output file " << path << "\n";
    return 2;
  }
  out << payload.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toeplitz-lab: finite-truncation experiments on inner-function "
               "Toeplitz operators and inverse semigroups"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  tzlab::ExperimentConfig cfg;
  std::string out_path;
  bool as_json = false;
  std::string t_lo = "1414213/1000000", t_hi = "1414214/1000000";

  app.add_option("--n", cfg.n, "truncation dimension (16..8192)")->capture_default_str();
  app.add_option("--eps", cfg.eps, "tolerance budget")->capture_default_str();
  app.add_option("--t", cfg.t, "atom mass of the singular symbol")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed recorded in reports")->capture_default_str();
  app.add_option("--out", out_path, "write the JSON report to this path");
  app.add_flag("--json", as_json, "print the JSON report instead of the table");

  auto* counterexample = app.add_subcommand("counterexample", "non-inverse witness word");
  counterexample->add_option("--order", cfg.monomial_order, "monomial order of the symbol");

  app.add_subcommand("dichotomy", "uniform polynomial approximation: Blaschke vs singular");
  app.add_subcommand("wold", "wandering subspaces of shift-type isometries");

  auto* extension = app.add_subcommand("extension", "two-component interleaved extension");
  extension->add_option("--len", cfg.nf_len, "normal-form enumeration length")->capture_default_str();
  extension->add_option("--modes", cfg.nf_modes, "modes per component for the enumeration")
      ->capture_default_str();

  auto* regular = app.add_subcommand("regular", "exact regular-representation law checks");
  regular->add_option("--len", cfg.word_len, "max sampled word length")->capture_default_str();
  regular->add_option("--samples", cfg.samples, "sampled words per semigroup")->capture_default_str();

  auto* factorize = app.add_subcommand("factorize", "Euclid factorization of T_{Phi_{1/n}}");
  factorize->add_option("--m", cfg.factor_m, "numerator of t = m/n")->capture_default_str();
  factorize->add_option("--q", cfg.factor_n, "denominator of t = m/n")->capture_default_str();

  auto* tower = app.add_subcommand("tower", "nested Toeplitz algebra tower");
  tower->add_option("--base", cfg.tower_base, "tower base")->capture_default_str();
  tower->add_option("--depth", cfg.tower_depth, "tower depth")->capture_default_str();

  auto* gamma = app.add_subcommand("gamma", "three-case representation of m + n t");
  gamma->add_option("--t-lo", t_lo, "rational lower bound for t, as num/den")->capture_default_str();
  gamma->add_option("--t-hi", t_hi, "rational upper bound for t, as num/den")->capture_default_str();

  app.add_subcommand("all", "run every experiment and aggregate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are config errors
  }

  try {
    cfg.gamma_lo = parse_rational(t_lo);
    cfg.gamma_hi = parse_rational(t_hi);
    cfg.validate();

    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "all") {
      const tzlab::Summary summary = tzlab::run_all(cfg);
      const nlohmann::json payload = summary.to_json();
      if (as_json) {
        std::cout << payload.dump(2) << "\n";
      } else {
        for (const auto& report : summary.reports) print_human(report);
        std::cout << (summary.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "  (failed "
                  << summary.failed << ", skipped " << summary.skipped << ")\n";
      }
      if (!out_path.empty())
        if (int rc = write_out(out_path, payload)) return rc;
      return summary.exit_code();
    }

    const tzlab::ExperimentReport report = tzlab::run_experiment(sub, cfg);
    const nlohmann::json payload = report.to_json();
    if (as_json)
      std::cout << payload.dump(2) << "\n";
    else
      print_human(report);
    if (!out_path.empty())
      if (int rc = write_out(out_path, payload)) return rc;
    return report.skipped || report.pass ? 0 : 1;
  } catch (const tzlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const tzlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
