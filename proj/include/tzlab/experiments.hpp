#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tzlab/rational.hpp"
#include "tzlab/types.hpp"

namespace tzlab {

/// Shared knobs for the experiment drivers. Every report records the full
/// parameter set including the seed, and identical configs produce
/// byte-identical reports.
struct ExperimentConfig {
  int n{512};            // truncation (total dimension, 16..8192)
  double eps{1e-8};      // tolerance budget, (0, 1e-2]
  double t{1.0};         // atom mass of the singular symbol
  int monomial_order{0}; // extra z^p factor for the witness and dichotomy symbols
  std::uint64_t seed{1};

  // word checks
  int word_len{6};
  int samples{1000};

  // normal-form enumeration (its own small space: dim = 2 * nf_modes)
  int nf_len{6};
  int nf_modes{32};

  // tower / factorization
  int tower_base{2};
  int tower_depth{3};
  long long factor_m{3};
  long long factor_n{2};
  long corr_depth{1L << 22};

  // exact semigroup windows
  Rational gamma_lo{1414213, 1000000};
  Rational gamma_hi{1414214, 1000000};
  Rational bound_zplus{50};
  Rational bound_qn{2};
  Rational bound_gamma{6};
  int qn_depth{3};
  long search_bound{16};

  // approximation dichotomy
  std::vector<Complex> blaschke_zeros{{0.3, 0.0}, {0.0, 0.5}};

  /// Throws ConfigError when outside the contract.
  void validate() const;
};

struct ExperimentReport {
  std::string experiment;
  std::string claim;  // stable identifier of the verified statement
  nlohmann::json params;
  nlohmann::json results;
  bool pass{false};
  bool skipped{false};
  std::string skip_reason;

  nlohmann::json to_json() const;
};

ExperimentReport run_counterexample(const ExperimentConfig& cfg);
ExperimentReport run_dichotomy(const ExperimentConfig& cfg);
ExperimentReport run_wold(const ExperimentConfig& cfg);
ExperimentReport run_extension(const ExperimentConfig& cfg);
ExperimentReport run_regular(const ExperimentConfig& cfg);
ExperimentReport run_factorize(const ExperimentConfig& cfg);
ExperimentReport run_tower(const ExperimentConfig& cfg);
ExperimentReport run_gamma(const ExperimentConfig& cfg);

struct Summary {
  std::vector<ExperimentReport> reports;  // ordered by experiment name
  bool all_pass{false};
  int failed{0};
  int skipped{0};

  /// 0 all pass, 1 at least one failure; skips do not fail the run.
  int exit_code() const { return failed == 0 ? 0 : 1; }
  nlohmann::json to_json() const;
};

/// Runs every experiment; a hard error aborts only that experiment and is
/// reported in its entry.
Summary run_all(const ExperimentConfig& cfg);

/// Guarded single-experiment entry point: SafeSubspaceEmpty becomes a skip,
/// any other error a failure report. Throws ConfigError for unknown names.
ExperimentReport run_experiment(const std::string& name, const ExperimentConfig& cfg);

}  // namespace tzlab
