#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tzlab/errors.hpp"
#include "tzlab/experiments.hpp"

using namespace tzlab;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n = 64;
  cfg.eps = 1e-7;  // pass bounds match the shallow correlation depth below
  cfg.samples = 200;
  cfg.bound_zplus = Rational(20);
  cfg.nf_len = 3;
  cfg.nf_modes = 8;
  cfg.corr_depth = 1 << 18;
  cfg.tower_depth = 2;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.n = 8;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = ExperimentConfig{};
  cfg.eps = 0.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = ExperimentConfig{};
  cfg.gamma_hi = Rational(1);
  cfg.gamma_lo = Rational(2);
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(run_experiment("nonsense", ExperimentConfig{}), ConfigError);
}

TEST_CASE("counterexample driver separates the witness") {
  ExperimentConfig cfg = small_config();
  cfg.n = 128;
  const ExperimentReport report = run_counterexample(cfg);
  CHECK(report.pass);
  CHECK(report.claim == "theorem2-ninv");
  CHECK(report.results.at("lhs_norm") == 0.0);
  const double expected = std::exp(-1.0) * std::sqrt(1.0 - std::exp(-2.0));
  CHECK(std::fabs(report.results.at("rhs_norm").get<double>() - expected) <= 1e-6);
  // raw truncated norm visibly undershoots; the certified tail closes the gap
  CHECK(report.results.at("rhs_norm_truncated").get<double>() < expected - 1e-4);
  CHECK(std::fabs(report.results.at("scalar")[0].get<double>() - std::exp(-1.0)) <= 1e-9);
}

TEST_CASE("counterexample with a monomial factor shifts the witness index") {
  ExperimentConfig cfg = small_config();
  cfg.n = 128;
  cfg.monomial_order = 1;
  const ExperimentReport report = run_counterexample(cfg);
  CHECK(report.pass);
  CHECK(report.results.at("lhs_norm") == 0.0);
}

TEST_CASE("counterexample is inapplicable for pure shift powers") {
  ExperimentConfig cfg = small_config();
  cfg.t = 0.0;
  cfg.monomial_order = 1;
  const ExperimentReport report = run_counterexample(cfg);
  CHECK(report.pass);
  CHECK(report.results.at("applicable") == false);
}

TEST_CASE("dichotomy driver") {
  ExperimentConfig cfg = small_config();
  const ExperimentReport report = run_dichotomy(cfg);
  CHECK(report.pass);
  CHECK(report.results.at("blaschke").at("error_at_128").get<double>() <= 1e-6);
  CHECK(report.results.at("singular").at("min_error").get<double>() >= 0.5);
}

TEST_CASE("dichotomy partial sums are exact for monomials") {
  ExperimentConfig cfg = small_config();
  cfg.blaschke_zeros.clear();
  cfg.monomial_order = 3;  // partial sums of z^3 are exact from degree 3 on
  const ExperimentReport report = run_dichotomy(cfg);
  CHECK(report.pass);
  CHECK(report.results.at("blaschke").at("profile").at("4").get<double>() <= 1e-14);
  CHECK(report.results.at("blaschke").at("profile").at("2").get<double>() > 0.5);
}

TEST_CASE("wold driver") {
  const ExperimentReport report = run_wold(small_config());
  CHECK(report.pass);
  CHECK(report.results.at("interleaved_pi1").at("wandering_dim") == 2);
}

TEST_CASE("extension driver") {
  const ExperimentReport report = run_extension(small_config());
  CHECK(report.pass);
  CHECK(report.results.at("t_squared_equals_pi1_gap") == 0.0);
  CHECK(report.results.at("adjoint_noncommutation_norm") == 1.0);
  CHECK(report.results.at("normal_form").at("misses").empty());
}

TEST_CASE("regular driver") {
  const ExperimentReport report = run_regular(small_config());
  CHECK(report.pass);
  CHECK(report.results.at("zplus").at("failures") == 0);
  CHECK(report.results.at("qn").at("failures") == 0);
  CHECK(report.results.at("gamma").at("failures") == 0);
}

TEST_CASE("factorize driver") {
  ExperimentConfig cfg = small_config();
  cfg.n = 256;
  cfg.corr_depth = 1 << 20;
  const ExperimentReport report = run_factorize(cfg);
  CHECK(report.pass);
  CHECK(report.results.at("case") == "two");
  CHECK(report.results.at("identity_ok") == true);
}

TEST_CASE("tower and gamma drivers") {
  ExperimentConfig cfg = small_config();
  cfg.n = 128;
  cfg.corr_depth = 1 << 20;
  const ExperimentReport tower = run_tower(cfg);
  CHECK(tower.pass);
  CHECK(tower.results.at("levels").size() == 3);

  const ExperimentReport gamma = run_gamma(cfg);
  CHECK(gamma.pass);
  CHECK(gamma.results.at("cases").size() == 4);
}

TEST_CASE("run_all aggregates eight experiments in name order") {
  ExperimentConfig cfg = small_config();
  cfg.n = 128;
  const Summary summary = run_all(cfg);
  REQUIRE(summary.reports.size() == 8);
  const char* names[] = {"counterexample", "dichotomy", "extension", "factorize",
                         "gamma",          "regular",   "tower",     "wold"};
  for (int i = 0; i < 8; ++i) CHECK(summary.reports[i].experiment == names[i]);
  CHECK(summary.all_pass);
  CHECK(summary.exit_code() == 0);
  CHECK(summary.skipped == 0);
  const auto j = summary.to_json();
  CHECK(j.at("summary").at("total") == 8);
}

TEST_CASE("degenerate truncation skips singular-symbol experiments") {
  ExperimentConfig cfg = small_config();
  cfg.n = 16;
  cfg.nf_modes = 4;
  const Summary summary = run_all(cfg);
  CHECK(summary.skipped > 0);
  CHECK(summary.exit_code() == 0);  // skips are listed, not failures
  bool counterexample_skipped = false;
  for (const auto& r : summary.reports)
    if (r.experiment == "counterexample") counterexample_skipped = r.skipped;
  CHECK(counterexample_skipped);
}

TEST_CASE("reports are byte-identical across runs") {
  ExperimentConfig cfg = small_config();
  const Summary a = run_all(cfg);
  const Summary b = run_all(cfg);
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("report json schema") {
  const ExperimentReport report = run_wold(small_config());
  const auto j = report.to_json();
  for (const char* key : {"experiment", "claim", "params", "results", "pass", "skipped"})
    CHECK(j.contains(key));
  CHECK(j.at("params").contains("seed"));
}
