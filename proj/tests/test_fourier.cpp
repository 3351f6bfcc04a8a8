#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "quad_oracle.hpp"
#include "tzlab/fourier.hpp"
#include "tzlab/laguerre.hpp"

using namespace tzlab;

TEST_CASE("atom coefficients: leading Laguerre values") {
  const FourierSeries s = fourier_coeffs(phi_t(1.0), 8);
  CHECK(std::abs(s.coeffs[0] - Complex(std::exp(-1.0), 0)) < 1e-15);
  CHECK(std::abs(s.coeffs[1] - Complex(-2 * std::exp(-1.0), 0)) < 1e-15);
  CHECK(std::abs(s.coeffs[2]) < 1e-15);  // L_2(2) = L_1(2)
}

TEST_CASE("monomial coefficients") {
  const FourierSeries s = fourier_coeffs(InnerFunction::monomial(3), 6);
  for (int k = 0; k < 6; ++k)
    CHECK(std::abs(s.coeffs[k] - Complex(k == 3 ? 1.0 : 0.0, 0)) < 1e-16);
  CHECK(s.tail_bound == 0.0);
}

TEST_CASE("blaschke factor closed form and Parseval") {
  const Complex a(0.5, -0.3);
  const FourierSeries s = fourier_coeffs(InnerFunction::blaschke({{a, 1}}), 512);
  CHECK(std::abs(s.coeffs[0] - Complex(std::abs(a), 0)) < 1e-15);
  const Complex lead = (std::abs(a) / a) * (std::norm(a) - 1.0);
  CHECK(std::abs(s.coeffs[1] - lead) < 1e-15);
  CHECK(std::abs(s.coeffs[3] - lead * std::pow(std::conj(a), 2)) < 1e-15);
  CHECK(s.energy() <= 1.0 + 1e-12);
  CHECK(s.tail_bound < 1e-15);
}

TEST_CASE("Parseval approaches 1 for finite Blaschke products") {
  const InnerFunction phi(1, {{Complex(0.6, 0.1), 1}, {Complex(-0.2, 0.55), 2}}, {});
  double prev = 0;
  for (int n : {64, 256, 1024}) {
    const FourierSeries s = fourier_coeffs(phi, n);
    CHECK(s.energy() <= 1.0 + 1e-9);
    CHECK(s.energy() >= prev - 1e-12);
    prev = s.energy();
  }
  CHECK(prev == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("singular symbols keep heavy tails") {
  const FourierSeries s = fourier_coeffs(phi_t(1.0), 512);
  CHECK(s.energy() < 0.999);           // far from resolved
  CHECK(s.tail_bound > 0.1);           // certified leftover
  CHECK(s.energy() + s.tail_bound * s.tail_bound == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("product coefficients match truncated convolution") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> radius(0.1, 0.8);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  for (int trial = 0; trial < 8; ++trial) {
    const InnerFunction a(trial % 2, {{std::polar(radius(rng), angle(rng)), 1}},
                          {{Complex(1, 0), 0.5}});
    const InnerFunction b(0, {{std::polar(radius(rng), angle(rng)), 1}}, {});
    const int n = 128;
    const CVector lhs = fourier_coeffs(multiply(a, b), n).coeffs;
    const CVector rhs =
        convolve_truncated(fourier_coeffs(a, n).coeffs, fourier_coeffs(b, n).coeffs);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("atom mass additivity at the coefficient level") {
  const int n = 1024;
  const CVector ab = fourier_coeffs(multiply(phi_t(0.5), phi_t(0.5)), n).coeffs;
  const CVector direct = fourier_coeffs(phi_t(1.0), n).coeffs;
  CHECK((ab - direct).norm() < 1e-9);
}

TEST_CASE("effective degree") {
  CHECK(effective_degree(InnerFunction::monomial(3), 1e-12, 64) == 3);

  // single zero at 0.5: tail^2(D) = (1-|a|^2) |a|^{2D}, so eps = 1e-6 needs D = 20
  const auto d = effective_degree(InnerFunction::blaschke({{Complex(0.5, 0), 1}}), 1e-6, 64);
  REQUIRE(d.has_value());
  CHECK(*d == 20);
  CHECK(*d <= 60);

  CHECK_FALSE(effective_degree(phi_t(1.0), 1e-9, 64).has_value());
}

TEST_CASE("rotated atom: coefficients are the xi=1 column twisted by xi^{-k}") {
  const Complex xi = std::polar(1.0, 1.1);
  const FourierSeries rot = fourier_coeffs(InnerFunction::singular(xi, 0.8), 64);
  const FourierSeries base = fourier_coeffs(phi_t(0.8), 64);
  for (int k = 0; k < 64; ++k)
    CHECK(std::abs(rot.coeffs[k] - base.coeffs[k] * std::pow(xi, -k)) < 1e-12);
}

TEST_CASE("laguerre stream is scalar-generic") {
  AtomCoeffStream<double> d(1.25);
  AtomCoeffStream<long double> ld(1.25L);
  for (int k = 0; k < 2000; ++k)
    CHECK(std::fabs(d.next() - double(ld.next())) < 1e-12);
}

TEST_CASE("recurrence stays conditioned through the documented mass envelope") {
  for (double t : {4.0, 8.0}) {
    const FourierSeries s = fourier_coeffs(phi_t(t), 4096);
    CHECK(s.energy() <= 1.0 + 1e-9);
    CHECK(std::abs(s.coeffs[0] - Complex(std::exp(-t), 0)) < 1e-14);
    AtomCoeffStream<double> dd(t);
    AtomCoeffStream<long double> ld((long double)t);
    for (int k = 0; k < 4096; ++k)
      CHECK(std::fabs(dd.next() - double(ld.next())) < 1e-10);
  }
}

TEST_CASE("power matches repeated multiplication at the coefficient level") {
  const InnerFunction b(1, {{Complex(0.35, -0.4), 1}}, {{Complex(1, 0), 0.3}});
  const CVector cubed = fourier_coeffs(power(b, 3), 128).coeffs;
  const CVector chained = fourier_coeffs(multiply(multiply(b, b), b), 128).coeffs;
  CHECK((cubed - chained).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("inner-circle sampling oracle agrees with the closed forms") {
  // mixed symbol exercising every factor type
  const InnerFunction mixed(2, {{Complex(0.4, 0.2), 2}},
                            {{Complex(0, 1), 0.7}, {Complex(1, 0), 0.4}});
  const int kmax = 128;
  const auto oracle = testing::inner_circle_coeffs(mixed, kmax);
  const FourierSeries direct = fourier_coeffs(mixed, kmax + 1);
  double worst = 0;
  for (int k = 0; k <= kmax; ++k)
    worst = std::max(worst, std::abs(oracle[k] - direct.coeffs[k]));
  CHECK(worst < 1e-8);

  const auto atom_oracle = testing::inner_circle_coeffs(phi_t(1.0), kmax);
  const FourierSeries atom_direct = fourier_coeffs(phi_t(1.0), kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    CHECK(std::abs(atom_oracle[k] - atom_direct.coeffs[k]) < 1e-8);
}
