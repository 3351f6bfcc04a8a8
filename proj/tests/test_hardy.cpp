#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tzlab/errors.hpp"
#include "tzlab/hardy.hpp"
#include "tzlab/json_io.hpp"

using namespace tzlab;

namespace {

CVector basis(int n, int j) {
  CVector e = CVector::Zero(n);
  e[j] = 1.0;
  return e;
}

CMatrix random_matrix(int n, std::mt19937& rng) {
  std::normal_distribution<double> g(0, 1);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

const InnerFunction kBlaschkePair =
    InnerFunction::blaschke({{Complex(0.5, 0), 1}, {Complex(0.1, 0.6), 1}});

}  // namespace

TEST_CASE("shift moves basis vectors") {
  const TruncatedOperator s = shift_op(4, 1);
  CHECK((s.matrix * basis(4, 0) - basis(4, 1)).norm() == 0.0);
  CHECK((s.matrix * basis(4, 3)).norm() == 0.0);  // falls off the truncation
  CHECK(s.safe_dim == 3);
  CHECK(shift_op(4, 0).matrix.isIdentity(0.0));
  CHECK_THROWS_AS(shift_op(4, 4), DimensionMismatch);
}

TEST_CASE("shift semigroup law is exact") {
  const TruncatedOperator s1 = shift_op(16, 1);
  const TruncatedOperator s2 = shift_op(16, 2);
  CHECK((compose(s1, s1).matrix - s2.matrix).norm() == 0.0);
  CHECK(compose(s1, s1).safe_dim == 14);
}

TEST_CASE("toeplitz of z is the shift") {
  const TruncatedOperator t = toeplitz_op(InnerFunction::monomial(1), 32, 1e-12);
  CHECK((t.matrix - shift_op(32, 1).matrix).norm() == 0.0);
  CHECK(t.safe_dim == 31);
}

TEST_CASE("toeplitz column zero is the coefficient sequence") {
  const int n = 256;
  const TruncatedOperator t = toeplitz_op_auto(phi_t(1.0), n, 1e-8);
  const FourierSeries s = fourier_coeffs(phi_t(1.0), n);
  CHECK((t.matrix.col(0) - s.coeffs).norm() == 0.0);
  CHECK(t.safe_dim == n / 2);        // tail fallback band
  CHECK(t.defect_bound > 0.1);       // certified, honest about the singular tail
}

TEST_CASE("strict toeplitz propagates TailNotResolved") {
  CHECK_THROWS_AS(toeplitz_op(phi_t(1.0), 256, 1e-8), TailNotResolved);
  CHECK_NOTHROW(toeplitz_op(kBlaschkePair, 256, 1e-7));
}

TEST_CASE("tiny truncations of singular symbols are rejected") {
  CHECK_THROWS_AS(toeplitz_op_auto(phi_t(1.0), 16, 1e-8), SafeSubspaceEmpty);
  CHECK_NOTHROW(toeplitz_op_auto(phi_t(1.0), 64, 1e-8));
}

TEST_CASE("lower-triangular Toeplitz product law, brute force at N=64") {
  const int n = 64;
  const InnerFunction a = kBlaschkePair;
  const InnerFunction b(1, {{Complex(-0.3, 0.2), 1}}, {});
  const TruncatedOperator ta = toeplitz_op(a, n, 1e-7);
  const TruncatedOperator tb = toeplitz_op(b, n, 1e-7);
  const TruncatedOperator tab = toeplitz_op(multiply(a, b), n, 1e-6);
  CHECK((compose(ta, tb).matrix - tab.matrix).cwiseAbs().maxCoeff() < 1e-12);

  // same law with a singular factor
  const TruncatedOperator ts = toeplitz_op_auto(phi_t(0.7), n, 1e-8);
  const TruncatedOperator tas = toeplitz_op_auto(multiply(a, phi_t(0.7)), n, 1e-8);
  CHECK((compose(ta, ts).matrix - tas.matrix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("adjoint basics") {
  const TruncatedOperator s = shift_op(8, 1);
  CHECK((adjoint(s).matrix * basis(8, 0)).norm() == 0.0);

  std::mt19937 rng(2);
  const TruncatedOperator a = operator_from_matrix(random_matrix(8, rng), 8, 0.0);
  CHECK((adjoint(adjoint(a)).matrix - a.matrix).norm() == 0.0);

  const TruncatedOperator t = toeplitz_op_auto(phi_t(1.0), 128, 1e-8);
  const CVector got = adjoint(t).matrix * basis(128, 0);
  CHECK((got - std::exp(-1.0) * basis(128, 0)).norm() < 1e-15);
}

TEST_CASE("compose bookkeeping and rank-one defect of the shift") {
  const int n = 32;
  const TruncatedOperator s = shift_op(n, 1);
  const TruncatedOperator ss = compose(s, adjoint(s));
  CHECK((ss.matrix * basis(n, 0)).norm() == 0.0);
  CHECK((ss.matrix * basis(n, 1) - basis(n, 1)).norm() == 0.0);
  const TruncatedOperator id_like = compose(adjoint(s), s);
  for (int j = 0; j < id_like.safe_dim; ++j)
    CHECK((id_like.matrix * basis(n, j) - basis(n, j)).norm() == 0.0);
  CHECK_THROWS_AS(compose(shift_op(8, 1), shift_op(16, 1)), DimensionMismatch);

  // defect and norm bounds propagate through products
  const TruncatedOperator tb = toeplitz_op(kBlaschkePair, n, 1e-5);
  const TruncatedOperator prod = compose(tb, s);
  CHECK(prod.defect_bound == doctest::Approx(1e-5).epsilon(1e-12));
  CHECK(prod.norm_bound == 1.0);
  CHECK(compose(tb, tb).defect_bound == doctest::Approx(2e-5).epsilon(1e-12));
}

TEST_CASE("compose associativity on random triples") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const TruncatedOperator a = operator_from_matrix(random_matrix(24, rng), 24, 0);
    const TruncatedOperator b = operator_from_matrix(random_matrix(24, rng), 24, 0);
    const TruncatedOperator c = operator_from_matrix(random_matrix(24, rng), 24, 0);
    const CMatrix lhs = compose(compose(a, b), c).matrix;
    const CMatrix rhs = compose(a, compose(b, c)).matrix;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12 * lhs.cwiseAbs().maxCoeff() + 1e-12);
  }
}

TEST_CASE("partial-permutation fast path agrees with the dense product") {
  std::mt19937 rng(4);
  const int n = 48;
  const TruncatedOperator dense = operator_from_matrix(random_matrix(n, rng), n, 0);
  const TruncatedOperator perm = shift_op(n, 3);
  CHECK((compose(dense, perm).matrix - dense.matrix * perm.matrix).norm() == 0.0);
  CHECK((compose(perm, dense).matrix - perm.matrix * dense.matrix).norm() == 0.0);
}

TEST_CASE("isometry defects") {
  CHECK(isometry_defect(shift_op(64, 1)) == 0.0);

  const TruncatedOperator tb = toeplitz_op(kBlaschkePair, 128, 1e-7);
  CHECK(isometry_defect(tb) <= 2e-7 + 1e-10);

  const TruncatedOperator ts = toeplitz_op_auto(phi_t(1.0), 512, 1e-8);
  const double d = isometry_defect(ts);
  CHECK(d <= ts.defect_bound);          // certified by the recorded tail
  CHECK(d > 0.1);                       // the singular tail is genuinely heavy

  // the adjoint is far from isometric: T T* e_0 = e^{-1} Phi
  CHECK(isometry_defect(adjoint(ts)) >= 1.0 - std::exp(-2.0) - 1e-6);
}

TEST_CASE("commutator gaps") {
  const int n = 256;
  const TruncatedOperator s = shift_op(n, 1);
  const TruncatedOperator t = toeplitz_op_auto(phi_t(1.0), n, 1e-8);
  CHECK(commutator_gap(s, t) <= 1e-9);  // analytic Toeplitz commutes with the shift
  CHECK(commutator_gap(s, adjoint(s)) == 1.0);
  CHECK(commutator_gap(t, t) == 0.0);
}

TEST_CASE("operator norms") {
  CHECK(op_norm(shift_op(64, 1)) == doctest::Approx(1.0).epsilon(1e-10));
  TruncatedOperator two = operator_from_matrix(2.0 * CMatrix::Identity(32, 32), 32, 0);
  CHECK(op_norm(two) == doctest::Approx(2.0).epsilon(1e-10));

  // resolved Blaschke symbol: compression of an isometry, norm just below 1
  const TruncatedOperator tb = toeplitz_op(kBlaschkePair, 64, 1e-7);
  const double nb = op_norm(tb);
  CHECK(nb <= 1.0 + 1e-9);
  CHECK(nb >= 0.99);

  // the singular symbol's clustered top spectrum defeats the pinned
  // iteration budget at small N; the contract is the NoConvergence report
  const TruncatedOperator ts = toeplitz_op_auto(phi_t(1.0), 64, 1e-8);
  CHECK_THROWS_AS(op_norm(ts), NoConvergence);
}

TEST_CASE("wold decomposition of shift powers") {
  const WoldDecomposition w1 = wold_decompose(shift_op(128, 1));
  REQUIRE(w1.wandering_basis.size() == 1);
  CHECK(std::abs(std::abs(w1.wandering_basis[0][0]) - 1.0) < 1e-12);
  CHECK(w1.reconstruction_defect <= 1e-10);

  const WoldDecomposition w2 = wold_decompose(shift_op(128, 2));
  REQUIRE(w2.wandering_basis.size() == 2);
  CHECK(w2.reconstruction_defect <= 1e-10);
  // wandering vectors live in span{e_0, e_1}
  for (const auto& v : w2.wandering_basis) CHECK(v.tail(126).norm() < 1e-10);

  CHECK_THROWS_AS(wold_decompose(adjoint(shift_op(64, 1))), NotAnIsometry);
}

TEST_CASE("wold on the interleaved extension has a two-dimensional wandering space") {
  const InterleavedExtension ext = interleaved_extension(64);
  const WoldDecomposition w = wold_decompose(ext.pi1);
  CHECK(w.wandering_basis.size() == 2);
  CHECK(w.reconstruction_defect <= 1e-10);
}

TEST_CASE("wold reconstruction defect matches the direct projector sum") {
  const int n = 16;
  const TruncatedOperator v = shift_op(n, 2);
  const WoldDecomposition w = wold_decompose(v);
  REQUIRE(w.wandering_basis.size() == 2);

  CMatrix p0 = CMatrix::Zero(n, n);
  for (const auto& vec : w.wandering_basis) p0 += vec * vec.adjoint();
  CMatrix recon = CMatrix::Zero(n, n);
  CMatrix pw = CMatrix::Identity(n, n);
  for (int step = 0; step <= n; ++step) {
    recon += pw * p0 * pw.adjoint();
    pw = v.matrix * pw;
  }
  double direct = 0;
  for (int j = 0; j < v.safe_dim; ++j)
    direct = std::max(direct, (basis(n, j) - recon * basis(n, j)).norm());
  CHECK(std::fabs(direct - w.reconstruction_defect) < 1e-12);
}

TEST_CASE("symbol extraction from a commuting isometry") {
  const SymbolExtraction cube = symbol_of_commuting_isometry(shift_op(64, 3), 1e-8);
  CHECK(std::abs(cube.symbol.coeffs[3] - Complex(1, 0)) < 1e-14);
  CHECK(cube.symbol.coeffs.head(3).norm() == 0.0);
  CHECK(cube.residual <= 1e-12);

  const TruncatedOperator t = toeplitz_op_auto(phi_t(1.0), 256, 1e-8);
  const SymbolExtraction got = symbol_of_commuting_isometry(t, 0.25);
  CHECK((got.symbol.coeffs - fourier_coeffs(phi_t(1.0), 256).coeffs).norm() < 1e-9);
  CHECK(got.residual <= 1e-12);

  CHECK_THROWS_AS(symbol_of_commuting_isometry(adjoint(shift_op(64, 1)), 0.25), NotAnIsometry);

  // isometric but sign-twisted: no longer commutes with the shift
  CMatrix twisted = shift_op(64, 1).matrix;
  twisted.row(3) *= -1.0;
  CHECK_THROWS_AS(symbol_of_commuting_isometry(operator_from_matrix(twisted, 63, 0.0), 1e-8),
                  NotCommuting);
}

TEST_CASE("interleaved extension satisfies the defining relations") {
  const InterleavedExtension ext = interleaved_extension(32);
  CHECK(ext.space.dim() == 64);
  CHECK(ext.space.index(1, 5) == 10);
  CHECK(ext.space.index(2, 5) == 11);

  CHECK((compose(ext.t, ext.t).matrix - ext.pi1.matrix).norm() == 0.0);
  CHECK(commutator_gap(ext.pi1, ext.t) == 0.0);

  const CVector mixed = ext.t.matrix.adjoint() * (ext.pi1.matrix * basis(64, 0)) -
                        ext.pi1.matrix * (ext.t.matrix.adjoint() * basis(64, 0));
  CHECK(mixed.norm() == 1.0);
}

TEST_CASE("safe-subspace fidelity under refinement") {
  // a word with an adjoint factor, applied to an early-supported vector,
  // must move by less than the recorded defects when N grows
  const InnerFunction a = kBlaschkePair;
  auto word_apply = [&](int n) {
    const TruncatedOperator ta = toeplitz_op(a, n, 1e-7);
    const TruncatedOperator w = compose(adjoint(ta), compose(ta, shift_op(n, 1)));
    CVector x = CVector::Zero(n);
    x[0] = Complex(0.6, 0);
    x[3] = Complex(0, 0.8);
    return CVector(w.matrix * x);
  };
  const CVector at256 = word_apply(256);
  const CVector at512 = word_apply(512);
  CHECK((at512.head(256) - at256).norm() < 1e-7);
  CHECK(at512.tail(256).norm() < 1e-7);
}

TEST_CASE("isometric generator columns have unit norm within the defect") {
  const int n = 128;
  const TruncatedOperator tb = toeplitz_op(kBlaschkePair, n, 1e-7);
  for (int j = 0; j < tb.safe_dim; ++j)
    CHECK(std::fabs(tb.matrix.col(j).norm() - 1.0) <= 2 * tb.defect_bound + 1e-12);
  const TruncatedOperator ts = toeplitz_op_auto(phi_t(1.0), n, 1e-8);
  for (int j = 0; j < ts.safe_dim; ++j)
    CHECK(std::fabs(ts.matrix.col(j).norm() - 1.0) <= 2 * ts.defect_bound + 1e-12);
}

TEST_CASE("operator json dump") {
  const TruncatedOperator s = shift_op(3, 1);
  const auto j = operator_to_json(s);
  CHECK(j.at("n") == 3);
  CHECK(j.at("safe_dim") == 2);
  CHECK(j.at("rows").size() == 3);
  CHECK(j.at("rows")[1][0] == 1.0);  // entry (1,0) real part
}
