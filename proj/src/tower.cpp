#include "tzlab/tower.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tzlab/errors.hpp"
#include "tzlab/laguerre.hpp"
#include "tzlab/regular_rep.hpp"

namespace tzlab {

EuclidCertificate euclid_cert(long long m, long long n) {
  if (m < 1 || n < 1) throw Error("euclid_cert: m, n must be positive");
  if (std::gcd(m, n) != 1) throw NotCoprime("euclid_cert: m and n are not coprime");

  EuclidCertificate cert;
  cert.m = m;
  cert.n = n;
  if (m == 1 || n == 1) {
    // n k + m l = 1 with one factor collapsing to a plain power
    cert.k = n == 1 ? 1 : 0;
    cert.l = n == 1 ? 0 : 1;
    cert.tag = EuclidCertificate::Case::Trivial;
    return cert;
  }

  // extended Euclid for n k0 = 1 mod m; representative of k with |k| minimal
  long long r0 = n, r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const long long q = r0 / r1;
    std::swap(r0 -= q * r1, r1);
    std::swap(s0 -= q * s1, s1);
  }
  long long k = ((s0 % m) + m) % m;  // smallest non-negative
  if (k > m - k) k -= m;             // minimal |k|; ties stay positive
  const long long l = (1 - n * k) / m;
  cert.k = k;
  cert.l = l;
  cert.tag = k > 0 ? EuclidCertificate::Case::One : EuclidCertificate::Case::Two;
  if (cert.n * cert.k + cert.m * cert.l != 1) throw Error("euclid_cert: internal identity failure");
  return cert;
}

CMatrix adjoint_product_block(double mass_a, double mass_b, int n, long corr_depth) {
  if (n < 1) throw Error("adjoint_product_block: n must be positive");
  const long dmin = -(n - 1), dmax = n - 1;
  const long width = dmax - dmin + 1;  // 2n - 1 correlation lags

  // gamma(d) = sum_{m < corr_depth} c^a_m c^b_{m+d}, accumulated in chunks:
  // each chunk of a is correlated against the matching window of b by FFT.
  const long chunk = 1L << 15;
  long fft_len = 1;
  while (fft_len < chunk + width) fft_len <<= 1;

  std::vector<double> gamma(width, 0.0);
  Eigen::FFT<double> fft;
  AtomCoeffStream<double> gen_a(mass_a), gen_b(mass_b);
  std::vector<Complex> fa(fft_len), fb(fft_len), fc(fft_len), conv(fft_len);
  std::vector<Complex> sa(fft_len), sb(fft_len);

  // b is consumed at chunk offsets [u + dmin, u + len - 1 + dmax]; buffer it
  // through the full correlation depth (real coefficients, 8 bytes each)
  std::vector<double> bbuf;
  bbuf.reserve(corr_depth + dmax + 1);
  for (long i = 0; i < corr_depth + dmax; ++i) bbuf.push_back(gen_b.next());

  for (long u = 0; u < corr_depth; u += chunk) {
    const long len = std::min(chunk, corr_depth - u);
    std::fill(fa.begin(), fa.end(), Complex(0, 0));
    std::fill(fb.begin(), fb.end(), Complex(0, 0));
    for (long i = 0; i < len; ++i) fa[len - 1 - i] = gen_a.next();  // reversed chunk
    const long lo = u + dmin, hi = u + len - 1 + dmax;
    for (long idx = std::max(0L, lo); idx <= std::min<long>(bbuf.size() - 1, hi); ++idx)
      fb[idx - lo] = bbuf[idx];
    fft.fwd(sa, fa);
    fft.fwd(sb, fb);
    for (long i = 0; i < fft_len; ++i) fc[i] = sa[i] * sb[i];
    fft.inv(conv, fc);
    // conv[len - 1 + d - dmin] = sum_i a_{u+i} b_{u+i+d}
    for (long d = dmin; d <= dmax; ++d) gamma[d - dmin] += conv[len - 1 + d - dmin].real();
  }

  CMatrix block(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) block(i, j) = gamma[(i - j) - dmin];
  return block;
}

BlockResidual block_residual(const CMatrix& got, const CMatrix& want, int safe_cols) {
  BlockResidual r;
  const int cols = std::min<int>(safe_cols, got.cols());
  for (int j = 0; j < cols; ++j) {
    const auto diff = got.col(j) - want.col(j);
    r.sup = std::max(r.sup, diff.cwiseAbs().maxCoeff());
    r.col2max = std::max(r.col2max, diff.norm());
  }
  return r;
}

namespace {

// Certified coefficient check of a positive-mass symbol identity
// product(lhs parts) = product(rhs parts), at modest truncation.
double symbol_identity_residual(const InnerFunction& lhs, const InnerFunction& rhs, int n) {
  const FourierSeries a = fourier_coeffs(lhs, n);
  const FourierSeries b = fourier_coeffs(rhs, n);
  return (a.coeffs - b.coeffs).cwiseAbs().maxCoeff();
}

}  // namespace

FactorizationReport verify_factorization(const EuclidCertificate& cert, int n, double eps,
                                         long corr_depth) {
  FactorizationReport report;
  report.cert = cert;
  report.identity_ok = cert.n * cert.k + cert.m * cert.l == 1;
  if (!report.identity_ok) throw Error("verify_factorization: certificate identity fails");

  const Rational unit(1, cert.n);
  const Rational ratio(cert.m, cert.n);
  const TruncatedOperator target = toeplitz_op_auto(phi_t(unit.to_double()), n, eps);
  report.safe_dim = target.safe_dim;

  CMatrix rhs;
  switch (cert.tag) {
    case EuclidCertificate::Case::Trivial: {
      // 1/n is m/n (m = 1) or 1 (n = 1): the factorization is a plain power.
      rhs = toeplitz_op_auto(phi_t(unit.to_double()), n, eps).matrix;
      report.symbol_residual = 0.0;
      break;
    }
    case EuclidCertificate::Case::One: {
      // T_{1/n} = (T*_{m/n})^{|l|} T^k_{1}; adjoint powers fold exactly:
      // (T*_{m/n})^{|l|} = T*_{|l| m/n}.
      const Rational adj_mass = Rational(-cert.l) * ratio;
      const Rational ana_mass(cert.k);
      // intermediate masses k - j m/n stay positive; the last equals 1/n
      for (long long j = 1; j <= -cert.l; ++j)
        if (!(Rational(0) < ana_mass - Rational(j) * ratio))
          throw Error("verify_factorization: intermediate mass not positive");
      if (!(adj_mass + unit == ana_mass))
        throw Error("verify_factorization: mass bookkeeping failed");
      report.symbol_residual = symbol_identity_residual(
          multiply(phi_t(adj_mass.to_double()), phi_t(unit.to_double())),
          phi_t(ana_mass.to_double()), std::min(n, 512));
      if (report.symbol_residual > 1e-9)
        throw SymbolMismatch("verify_factorization: symbol-level identity fails");
      rhs = adjoint_product_block(adj_mass.to_double(), ana_mass.to_double(), n, corr_depth);
      break;
    }
    case EuclidCertificate::Case::Two: {
      // T_{1/n} = (T*_{1})^{|k|} T^l_{m/n}
      const Rational adj_mass(-cert.k);
      const Rational ana_mass = Rational(cert.l) * ratio;
      // intermediate masses l m/n - j stay positive; the last equals 1/n
      for (long long j = 1; j <= -cert.k; ++j)
        if (!(Rational(0) < ana_mass - Rational(j)))
          throw Error("verify_factorization: intermediate mass not positive");
      if (!(adj_mass + unit == ana_mass))
        throw Error("verify_factorization: mass bookkeeping failed");
      report.symbol_residual = symbol_identity_residual(
          multiply(phi_t(adj_mass.to_double()), phi_t(unit.to_double())),
          phi_t(ana_mass.to_double()), std::min(n, 512));
      if (report.symbol_residual > 1e-9)
        throw SymbolMismatch("verify_factorization: symbol-level identity fails");
      rhs = adjoint_product_block(adj_mass.to_double(), ana_mass.to_double(), n, corr_depth);
      break;
    }
  }

  const BlockResidual res = block_residual(rhs, target.matrix, target.safe_dim);
  report.residual = res.sup;
  report.residual_col2 = res.col2max;
  report.pass = report.residual <= 100 * eps;
  return report;
}

TowerReport build_tower(int base, int depth, int n, double eps) {
  if (base < 2) throw Error("build_tower: base must be >= 2");
  if (depth < 0) throw Error("build_tower: depth must be >= 0");
  TowerReport report;
  report.base = base;

  long long denom = 1;
  std::vector<TruncatedOperator> ops;
  for (int k = 0; k <= depth; ++k) {
    TowerLevel level;
    level.depth = k;
    level.mass = Rational(1, denom);
    const TruncatedOperator op = toeplitz_op_auto(phi_t(level.mass.to_double()), n, eps);
    level.isometry_defect = isometry_defect(op);
    // |(T*T - I) e_j| on the safe block is the mass T* loses to the symbol
    // tail beyond the truncation, so it is bounded by the recorded defect
    level.certified_defect = op.defect_bound + 1e-12;
    ops.push_back(op);
    report.levels.push_back(level);
    if (denom > (1LL << 40)) throw Error("build_tower: depth too deep");
    denom *= base;
  }

  report.embeddings_ok = true;
  for (int k = 0; k < depth; ++k) {
    // generator at depth k equals the base-th power of the next generator
    TruncatedOperator pw = ops[k + 1];
    for (int i = 1; i < base; ++i) pw = compose(pw, ops[k + 1]);
    const BlockResidual res =
        block_residual(pw.matrix, ops[k].matrix, std::min(pw.safe_dim, ops[k].safe_dim));
    report.levels[k].embed_residual = res.sup;
    if (res.sup > 1e-9) report.embeddings_ok = false;
  }

  // Relation evidence: the truncated generators satisfy the isometry relation
  // pi*(a) pi(a) = 1 within their certified defects, and the exact regular
  // representation of the base-adic rationals satisfies it exactly.
  report.relations_ok = true;
  for (int k = 0; k <= depth; ++k)
    if (report.levels[k].isometry_defect > report.levels[k].certified_defect)
      report.relations_ok = false;
  {
    const SemigroupSpec spec = SemigroupSpec::qn(base, depth);
    const Window window(spec, Rational(1));
    for (int i = 0; i < window.size(); ++i) {
      const PartialBij x = rep_op(window, window.at(i));
      const PartialBij id_dom = pb_compose(pb_star(x), x);
      // pi*(a) pi(a) is the identity on the domain of pi(a), exactly
      for (int c = 0; c < window.size(); ++c)
        if (x.image[c] >= 0 && id_dom.image[c] != c) report.relations_ok = false;
    }
  }

  report.pass = report.embeddings_ok && report.relations_ok;
  return report;
}

GammaRepReport gamma_rep(long long m, long long n, const Rational& t_lo, const Rational& t_hi,
                         int dim, double eps, long corr_depth) {
  if (t_lo.sign() <= 0 || t_hi < t_lo) throw Error("gamma_rep: need 0 < t_lo <= t_hi");
  GammaRepReport report;
  report.m = m;
  report.n = n;

  if (m <= 0 && n <= 0)
    throw UnsupportedSignPattern("gamma_rep: m <= 0 and n <= 0 is not a positive element");
  // positivity of m + n t decided at both interval endpoints
  const int sign_lo = (Rational(m) + Rational(n) * t_lo).sign();
  const int sign_hi = (Rational(m) + Rational(n) * t_hi).sign();
  if (sign_lo != sign_hi)
    throw IndeterminateSign("gamma_rep: sign of m + n t not decided by the interval");
  if (sign_lo <= 0)
    throw UnsupportedSignPattern("gamma_rep: m + n t must be positive");

  const Rational t_mid = (t_lo + t_hi) / Rational(2);
  report.t_mid = t_mid.to_double();
  const double value = double(m) + double(n) * report.t_mid;
  const TruncatedOperator target = toeplitz_op_auto(phi_t(value), dim, eps);
  report.safe_dim = target.safe_dim;

  CMatrix got;
  if (m >= 0 && n >= 0) {
    report.case_name = "analytic";  // T^m_{Phi_1} T^n_{Phi_t}
    TruncatedOperator acc = operator_from_matrix(CMatrix::Identity(dim, dim), dim, 0.0);
    if (m > 0) acc = compose(acc, toeplitz_op_auto(power(phi_t(1.0), int(m)), dim, eps));
    if (n > 0) acc = compose(acc, toeplitz_op_auto(phi_t(double(n) * report.t_mid), dim, eps));
    got = acc.matrix;
  } else if (m < 0) {
    report.case_name = "adjoint-integer";  // (T*_{Phi_1})^{|m|} T^n_{Phi_t}
    got = adjoint_product_block(double(-m), double(n) * report.t_mid, dim, corr_depth);
  } else {
    report.case_name = "adjoint-irrational";  // (T*_{Phi_t})^{|n|} T^m_{Phi_1}
    got = adjoint_product_block(double(-n) * report.t_mid, double(m), dim, corr_depth);
  }

  const BlockResidual res = block_residual(got, target.matrix, target.safe_dim);
  report.residual = res.sup;
  report.residual_col2 = res.col2max;
  report.pass = report.residual <= 100 * eps;
  return report;
}

}  // namespace tzlab
