#include "tzlab/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tzlab/errors.hpp"

namespace tzlab {

namespace {

// Largest certified defect at which a truncation still says something about
// the infinite operator; beyond it the compression is reported as unusable.
constexpr double kMaxUsableDefect = 0.4;

double norm1(const CMatrix& m) {
  double best = 0;
  for (int j = 0; j < m.cols(); ++j) best = std::max(best, m.col(j).lpNorm<1>());
  return best;
}

double norm_inf(const CMatrix& m) {
  double best = 0;
  for (int i = 0; i < m.rows(); ++i) best = std::max(best, m.row(i).lpNorm<1>());
  return best;
}

// Partial-permutation structure: at most one nonzero per column and per row.
// Shift powers, their adjoints and the regular-representation matrices all
// qualify, and products against them reduce to exact column/row gathers.
struct PermLike {
  bool yes{false};
  std::vector<int> col_row;      // per column: row index or -1
  std::vector<Complex> col_val;
};

PermLike perm_structure(const CMatrix& m) {
  PermLike p;
  const int n = static_cast<int>(m.rows());
  p.col_row.assign(n, -1);
  p.col_val.assign(n, Complex(0, 0));
  std::vector<char> row_used(n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (m(i, j) == Complex(0, 0)) continue;
      if (p.col_row[j] != -1 || row_used[i]) return {};
      p.col_row[j] = i;
      p.col_val[j] = m(i, j);
      row_used[i] = 1;
    }
  }
  p.yes = true;
  return p;
}

CMatrix multiply_exact(const CMatrix& a, const CMatrix& b) {
  // A * (partial permutation B): column gather.
  if (PermLike pb = perm_structure(b); pb.yes) {
    CMatrix out = CMatrix::Zero(a.rows(), b.cols());
    for (int j = 0; j < b.cols(); ++j)
      if (pb.col_row[j] >= 0) out.col(j) = a.col(pb.col_row[j]) * pb.col_val[j];
    return out;
  }
  // (partial permutation A) * B: row scatter.
  if (PermLike pa = perm_structure(a); pa.yes) {
    CMatrix out = CMatrix::Zero(a.rows(), b.cols());
    for (int j = 0; j < a.cols(); ++j)
      if (pa.col_row[j] >= 0) out.row(pa.col_row[j]) = pa.col_val[j] * b.row(j);
    return out;
  }
  return a * b;
}

}  // namespace

TruncatedOperator operator_from_matrix(CMatrix m, int safe_dim, double defect_bound) {
  if (m.rows() != m.cols()) throw DimensionMismatch("operator matrix must be square");
  TruncatedOperator op;
  op.norm_bound = std::sqrt(norm1(m) * norm_inf(m));
  op.displacement = lower_bandwidth(m);
  op.matrix = std::move(m);
  op.safe_dim = std::clamp(safe_dim, 0, static_cast<int>(op.matrix.rows()));
  op.defect_bound = defect_bound;
  return op;
}

TruncatedOperator shift_op(int n, int k) {
  if (n < 1) throw Error("shift_op: dimension must be positive");
  if (k < 0 || k >= n) throw DimensionMismatch("shift_op: need 0 <= k < N");
  TruncatedOperator op;
  op.matrix = CMatrix::Zero(n, n);
  for (int i = 0; i + k < n; ++i) op.matrix(i + k, i) = 1.0;
  op.safe_dim = n - k;
  op.defect_bound = 0.0;
  op.norm_bound = 1.0;
  op.displacement = k;
  return op;
}

namespace {

TruncatedOperator toeplitz_from_series(const FourierSeries& s, int n, int band,
                                       double defect) {
  TruncatedOperator op;
  op.matrix = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = j; i < n; ++i) op.matrix(i, j) = s.coeffs[i - j];
  op.safe_dim = n - band;
  op.defect_bound = defect;
  op.norm_bound = 1.0;  // compression of multiplication by a unit-modulus symbol
  op.displacement = 0;  // index of the first nonzero coefficient (monomial order)
  while (op.displacement < n && s.coeffs[op.displacement] == Complex(0, 0)) ++op.displacement;
  return op;
}

}  // namespace

TruncatedOperator toeplitz_op(const InnerFunction& phi, int n, double eps) {
  const auto degree = effective_degree(phi, eps, n - 1);
  if (!degree)
    throw TailNotResolved("toeplitz_op: symbol tail does not reach eps within the truncation; widen eps or N");
  return toeplitz_from_series(fourier_coeffs(phi, n), n, *degree, eps);
}

TruncatedOperator toeplitz_op_auto(const InnerFunction& phi, int n, double eps) {
  const auto degree = effective_degree(phi, eps, n - 1);
  const FourierSeries s = fourier_coeffs(phi, n);
  if (degree) return toeplitz_from_series(s, n, *degree, eps);

  const int band = n / 2;
  double head = 0.0;
  for (int k = 0; k <= band && k < n; ++k) head += std::norm(s.coeffs[k]);
  const double tail = std::sqrt(std::max(0.0, 1.0 - head));
  if (tail >= kMaxUsableDefect) {
    std::ostringstream msg;
    msg << "toeplitz_op_auto: certified tail " << tail << " at band " << band
        << " leaves no usable safe subspace (N too small)";
    throw SafeSubspaceEmpty(msg.str());
  }
  return toeplitz_from_series(s, n, band, tail);
}

TruncatedOperator adjoint(const TruncatedOperator& a) {
  TruncatedOperator op;
  op.matrix = a.matrix.adjoint();
  op.safe_dim = a.safe_dim;
  op.defect_bound = a.defect_bound;
  op.norm_bound = a.norm_bound;
  // partial permutations displace supports exactly; for everything else the
  // adjoint pushes mass upward and leaks only defect-charged tail mass
  op.displacement = perm_structure(op.matrix).yes ? lower_bandwidth(op.matrix) : 0;
  return op;
}

int lower_bandwidth(const CMatrix& m) {
  int band = 0;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = m.rows() - 1; i > j + band; --i)
      if (m(i, j) != Complex(0, 0)) {
        band = i - j;
        break;
      }
  return band;
}

TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("compose: dimension mismatch");
  TruncatedOperator op;
  op.matrix = multiply_exact(a.matrix, b.matrix);
  op.safe_dim = std::max(0, std::min(b.safe_dim, a.safe_dim - b.displacement));
  op.defect_bound = a.defect_bound * b.norm_bound + b.defect_bound * a.norm_bound;
  op.norm_bound = a.norm_bound * b.norm_bound;
  op.displacement = std::min(a.dim(), a.displacement + b.displacement);
  return op;
}

double isometry_defect(const TruncatedOperator& a) {
  const int s = a.safe_dim;
  if (s == 0) return 0.0;
  const CMatrix g = a.matrix.adjoint() * (a.matrix.leftCols(s));
  double worst = 0;
  for (int j = 0; j < s; ++j) {
    CVector col = g.col(j);
    col[j] -= 1.0;
    worst = std::max(worst, col.norm());
  }
  return worst;
}

double commutator_gap(const TruncatedOperator& a, const TruncatedOperator& b) {
  const TruncatedOperator ab = compose(a, b);
  const TruncatedOperator ba = compose(b, a);
  const int s = std::min(ab.safe_dim, ba.safe_dim);
  double worst = 0;
  for (int j = 0; j < s; ++j)
    worst = std::max(worst, (ab.matrix.col(j) - ba.matrix.col(j)).norm());
  return worst;
}

double op_norm(const TruncatedOperator& a) {
  const int n = a.dim();
  CVector x = CVector::Constant(n, Complex(1.0 / std::sqrt(double(n)), 0.0));
  double lambda = 0.0;
  constexpr int kCap = 10000;
  constexpr double kTol = 1e-10;
  for (int it = 0; it < kCap; ++it) {
    const CVector y = a.matrix.adjoint() * (a.matrix * x);
    const double next = y.norm();
    if (next == 0.0) return 0.0;
    const bool settled = std::fabs(next - lambda) <= kTol * std::max(1.0, next);
    lambda = next;
    x = y / next;
    if (settled) return std::sqrt(lambda);
  }
  std::ostringstream msg;
  msg << "op_norm: power iteration did not settle in " << kCap
      << " iterations; last estimate " << std::sqrt(lambda);
  throw NoConvergence(msg.str());
}

WoldDecomposition wold_decompose(const TruncatedOperator& v, double kernel_tol) {
  if (isometry_defect(v) > 1e-6)
    throw NotAnIsometry("wold_decompose: operator is not isometric on its safe block");
  const int n = v.dim();
  const int s = v.safe_dim;
  WoldDecomposition out;
  if (s == 0) return out;

  // ker V* restricted to span(e_0..e_{s-1}): null space of the N x s block
  // of V*, via the eigendecomposition of its s x s Gram matrix.
  const CMatrix m = v.matrix.topRows(s).adjoint();  // = V* on the safe block
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(m.adjoint() * m);
  if (eig.info() != Eigen::Success) throw NoConvergence("wold_decompose: eigensolver failed");

  std::vector<int> kernel;
  for (int i = 0; i < s; ++i)
    if (eig.eigenvalues()[i] <= kernel_tol) kernel.push_back(i);

  const int w = static_cast<int>(kernel.size());
  CMatrix basis = CMatrix::Zero(n, w);
  for (int c = 0; c < w; ++c) {
    basis.col(c).head(s) = eig.eigenvectors().col(kernel[c]);
    out.wandering_basis.push_back(basis.col(c));
  }

  // Reconstruction defect: the columns V^k W are orthonormal across k for an
  // isometry, so |x - P x|^2 = 1 - sum_k |W_k^* x|^2 accumulates row-wise.
  RVector captured = RVector::Zero(n);
  CMatrix block = basis;
  for (int step = 0; step <= n && block.size() > 0; ++step) {
    for (int i = 0; i < n; ++i) captured[i] += block.row(i).squaredNorm();
    if (block.norm() < 1e-14) break;
    block = v.matrix * block;
  }
  double defect = 0;
  for (int j = 0; j < s; ++j)
    defect = std::max(defect, std::sqrt(std::max(0.0, 1.0 - captured[j])));
  out.reconstruction_defect = defect;
  return out;
}

SymbolExtraction symbol_of_commuting_isometry(const TruncatedOperator& t, double eps) {
  const double iso = isometry_defect(t);
  if (iso > eps) {
    std::ostringstream msg;
    msg << "symbol_of_commuting_isometry: isometry defect " << iso << " exceeds " << eps;
    throw NotAnIsometry(msg.str());
  }
  const double gap = commutator_gap(t, shift_op(t.dim(), 1));
  if (gap > eps) {
    std::ostringstream msg;
    msg << "symbol_of_commuting_isometry: shift commutator gap " << gap << " exceeds " << eps;
    throw NotCommuting(msg.str());
  }

  const int n = t.dim();
  FourierSeries symbol = series_from_coeffs(t.matrix.col(0));
  CMatrix toep = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = j; i < n; ++i) toep(i, j) = symbol.coeffs[i - j];
  double residual = 0;
  for (int j = 0; j < t.safe_dim; ++j)
    residual = std::max(residual, (t.matrix.col(j) - toep.col(j)).norm());
  if (residual > 10 * eps)
    throw SymbolMismatch("symbol_of_commuting_isometry: operator is not the Toeplitz matrix of its first column");
  return SymbolExtraction{std::move(symbol), residual};
}

InterleavedExtension interleaved_extension(int modes_per_component) {
  if (modes_per_component < 2) throw Error("interleaved_extension: need at least 2 modes per component");
  InterleavedExtension ext;
  ext.space = MultiHardy{2, modes_per_component};
  const int dim = ext.space.dim();

  // T(e_n^(1)) = e_n^(2), T(e_n^(2)) = e_{n+1}^(1): the unilateral shift in
  // interleaved coordinates.
  CMatrix t = CMatrix::Zero(dim, dim);
  for (int n = 0; n < modes_per_component; ++n) {
    t(ext.space.index(2, n), ext.space.index(1, n)) = 1.0;
    if (n + 1 < modes_per_component) t(ext.space.index(1, n + 1), ext.space.index(2, n)) = 1.0;
  }
  ext.t = operator_from_matrix(std::move(t), dim - 1, 0.0);
  ext.t.norm_bound = 1.0;

  // pi(1) acts as the shift on each component.
  CMatrix p = CMatrix::Zero(dim, dim);
  for (int j = 1; j <= 2; ++j)
    for (int n = 0; n + 1 < modes_per_component; ++n)
      p(ext.space.index(j, n + 1), ext.space.index(j, n)) = 1.0;
  ext.pi1 = operator_from_matrix(std::move(p), dim - 2, 0.0);
  ext.pi1.norm_bound = 1.0;
  return ext;
}

}  // namespace tzlab
