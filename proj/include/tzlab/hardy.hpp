#pragma once

#include <vector>

#include "tzlab/fourier.hpp"
#include "tzlab/inner_function.hpp"
#include "tzlab/types.hpp"

namespace tzlab {

/// Compression of an operator on H^2 to the first N Fourier modes.
///
/// safe_dim is the number of leading coordinates on which the matrix agrees
/// with its infinite-dimensional counterpart up to defect_bound; theorem
/// checks are phrased on that block. norm_bound is a certified upper bound on
/// the operator norm (1 for all the isometric generators), used to propagate
/// defect bounds through compositions. displacement records how far the
/// operator provably pushes supports toward higher modes (k for the k-step
/// shift, the monomial order for an analytic Toeplitz matrix); mass an
/// operator spreads beyond its displacement is already charged to
/// defect_bound, so compositions discount safe_dim by displacements only.
struct TruncatedOperator {
  CMatrix matrix;
  int safe_dim{0};
  double defect_bound{0};
  double norm_bound{1};
  int displacement{0};

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Wraps an explicit matrix; norm_bound falls back to sqrt(|A|_1 |A|_inf).
TruncatedOperator operator_from_matrix(CMatrix m, int safe_dim, double defect_bound);

/// pi_0(k): e_n -> e_{n+k} for n + k < N, zero beyond. safe_dim = N - k.
TruncatedOperator shift_op(int n, int k);

/// Lower-triangular Toeplitz compression of multiplication by phi, entry
/// (j,k) = c_{j-k}. Requires effective_degree(phi, eps, N) to resolve to D;
/// then safe_dim = N - D and defect_bound = eps. Throws TailNotResolved
/// otherwise -- callers with singular symbols must widen eps (see
/// toeplitz_op_auto).
TruncatedOperator toeplitz_op(const InnerFunction& phi, int n, double eps);

/// toeplitz_op with the tail policy for symbols whose coefficient tail does
/// not resolve at eps: the band is capped at N/2, safe_dim = N - N/2, and the
/// defect bound is the certified tail energy at N/2. Throws SafeSubspaceEmpty
/// when even that certified defect exceeds 0.4 (the truncation carries no
/// usable information about the infinite operator).
TruncatedOperator toeplitz_op_auto(const InnerFunction& phi, int n, double eps);

/// Conjugate transpose. safe_dim and defect_bound carry over: for an analytic
/// Toeplitz input with band D the adjoint is exact on the same N - D block.
TruncatedOperator adjoint(const TruncatedOperator& a);

/// Matrix product A*B with conservative bookkeeping:
///   safe_dim = max(0, min(safe(B), safe(A) - displacement(B)))
/// and
///   defect = defect(A) norm_bound(B) + defect(B) norm_bound(A).
/// Products where one factor is a partial permutation (at most one nonzero
/// per row and column, e.g. shifts and their powers) are computed by exact
/// column gathering instead of a general matrix product.
TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b);

/// Lowest nonzero subdiagonal offset, clamped at zero.
int lower_bandwidth(const CMatrix& m);

/// max_{j < safe_dim} |(A*A - I) e_j|.
double isometry_defect(const TruncatedOperator& a);

/// max over the joint safe block of |(AB - BA) e_j|.
double commutator_gap(const TruncatedOperator& a, const TruncatedOperator& b);

/// Largest singular value by power iteration on A*A from the deterministic
/// start (1,..,1)/sqrt(N), successive-estimate tolerance 1e-10, cap 10000
/// iterations. Throws NoConvergence past the cap, reporting the last
/// iterate and residual.
double op_norm(const TruncatedOperator& a);

struct WoldDecomposition {
  std::vector<HardyVector> wandering_basis;  // orthonormal basis of ker V* on the safe block
  double reconstruction_defect{0};  // how far sum_n V^n H_0 falls short of the safe block
};

/// Wandering subspace H_0 = ker V* restricted to the safe block, plus the
/// defect of the reconstruction sum_n V^n P_0 V*^n against the identity
/// there. Requires isometry_defect(V) <= 1e-6 (NotAnIsometry otherwise).
WoldDecomposition wold_decompose(const TruncatedOperator& v, double kernel_tol = 1e-7);

struct SymbolExtraction {
  FourierSeries symbol;  // coefficients of T * e_0
  double residual;       // safe-block gap against the Toeplitz matrix of that column
};

/// Beurling-style symbol recovery for an isometry commuting with the shift:
/// returns the first column as the symbol and verifies the operator matches
/// its Toeplitz matrix within 10*eps on the safe block. Errors:
/// NotAnIsometry, NotCommuting, SymbolMismatch.
SymbolExtraction symbol_of_commuting_isometry(const TruncatedOperator& t, double eps);

/// Direct sum of J truncated Hardy spaces, stored interleaved:
/// component j (1-based), mode n maps to coordinate J*n + (j-1).
struct MultiHardy {
  int components{1};
  int modes_per_component{0};

  int dim() const { return components * modes_per_component; }
  int index(int component, int mode) const {
    return components * mode + (component - 1);
  }
};

struct InterleavedExtension {
  MultiHardy space;       // J = 2
  TruncatedOperator t;    // e_n^(1) -> e_n^(2), e_n^(2) -> e_{n+1}^(1)
  TruncatedOperator pi1;  // the shift on each component; equals t^2 exactly
};

/// The two-component extension: in interleaved coordinates t is the
/// unilateral shift m -> m+1 and pi1 = t^2.
InterleavedExtension interleaved_extension(int modes_per_component);

}  // namespace tzlab
