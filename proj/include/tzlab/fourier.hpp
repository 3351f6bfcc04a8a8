#pragma once

#include <optional>

#include "tzlab/inner_function.hpp"
#include "tzlab/types.hpp"

namespace tzlab {

/// Truncated analytic Fourier (= Taylor) coefficients of a unit-norm H^2
/// function, with a certified bound on the ell^2 mass of the dropped tail.
struct FourierSeries {
  CVector coeffs;         // c_0 .. c_{N-1}
  double tail_bound{0};   // upper bound on (sum_{k>=N} |c_k|^2)^{1/2}

  int size() const { return static_cast<int>(coeffs.size()); }
  double energy() const { return coeffs.squaredNorm(); }
};

/// First n Taylor coefficients of the symbol at 0, from per-factor closed
/// forms combined by truncated Cauchy convolution:
///   - monomial z^p: index shift by p;
///   - Blaschke factor at a: c_0 = |a|, c_k = (|a|/a)(|a|^2-1) conj(a)^{k-1};
///   - atom at xi = 1 with mass t: c_k = e^{-t}(L_k(2t) - L_{k-1}(2t));
///   - atom at general xi: the xi = 1 coefficients rotated by xi^{-k}.
/// The truncated convolution reproduces every coefficient below n exactly.
/// tail_bound = sqrt(max(0, 1 - sum |c_k|^2)), certified by Parseval since
/// inner functions have unit H^2 norm.
FourierSeries fourier_coeffs(const InnerFunction& phi, int n);

/// Wraps raw coefficients of a unit-norm function with the Parseval tail.
FourierSeries series_from_coeffs(CVector coeffs);

/// Smallest D <= nmax with tail energy (1 - sum_{k<=D} |c_k|^2)^{1/2} <= eps.
/// Finite Blaschke products resolve for nmax large enough (geometric tail);
/// symbols with singular part typically do not at small eps, in which case
/// nullopt is returned and the caller must widen eps or nmax.
std::optional<int> effective_degree(const InnerFunction& phi, double eps, int nmax);

/// Truncated Cauchy convolution of equal-length coefficient blocks.
CVector convolve_truncated(const CVector& a, const CVector& b);

}  // namespace tzlab
