#include "tzlab/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "tzlab/errors.hpp"
#include "tzlab/laguerre.hpp"

namespace tzlab {

CVector convolve_truncated(const CVector& a, const CVector& b) {
  const int n = static_cast<int>(a.size());
  if (b.size() != n) throw DimensionMismatch("convolve_truncated: length mismatch");
  CVector out = CVector::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == Complex(0, 0)) continue;
    for (int j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

namespace {

CVector blaschke_factor_coeffs(Complex a, int n) {
  CVector c = CVector::Zero(n);
  const double r = std::abs(a);
  c[0] = r;
  const Complex lead = (r / a) * (r * r - 1.0);
  Complex pw(1.0, 0.0);  // conj(a)^{k-1}
  for (int k = 1; k < n; ++k) {
    c[k] = lead * pw;
    pw *= std::conj(a);
  }
  return c;
}

CVector atom_factor_coeffs(const SingularAtom& atom, int n) {
  CVector c(n);
  AtomCoeffStream<double> stream(atom.mass);
  const bool at_one = std::abs(atom.point - Complex(1.0, 0.0)) < 1e-14;
  Complex rot(1.0, 0.0);  // point^{-k}
  const Complex inv = 1.0 / atom.point;
  for (int k = 0; k < n; ++k) {
    const double v = stream.next();
    c[k] = at_one ? Complex(v, 0.0) : v * rot;
    if (!at_one) rot *= inv;
  }
  return c;
}

}  // namespace

FourierSeries series_from_coeffs(CVector coeffs) {
  const double energy = coeffs.squaredNorm();
  return FourierSeries{std::move(coeffs), std::sqrt(std::max(0.0, 1.0 - energy))};
}

FourierSeries fourier_coeffs(const InnerFunction& phi, int n) {
  if (n < 1) throw Error("fourier_coeffs: n must be positive");
  CVector c = CVector::Zero(n);
  const int p = phi.monomial_order();
  if (p < n) c[p] = 1.0;

  for (const auto& bz : phi.blaschke_zeros()) {
    const CVector factor = blaschke_factor_coeffs(bz.zero, n);
    for (int i = 0; i < bz.multiplicity; ++i) c = convolve_truncated(c, factor);
  }
  for (const auto& atom : phi.singular_atoms())
    c = convolve_truncated(c, atom_factor_coeffs(atom, n));

  return series_from_coeffs(std::move(c));
}

std::optional<int> effective_degree(const InnerFunction& phi, double eps, int nmax) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error("effective_degree: eps must be in (0,1)");
  if (nmax < 0) throw Error("effective_degree: nmax must be non-negative");
  const FourierSeries s = fourier_coeffs(phi, nmax + 1);
  double energy = 0.0;
  const double target = eps * eps;
  for (int d = 0; d <= nmax; ++d) {
    energy += std::norm(s.coeffs[d]);
    if (1.0 - energy <= target) return d;
  }
  return std::nullopt;
}

}  // namespace tzlab
