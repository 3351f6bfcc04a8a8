#pragma once

#include <vector>

#include "tzlab/types.hpp"

namespace tzlab {

struct BlaschkeZero {
  Complex zero;        // 0 < |zero| < 1
  int multiplicity{1};
};

struct SingularAtom {
  Complex point;  // |point| = 1
  double mass{0};
};

/// Structured inner-function symbol
///
///   Phi(z) = z^p * prod_j b_{a_j}(z)^{m_j} * prod_i exp(t_i (xi_i + z)/(z - xi_i)),
///
/// where b_a(z) = (|a|/a)(a - z)/(1 - conj(a) z) is the normalized Blaschke
/// factor and each atom factor is the atomic singular part with boundary
/// point xi and mass t > 0. Zeros at the origin live in the monomial order.
/// The atom sign convention makes the exponent have negative real part in the
/// disk, so Phi_t(0) = e^{-t} for the single atom at xi = 1.
///
/// Values are immutable after construction and all operations on them are
/// pure, so concurrent use needs no coordination.
class InnerFunction {
 public:
  /// The constant function 1.
  InnerFunction() = default;

  /// Validates the invariants: zero moduli in (0,1), atom points on the
  /// circle within 1e-12, masses and multiplicities positive.
  InnerFunction(int monomial_order, std::vector<BlaschkeZero> zeros,
                std::vector<SingularAtom> atoms);

  static InnerFunction monomial(int order);
  static InnerFunction blaschke(std::vector<BlaschkeZero> zeros);
  /// Single atom at xi = 1 with the given mass: the symbol Phi_t.
  static InnerFunction singular(double mass);
  static InnerFunction singular(Complex point, double mass);

  int monomial_order() const { return monomial_order_; }
  const std::vector<BlaschkeZero>& blaschke_zeros() const { return zeros_; }
  const std::vector<SingularAtom>& singular_atoms() const { return atoms_; }

  int blaschke_degree() const;  // sum of multiplicities
  double total_atom_mass() const;
  bool is_constant_one() const;

 private:
  int monomial_order_{0};
  std::vector<BlaschkeZero> zeros_;
  std::vector<SingularAtom> atoms_;
};

/// Shorthand for the single-atom symbol Phi_t.
InnerFunction phi_t(double mass);

/// Pointwise value of the symbol. Valid for |z| < 1 and on the circle away
/// from the atom points. Throws EvaluationAtAtom when z is within 1e-9 of an
/// atom point.
Complex evaluate(const InnerFunction& phi, Complex z);

/// Product of symbols: monomial orders add, zero lists concatenate, atoms at
/// points equal within 1e-12 merge by summing masses.
InnerFunction multiply(const InnerFunction& a, const InnerFunction& b);

/// k-fold product: multiplicities and atom masses scale by k.
InnerFunction power(const InnerFunction& phi, int k);

enum class SymbolClass { FiniteBlaschke, HasSingularPart };

/// FiniteBlaschke iff the atomic singular part is empty.
SymbolClass classify(const InnerFunction& phi);

}  // namespace tzlab
