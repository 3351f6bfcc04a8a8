#include "tzlab/inner_function.hpp"

#include <algorithm>
#include <cmath>

#include "tzlab/errors.hpp"

namespace tzlab {

namespace {

constexpr double kAtomPointTol = 1e-12;
constexpr double kAtomMergeTol = 1e-12;
constexpr double kAtomEvalGuard = 1e-9;

}  // namespace

InnerFunction::InnerFunction(int monomial_order, std::vector<BlaschkeZero> zeros,
                             std::vector<SingularAtom> atoms)
    : monomial_order_(monomial_order), zeros_(std::move(zeros)), atoms_(std::move(atoms)) {
  if (monomial_order_ < 0) throw Error("monomial order must be non-negative");
  for (const auto& z : zeros_) {
    const double r = std::abs(z.zero);
    if (!(r > 0.0 && r < 1.0))
      throw Error("Blaschke zero must satisfy 0 < |zero| < 1 (origin zeros belong to the monomial order)");
    if (z.multiplicity < 1) throw Error("Blaschke multiplicity must be positive");
  }
  for (const auto& a : atoms_) {
    if (std::fabs(std::abs(a.point) - 1.0) > kAtomPointTol)
      throw Error("singular atom point must lie on the unit circle");
    if (!(a.mass > 0.0)) throw Error("singular atom mass must be positive");
  }
}

InnerFunction InnerFunction::monomial(int order) { return InnerFunction(order, {}, {}); }

InnerFunction InnerFunction::blaschke(std::vector<BlaschkeZero> zeros) {
  return InnerFunction(0, std::move(zeros), {});
}

InnerFunction InnerFunction::singular(double mass) { return singular(Complex(1.0, 0.0), mass); }

InnerFunction InnerFunction::singular(Complex point, double mass) {
  return InnerFunction(0, {}, {SingularAtom{point, mass}});
}

int InnerFunction::blaschke_degree() const {
  int d = 0;
  for (const auto& z : zeros_) d += z.multiplicity;
  return d;
}

double InnerFunction::total_atom_mass() const {
  double t = 0;
  for (const auto& a : atoms_) t += a.mass;
  return t;
}

bool InnerFunction::is_constant_one() const {
  return monomial_order_ == 0 && zeros_.empty() && atoms_.empty();
}

InnerFunction phi_t(double mass) { return InnerFunction::singular(mass); }

Complex evaluate(const InnerFunction& phi, Complex z) {
  for (const auto& a : phi.singular_atoms())
    if (std::abs(z - a.point) < kAtomEvalGuard)
      throw EvaluationAtAtom("evaluation point within 1e-9 of a singular atom");

  Complex v = std::pow(z, phi.monomial_order());
  for (const auto& bz : phi.blaschke_zeros()) {
    const Complex a = bz.zero;
    const Complex factor = (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
    for (int i = 0; i < bz.multiplicity; ++i) v *= factor;
  }
  for (const auto& at : phi.singular_atoms())
    v *= std::exp(at.mass * (at.point + z) / (z - at.point));
  return v;
}

InnerFunction multiply(const InnerFunction& a, const InnerFunction& b) {
  std::vector<BlaschkeZero> zeros = a.blaschke_zeros();
  zeros.insert(zeros.end(), b.blaschke_zeros().begin(), b.blaschke_zeros().end());

  std::vector<SingularAtom> atoms = a.singular_atoms();
  for (const auto& atom : b.singular_atoms()) {
    auto hit = std::find_if(atoms.begin(), atoms.end(), [&](const SingularAtom& x) {
      return std::abs(x.point - atom.point) <= kAtomMergeTol;
    });
    if (hit != atoms.end())
      hit->mass += atom.mass;
    else
      atoms.push_back(atom);
  }
  return InnerFunction(a.monomial_order() + b.monomial_order(), std::move(zeros), std::move(atoms));
}

InnerFunction power(const InnerFunction& phi, int k) {
  if (k < 1) throw Error("power exponent must be positive");
  std::vector<BlaschkeZero> zeros = phi.blaschke_zeros();
  for (auto& z : zeros) z.multiplicity *= k;
  std::vector<SingularAtom> atoms = phi.singular_atoms();
  for (auto& a : atoms) a.mass *= k;
  return InnerFunction(phi.monomial_order() * k, std::move(zeros), std::move(atoms));
}

SymbolClass classify(const InnerFunction& phi) {
  return phi.singular_atoms().empty() ? SymbolClass::FiniteBlaschke : SymbolClass::HasSingularPart;
}

}  // namespace tzlab
