#include "tzlab/json_io.hpp"

#include "tzlab/errors.hpp"

namespace tzlab {

json symbol_to_json(const InnerFunction& phi) {
  json zeros = json::array();
  for (const auto& z : phi.blaschke_zeros())
    zeros.push_back({z.zero.real(), z.zero.imag(), z.multiplicity});
  json atoms = json::array();
  for (const auto& a : phi.singular_atoms())
    atoms.push_back({a.point.real(), a.point.imag(), a.mass});
  return json{{"monomial_order", phi.monomial_order()},
              {"blaschke_zeros", zeros},
              {"singular_atoms", atoms}};
}

InnerFunction symbol_from_json(const json& j) {
  std::vector<BlaschkeZero> zeros;
  for (const auto& z : j.at("blaschke_zeros"))
    zeros.push_back(BlaschkeZero{Complex(z.at(0).get<double>(), z.at(1).get<double>()),
                                 z.at(2).get<int>()});
  std::vector<SingularAtom> atoms;
  for (const auto& a : j.at("singular_atoms"))
    atoms.push_back(SingularAtom{Complex(a.at(0).get<double>(), a.at(1).get<double>()),
                                 a.at(2).get<double>()});
  return InnerFunction(j.at("monomial_order").get<int>(), std::move(zeros), std::move(atoms));
}

json operator_to_json(const TruncatedOperator& a) {
  const int n = a.dim();
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      row.push_back(a.matrix(i, j).real());
      row.push_back(a.matrix(i, j).imag());
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", n}, {"safe_dim", a.safe_dim}, {"defect", a.defect_bound}, {"rows", rows}};
}

json semigroup_to_json(const SemigroupSpec& spec) {
  switch (spec.kind()) {
    case SemigroupSpec::Kind::Zplus: return json{{"variant", "zplus"}};
    case SemigroupSpec::Kind::Qn:
      return json{{"variant", "qn"}, {"base", spec.base()}, {"depth", spec.depth()}};
    case SemigroupSpec::Kind::Gamma:
      return json{{"variant", "gamma"},
                  {"t_lo", {spec.t_lo().num(), spec.t_lo().den()}},
                  {"t_hi", {spec.t_hi().num(), spec.t_hi().den()}}};
  }
  throw Error("semigroup_to_json: bad kind");
}

SemigroupSpec semigroup_from_json(const json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "zplus") return SemigroupSpec::zplus();
  if (variant == "qn") return SemigroupSpec::qn(j.at("base").get<int>(), j.at("depth").get<int>());
  if (variant == "gamma") {
    const auto& lo = j.at("t_lo");
    const auto& hi = j.at("t_hi");
    return SemigroupSpec::gamma(Rational(lo.at(0).get<long long>(), lo.at(1).get<long long>()),
                                Rational(hi.at(0).get<long long>(), hi.at(1).get<long long>()));
  }
  throw ConfigError("semigroup_from_json: unknown variant '" + variant + "'");
}

}  // namespace tzlab
