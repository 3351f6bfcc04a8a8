#pragma once

#include <json.hpp>

#include "tzlab/hardy.hpp"
#include "tzlab/inner_function.hpp"
#include "tzlab/regular_rep.hpp"

namespace tzlab {

using nlohmann::json;

/// {"monomial_order": p, "blaschke_zeros": [[re, im, mult], ...],
///  "singular_atoms": [[re, im, mass], ...]}
json symbol_to_json(const InnerFunction& phi);
InnerFunction symbol_from_json(const json& j);

/// Debug dump {"n": N, "safe_dim": s, "defect": d, "rows": [[re, im, ...], ...]};
/// not a stability-guaranteed format.
json operator_to_json(const TruncatedOperator& a);

/// {"variant":"zplus"} | {"variant":"qn","base":n,"depth":k}
/// | {"variant":"gamma","t_lo":[num,den],"t_hi":[num,den]}
json semigroup_to_json(const SemigroupSpec& spec);
SemigroupSpec semigroup_from_json(const json& j);

}  // namespace tzlab
