#pragma once

#include "ckx/axial.hpp"

#include <nlohmann/json.hpp>

namespace ckx {

/// Bare blade map {"": "3", "12": "-2/5"}; the element form wraps it as
/// {"blades": {...}}.
nlohmann::json blades_to_json(const CliffordElement& e);
nlohmann::json element_to_json(const CliffordElement& e);
CliffordElement element_from_blades_json(const nlohmann::json& j, unsigned m);

/// {"m": 3, "terms": [{"exps": [2,0,0,0], "coeff": {"": "1"}}, ...]},
/// terms in graded-lex order.
nlohmann::json polynomial_to_json(const CliffordPolynomial& p);
CliffordPolynomial polynomial_from_json(const nlohmann::json& j);

/// {"m": 3, "A": [[x0exp, rexp, coeff], ...], "B": [...]}.
nlohmann::json axial_to_json(const AxialPair& pair);

nlohmann::json univariate_to_json(const UnivariatePoly& p);

}  // namespace ckx
