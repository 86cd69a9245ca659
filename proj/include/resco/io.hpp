#pragma once

// JSON exchange format for superalgebras:
//   {"p": 3, "even": [names], "odd": [names],
//    "brackets": [{"i": name, "j": name, "value": [[coeff, name], ...]}],
//    "pmap": [{"x": even name, "value": [[coeff, name], ...]}]}   (optional)
// Unlisted pairs are zero; the super-antisymmetric partner of every listed
// pair is filled in, and conflicting entries are rejected.

#include <optional>
#include <string>

#include "json.hpp"
#include "resco/pmap.hpp"
#include "resco/superalgebra.hpp"

namespace resco {

struct ParsedAlgebra {
  SuperAlgebra algebra;
  std::optional<PMapSpec> pmap;
};

/// Throws ParseError on malformed input and InvalidStructure when the axioms fail.
ParsedAlgebra algebra_from_json(const nlohmann::json& j);
ParsedAlgebra algebra_from_json_text(const std::string& text);

/// Nonzero brackets [b_i, b_j] with i <= j, in basis order.
nlohmann::json algebra_to_json(const SuperAlgebra& A, const PMapSpec* pmap = nullptr);

/// [[coeff, name], ...] for the nonzero coordinates of x.
nlohmann::json element_to_json(const SuperAlgebra& A, const Vector& x);

}  // namespace resco
