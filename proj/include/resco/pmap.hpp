#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resco/superalgebra.hpp"

namespace resco {

/// A candidate [p]-operator, given by its values on the even basis.
struct PMapSpec {
  std::vector<Vector> basis_values;

  friend bool operator==(const PMapSpec&, const PMapSpec&) = default;
};

/// s_1(g,h), ..., s_{p-1}(g,h): i * s_i is the coefficient of t^{i-1} in
/// ad(t g + h)^{p-1}(g).
std::vector<Vector> s_terms(const SuperAlgebra& A, const Vector& g, const Vector& h);

/// Extends the basis values to an arbitrary even x through the scaling and
/// additivity axioms, adding one basis coordinate at a time in `order`
/// (default: ascending even indices).
Vector p_power(const SuperAlgebra& A, const PMapSpec& P, const Vector& x, std::span<const int> order = {});

/// Closed-form [p]-power on the twisted Heisenberg algebra h^lambda_m,
/// evaluated literally on the even coordinates a_1, ..., a_{2m+2} of x.
/// The result has the length of x; x must vanish outside those coordinates.
Vector closed_form_p_power(Residue p, int m, std::span<const Residue> lambda, std::span<const Residue> mu,
                           const Vector& x);

struct RestrictabilityVerdict {
  bool restricted = true;
  std::optional<std::string> failing_axiom;  // A1-scalar, A2-additivity, A3-ad-power, module-condition
  std::optional<std::pair<Vector, Vector>> witness;
  std::string message;
};

/// Checks (ad b)^p = ad(b^[p]) on the even basis, then scaling, additivity,
/// the ad-power identity and the odd-module condition on `samples` random
/// even elements drawn from `seed`.
RestrictabilityVerdict verify_restricted(const SuperAlgebra& A, const PMapSpec& P, int samples = 20,
                                         std::uint64_t seed = 1);

/// True iff p > 2 and all lambda_i^{p-1}, kappa_j^{p-1} coincide.
/// Throws BadPrime for non-prime p and ZeroParameter for a zero entry.
bool restrictable_predicate(Residue p, std::span<const Residue> lambda, std::span<const Residue> kappa);

}  // namespace resco
