#pragma once

// Restricted one-dimensional central extensions g + Fc built from even
// restricted 2-cocycles, the named closed-form extensions of the twisted
// family, and equivalence of extensions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resco/families.hpp"
#include "resco/restricted.hpp"

namespace resco {

/// The extension has the base basis with c inserted after the even block.
struct ExtensionSpec {
  SuperAlgebra base;
  PMapSpec base_pmap;
  RestrictedCochain2 cocycle;
  SuperAlgebra result;
  PMapSpec result_pmap;
  int central_index = 0;

  Vector lift(const Vector& x) const;
  Vector project(const Vector& y) const;
  Vector central() const { return result.basis(central_index); }
};

/// [g,h]_G = [g,h] + phi(g ^ h) c and g0^[p]_G = g0^[p] + omega(g0) c.
/// Throws OddCocycle if phi has an odd component and NotACocycle if d^2 phi or
/// the ind^2 table is nonzero.
ExtensionSpec build_extension(const RestrictedComplex& base, const RestrictedCochain2& rc);

struct ExtensionCheck {
  bool superalgebra = false;
  bool restricted = false;
  bool central = false;         // c is central and c^[p] = 0
  bool projection = false;      // dropping c preserves brackets and [p]
  std::string message;
  bool ok() const { return superalgebra && restricted && central && projection; }
};

ExtensionCheck verify_extension(const ExtensionSpec& E, int samples = 20, std::uint64_t seed = 1);

enum class CatalogKind { G_ij, G_i_mj, H_ij, H_i_nj, J_kl, G_split_i };

std::string to_string(CatalogKind kind);
std::optional<CatalogKind> parse_catalog_kind(const std::string& name);

struct CatalogEntry {
  CatalogKind kind;
  int i = 0;
  int j = 0;  // unused for G_split_i
};

/// Every (kind, indices) whose index range and +- condition hold.
std::vector<CatalogEntry> catalog_entries(const TwistedParams& P);

/// The extension assembled from the closed-form bracket and [p] corrections.
/// Throws IndexOutOfRange or ConditionNotMet.
ExtensionSpec catalog_extension(const TwistedSuper& base, CatalogKind kind, int i, int j = 0);

/// Closed-form g0^[p] in the catalog extension, g0 even in the base.
Vector catalog_p_power(const TwistedSuper& base, CatalogKind kind, int i, int j, const Vector& g0);

/// The defining restricted cocycle (phi, phi~) or (0, e-bar^i). Odd-odd duals
/// follow the family's convention: the symbol w^{a,b} takes the value
/// -(1 + delta_ab) on (w_a, w_b).
RestrictedCochain2 catalog_cocycle(const RestrictedComplex& rx, const TwistedParams& P, CatalogKind kind, int i,
                                   int j = 0);

/// Builds the catalog cocycle generically and compares structure constants,
/// basis [p]-values and [p] on `samples` random even elements with the closed form.
bool catalog_matches_generic(const TwistedSuper& base, CatalogKind kind, int i, int j = 0, int samples = 50,
                             std::uint64_t seed = 1);

struct Equivalence {
  Vector psi;     // 1-cochain with d1_*(psi) = cocycle(E2) - cocycle(E1)
  Matrix sigma;   // g -> g + psi(g) c on the extension basis
  bool verified = false;
};

/// An equivalence sigma : E1 -> E2 with pi_2 sigma = pi_1, if one exists.
std::optional<Equivalence> equivalence_check(const RestrictedComplex& base, const ExtensionSpec& E1,
                                             const ExtensionSpec& E2, int samples = 10, std::uint64_t seed = 1);

/// dim of the even center, from the nullspace of the stacked ad-matrices.
int even_center_dim(const SuperAlgebra& A);

/// One parameter point's extension checks: every even H^2_* representative
/// builds and verifies with even center of dimension 2; every catalog entry
/// matches its generic construction; distinct representatives are pairwise
/// non-equivalent; `trials` random cohomologous pairs are equivalent and
/// `trials` random non-cohomologous pairs are not.
struct ExtensionSuiteReport {
  int representatives = 0, representatives_ok = 0;
  int catalog = 0, catalog_ok = 0;
  int pairs = 0, pairs_ok = 0;
  int equivalent_trials = 0, equivalent_ok = 0;
  int inequivalent_trials = 0, inequivalent_ok = 0;
  std::string first_failure;
  bool ok() const {
    return representatives_ok == representatives && catalog_ok == catalog && pairs_ok == pairs &&
           equivalent_ok == equivalent_trials && inequivalent_ok == inequivalent_trials;
  }
};

ExtensionSuiteReport extension_suite(const TwistedSuper& base, int trials = 50, std::uint64_t seed = 1);

}  // namespace resco
