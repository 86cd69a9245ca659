#pragma once

// Restricted cochains in degrees 1 to 3, restricted cohomology and the maps of
// the six-term sequence relating it to ordinary cohomology.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "resco/cochains.hpp"
#include "resco/pmap.hpp"

namespace resco {

/// p-semilinear functional on the even part, given by its values on the even basis.
struct FrobeniusMap {
  Vector values;

  Fp operator()(const Vector& x) const;
};

/// (phi, omega): omega is the phi-compatible map with the given values on
/// the even basis.
struct RestrictedCochain2 {
  Cochain phi;
  Vector omega;
};

/// (zeta, eta) with eta recorded on (full basis, even basis) pairs;
/// eta(a, i) is stored at eta(a, i).
struct RestrictedCochain3 {
  Cochain zeta;
  Matrix eta;
};

class RestrictedComplex {
public:
  RestrictedComplex(SuperAlgebra A, PMapSpec P);

  const CochainComplex& ordinary() const noexcept { return cx_; }
  const SuperAlgebra& algebra() const noexcept { return cx_.algebra(); }
  const Field& field() const noexcept { return cx_.field(); }
  const PMapSpec& pmap() const noexcept { return P_; }
  Vector p_power(const Vector& x) const { return resco::p_power(algebra(), P_, x); }

  /// C^2_* chart: phi coordinates followed by the omega values on the even basis.
  Index c2_size() const noexcept { return cx_.basis(2).size() + algebra().even_dim(); }
  std::vector<int> c2_parity() const;
  Vector chart(const RestrictedCochain2& rc) const;
  RestrictedCochain2 from_chart(const Vector& v) const;
  /// The chart vector of (0, e-bar^i).
  Vector frobenius_direction(int i) const;

  /// omega(x), extending the stored basis values through the compatibility
  /// rule one coordinate at a time in `order` (default ascending).
  Fp compatible_evaluate(const RestrictedCochain2& rc, const Vector& x, std::span<const int> order = {}) const;
  /// The compatible map of phi vanishing on the even basis.
  Fp tilde(const Cochain& phi, const Vector& x) const;
  /// The correction term of the compatibility rule for omega(g + h).
  Fp compatibility_term(const Cochain& phi, const Vector& g, const Vector& h) const;

  FrobeniusMap ind1(const Cochain& psi) const;
  /// ind^2 on (full basis, even basis) pairs; rows index the first slot.
  Matrix ind2(const Cochain& phi) const;
  /// phi(g ^ h^[p]) - phi([g, h, ..., h] ^ h) at arbitrary g and even h.
  Fp ind2_direct(const Cochain& phi, const Vector& g, const Vector& h) const;

  RestrictedCochain2 d1_star(const Cochain& psi) const;
  RestrictedCochain3 d2_star(const RestrictedCochain2& rc) const;
  /// Chart matrices: d1_star is c2_size x |W1|; d2_star stacks d^2 rows over
  /// the ind^2 rows (first slot a, even slot i at row |W3| + a*even_dim + i).
  const Matrix& d1_star_matrix() const noexcept { return d1s_; }
  const Matrix& d2_star_matrix() const noexcept { return d2s_; }
  /// Matrix of phi -> ind^2(phi) flattened as in d2_star_matrix.
  const Matrix& ind2_matrix() const noexcept { return ind2_; }

private:
  CochainComplex cx_;
  PMapSpec P_;
  Matrix d1s_, d2s_, ind2_;
};

/// H^1_* (with the annihilator of [g,g] + <g_0^[p]> as cross-check) or H^2_*.
CohomologyReport restricted_cohomology(const RestrictedComplex& rx, int q, int samples = 100,
                                       std::uint64_t seed = 1);

/// Dimension of the annihilator of [g,g] + <g_0^[p]>, the span taken over the
/// even basis and `samples` random even elements.
SDim h1_star_annihilator(const RestrictedComplex& rx, int samples, std::uint64_t seed);

struct DMapReport {
  std::vector<FrobeniusMap> images;  // one per H^1 representative
  Matrix image_basis;                // columns in the even-basis value chart
  int rank = 0;
  SDim kernel;
};

DMapReport map_D(const RestrictedComplex& rx, const CohomologyReport& h1);

struct HMapReport {
  std::vector<Matrix> tables;  // per H^2 representative: rows even g, columns basis h
  SDim kernel;
  Matrix kernel_combinations;  // columns: coefficients on the representatives
  bool semilinear = true;      // random non-basis g agrees with the basis extension
};

/// H_phi(g).h = phi(g ^ (ad g)^{p-1} h) - phi(g^[p] ^ h).
Fp h_value(const RestrictedComplex& rx, const Cochain& phi, const Vector& g, const Vector& h);
HMapReport map_H(const RestrictedComplex& rx, const CohomologyReport& h2, std::uint64_t seed = 1);

struct SixTermNode {
  std::string name;
  SDim lhs;
  SDim rhs;
  bool ok = false;
};

struct SixTermReport {
  std::vector<SixTermNode> nodes;
  bool ok = true;
  SDim h1, h1_star, h2, h2_star, ker_D, ker_H;
  int rank_D = 0;
};

/// Exactness at H^1_* and H^2_*, Hom_Fr dimension; general restricted superalgebras.
SixTermReport six_term_check(const RestrictedComplex& rx, std::uint64_t seed = 1);

}  // namespace resco
