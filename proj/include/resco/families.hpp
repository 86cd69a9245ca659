#pragma once

#include <vector>

#include "resco/pmap.hpp"
#include "resco/superalgebra.hpp"

namespace resco {

/// Parameters of the twisted Heisenberg superalgebra h^{lambda,kappa,mu}_{m,n,t}.
/// An empty mu stands for the zero vector.
struct TwistedParams {
  Residue p = 3;
  int m = 1;
  int n = 1;
  int t = 1;
  std::vector<Residue> lambda;
  std::vector<Residue> kappa;
  std::vector<Residue> mu;

  /// m, n, t >= 1, the hypothesis of the closed-form cohomology counts.
  bool in_theorem_range() const noexcept { return m >= 1 && n >= 1 && t >= 1; }
  /// lambda_1^{p-1}; kappa_1^{p-1} when m = 0; 1 when both are empty.
  Fp abs_lambda() const;
  /// mu padded with zeros to length 2m+2.
  std::vector<Residue> mu_or_zero() const;

  friend bool operator==(const TwistedParams&, const TwistedParams&) = default;
};

struct RestrictedAlgebra {
  SuperAlgebra algebra;
  PMapSpec pmap;
};

/// The Heisenberg ideal span{e_1..e_{2m+1} | w_1..w_{2n}, eta_1..eta_t} with
/// the induced bracket. ambient_index[k] is the ambient basis index of ideal
/// basis element k.
struct IdealEmbedding {
  SuperAlgebra ideal;
  std::vector<int> ambient_index;

  /// Coordinates of an ideal element in the ambient basis.
  Vector embed(const SuperAlgebra& ambient, const Vector& x) const;
  /// Matrix of y -> [x, y] on the ideal, for x even in the ambient algebra.
  Matrix restricted_ad(const SuperAlgebra& ambient, const Vector& x) const;
};

struct TwistedSuper {
  TwistedParams params;
  SuperAlgebra algebra;
  PMapSpec pmap;
  IdealEmbedding embedding;
};

/// h_{m,n}: [e_i, e_{m+i}] = [w_j, w_j] = e_{2m+1}; sdim (2m+1, n).
SuperAlgebra make_heisenberg(Residue p, int m, int n);

/// The twisted Heisenberg Lie algebra h^lambda_m with its mu-parameterized [p]-map.
RestrictedAlgebra make_twisted_algebra(Residue p, int m, const std::vector<Residue>& lambda,
                                       const std::vector<Residue>& mu = {});

/// h^{lambda,kappa,mu}_{m,n,t} with basis e_1..e_{2m+2} | w_1..w_{2n}, eta_1..eta_t.
TwistedSuper make_twisted_super(const TwistedParams& params);

/// Twisted superalgebra brackets without the restrictability check (any nonzero
/// parameters, any odd prime).
SuperAlgebra twisted_brackets(const TwistedParams& params);

/// Basis index helpers for h^{lambda,kappa,mu}_{m,n,t}, all 1-based in the
/// family's own labels and returning 0-based positions.
struct TwistedIndex {
  int m, n, t;
  int e(int i) const { return i - 1; }
  int w(int j) const { return 2 * m + 2 + j - 1; }
  int eta(int k) const { return 2 * m + 2 + 2 * n + k - 1; }
  int center() const { return 2 * m; }
  int top() const { return 2 * m + 1; }
};

}  // namespace resco
