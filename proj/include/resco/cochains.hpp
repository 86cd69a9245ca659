#pragma once

// Chevalley-Eilenberg cochains with trivial coefficients, degrees 1 to 3.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resco/superalgebra.hpp"

namespace resco {

/// Super-dimension (even, odd).
struct SDim {
  int even = 0;
  int odd = 0;

  int total() const noexcept { return even + odd; }
  int operator[](int parity) const noexcept { return parity == 0 ? even : odd; }
  friend SDim operator+(SDim a, SDim b) { return {a.even + b.even, a.odd + b.odd}; }
  friend bool operator==(const SDim&, const SDim&) = default;
};

std::string to_string(const SDim& s);

/// Canonical degree-q wedges of basis indices: non-decreasing tuples with no
/// repeated even index. Since even indices precede odd ones, even entries
/// come first. Enumerated lexicographically.
class WedgeBasis {
public:
  WedgeBasis(const SuperAlgebra& A, int q);

  int degree() const noexcept { return q_; }
  Index size() const noexcept { return static_cast<Index>(tuples_.size()); }
  const std::vector<int>& tuple(Index k) const { return tuples_[k]; }
  int parity(Index k) const { return parities_[k]; }
  std::vector<int> parities() const { return parities_; }
  /// Positions of the wedges with the given parity, in order.
  std::vector<Index> of_parity(int parity) const;

  /// Position and sign of an arbitrary index tuple after reordering into
  /// canonical form; nullopt when the wedge vanishes (a repeated even index).
  std::optional<std::pair<Index, int>> locate(std::span<const int> indices) const;
  std::optional<Index> find(const std::vector<int>& canonical) const;

private:
  int q_;
  std::vector<int> basis_parity_;
  std::vector<std::vector<int>> tuples_;
  std::vector<int> parities_;
  std::map<std::vector<int>, Index> lookup_;
};

WedgeBasis wedge_basis(const SuperAlgebra& A, int q);

/// Coordinates over the canonical wedge basis; e^I(b_I) = 1 on canonical I,
/// including repeated odd indices.
struct Cochain {
  int degree = 1;
  Vector coords;
};

class CochainComplex {
public:
  explicit CochainComplex(SuperAlgebra A);

  const SuperAlgebra& algebra() const noexcept { return A_; }
  const Field& field() const noexcept { return A_.field(); }
  const WedgeBasis& basis(int q) const;

  /// d^1 : C^1 -> C^2 and d^2 : C^2 -> C^3 as matrices on coordinates.
  const Matrix& d1() const noexcept { return d1_; }
  const Matrix& d2() const noexcept { return d2_; }
  Cochain d1(const Cochain& psi) const;
  Cochain d2(const Cochain& phi) const;

  Cochain zero(int q) const;
  /// The dual form e^{i_1,...,i_q} of a tuple; the tuple is reordered and the
  /// sign absorbed, so dual({1,0}) = -dual({0,1}) for even indices.
  Cochain dual(std::vector<int> indices) const;

  Fp evaluate_basis(const Cochain& c, std::span<const int> indices) const;
  /// Multilinear evaluation on arbitrary elements.
  Fp evaluate(const Cochain& c, std::span<const Vector> args) const;
  /// phi(x wedge y) for a degree-2 cochain.
  Fp evaluate2(const Cochain& phi, const Vector& x, const Vector& y) const;

  /// Matrix on degree-q coordinates of c -> x.c, where
  /// (x.c)(y_1,...,y_q) = -sum_i c(y_1,...,[x,y_i],...,y_q) and
  /// derivation(k, j) is the b_k coefficient of [x, b_j] for an even x.
  Matrix action_matrix(int q, const Matrix& derivation) const;
  Cochain act(const Vector& x, const Cochain& c) const;

private:
  SuperAlgebra A_;
  std::vector<WedgeBasis> bases_;
  Matrix d1_, d2_;
};

/// Result of a cohomology computation. Representatives are columns in the
/// cochain chart of the space (ordinary or restricted).
struct CohomologyReport {
  std::string space;
  SDim dims;
  Matrix representatives;
  std::vector<int> representative_parity;
  std::optional<SDim> formula;
  std::optional<bool> match;
  std::optional<SDim> cross_check;  // second computation, when one exists
  bool empirical_only = false;
  std::string note;
};

/// Graded ker(next) / im(prev) for a parity-preserving pair of maps.
/// `chart_parity` gives the parity of each column of `next` (rows of `prev`),
/// `prev_parity` the parity of each column of `prev`; `prefer` lists extra
/// kernel vectors tried first when choosing representatives.
CohomologyReport graded_quotient(const Field& F, const std::string& space, const Matrix& next,
                                 const Matrix& prev, const std::vector<int>& chart_parity,
                                 const std::vector<int>& prev_parity, const Matrix& prefer = Matrix());

/// H^q for q in {1, 2}. d^0 = 0, so H^1 = ker d^1.
CohomologyReport cohomology(const CochainComplex& cx, int q);

/// Dimension identity H^k(g) = H^k(I)^x + H^{k-1}(I) / x.H^{k-1}(I) for an
/// even element x whose adjoint action preserves the ideal I.
struct HsReport {
  int k = 1;
  SDim whole;
  SDim invariant;
  SDim coinvariant;
  bool ok = false;
};

HsReport hs_decomposition(const CochainComplex& whole, const CochainComplex& ideal, const Matrix& derivation,
                          int k);

}  // namespace resco
