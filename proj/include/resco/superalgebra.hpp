#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resco/gf.hpp"

namespace resco {

using gf::Field;
using gf::Fp;
using gf::Index;
using gf::Matrix;
using gf::Residue;
using gf::Vector;

/// Raw structure constants of a graded algebra: constants[(i*d + j)*d + k] is
/// the coefficient of b_k in [b_i, b_j]. Even basis elements come first.
struct StructureData {
  Residue p = 3;
  int even_dim = 0;
  int odd_dim = 0;
  std::vector<std::string> names;
  std::vector<Fp> constants;

  StructureData() = default;
  StructureData(const Field& F, int even, int odd, std::vector<std::string> basis_names);

  int dim() const noexcept { return even_dim + odd_dim; }
  int parity(int i) const noexcept { return i < even_dim ? 0 : 1; }
  Fp& at(int i, int j, int k) { return constants[(static_cast<std::size_t>(i) * dim() + j) * dim() + k]; }
  const Fp& at(int i, int j, int k) const {
    return constants[(static_cast<std::size_t>(i) * dim() + j) * dim() + k];
  }

  /// Sets [b_i, b_j] = value * b_k and the super-antisymmetric partner entry.
  void set_bracket(int i, int j, int k, Fp value);

  friend bool operator==(const StructureData&, const StructureData&) = default;
};

struct AxiomReport {
  bool ok = true;
  std::string axiom;                 // "super-antisymmetry", "parity", "jacobi"
  std::array<int, 3> triple{-1, -1, -1};
  std::string message;
};

/// Exhaustive check of super-antisymmetry, parity grading and graded Jacobi
/// over all basis triples. Stops at the first failure.
AxiomReport verify_superalgebra(const StructureData& data);

/// Finite-dimensional Lie superalgebra over F_p, validated on construction.
/// Elements are coordinate vectors in the ordered basis (even block first).
class SuperAlgebra {
public:
  explicit SuperAlgebra(StructureData data);

  const Field& field() const noexcept { return field_; }
  const StructureData& data() const noexcept { return data_; }
  int dim() const noexcept { return data_.dim(); }
  int even_dim() const noexcept { return data_.even_dim; }
  int odd_dim() const noexcept { return data_.odd_dim; }
  int parity(int i) const noexcept { return data_.parity(i); }
  const std::string& name(int i) const { return data_.names[i]; }
  std::optional<int> index_of(const std::string& name) const;

  Fp constant(int i, int j, int k) const { return data_.at(i, j, k); }
  /// Nonzero (k, coefficient) terms of [b_i, b_j].
  const std::vector<std::pair<int, Fp>>& basis_bracket(int i, int j) const {
    return sparse_[static_cast<std::size_t>(i) * dim() + j];
  }

  Vector basis(int i) const { return field_.unit(dim(), i); }
  Vector zero() const { return field_.zeros(dim()); }

  bool is_even(const Vector& x) const;
  bool is_odd(const Vector& x) const;

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Left-nested [[...[[g_1, g_2], g_3], ...], g_j].
  Vector nested_bracket(std::span<const Vector> args) const;
  /// Matrix of y -> [x, y]; x must be even.
  Matrix ad_matrix(const Vector& x) const;

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) { return a.data_ == b.data_; }

private:
  void check_owner(const Vector& x) const;

  Field field_;
  StructureData data_;
  std::vector<std::vector<std::pair<int, Fp>>> sparse_;
};

}  // namespace resco
