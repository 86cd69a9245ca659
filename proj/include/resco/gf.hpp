#pragma once

// Prime-field scalars and exact dense linear algebra on Eigen containers.

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "resco/error.hpp"

namespace resco::gf {

using Residue = std::int64_t;
using Index = Eigen::Index;

/// Element of F_p. An element with modulus 0 is an untyped integer literal
/// (Eigen creates these through Scalar(0) / Scalar(1)); it takes the modulus
/// of the first typed operand it is combined with.
class Fp {
public:
  constexpr Fp() = default;
  constexpr Fp(int literal) : value_(literal) {}  // NOLINT: Eigen needs the implicit form
  Fp(Residue value, Residue modulus);

  Residue residue() const noexcept { return value_; }
  Residue modulus() const noexcept { return modulus_; }
  bool typed() const noexcept { return modulus_ != 0; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp pow(std::uint64_t exponent) const;
  Fp inverse() const;

  Fp operator-() const;
  Fp& operator+=(const Fp& rhs);
  Fp& operator-=(const Fp& rhs);
  Fp& operator*=(const Fp& rhs);
  Fp& operator/=(const Fp& rhs);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b);

private:
  Residue value_ = 0;
  Residue modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

}  // namespace resco::gf

namespace Eigen {

template <>
struct NumTraits<resco::gf::Fp> : GenericNumTraits<resco::gf::Fp> {
  using Real = resco::gf::Fp;
  using NonInteger = resco::gf::Fp;
  using Literal = resco::gf::Fp;
  using Nested = resco::gf::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace resco::gf {

using Matrix = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;

bool is_prime(Residue n) noexcept;

/// The prime field F_p, p an odd prime.
class Field {
public:
  explicit Field(Residue p);

  Residue p() const noexcept { return p_; }
  Fp operator()(Residue value) const { return Fp(value, p_); }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }

  Matrix zeros(Index rows, Index cols) const { return Matrix::Constant(rows, cols, zero()); }
  Vector zeros(Index n) const { return Vector::Constant(n, zero()); }
  Matrix identity(Index n) const;
  Vector unit(Index n, Index i) const;

  /// Normalizes every entry to this field; throws ModulusMismatch on foreign entries.
  Matrix typed(const Matrix& m) const;

  template <class Rng>
  Fp random(Rng& rng) const {
    return (*this)(std::uniform_int_distribution<Residue>(0, p_ - 1)(rng));
  }
  template <class Rng>
  Fp random_nonzero(Rng& rng) const {
    return (*this)(std::uniform_int_distribution<Residue>(1, p_ - 1)(rng));
  }
  template <class Rng>
  Vector random_vector(Index n, Rng& rng) const {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = random(rng);
    return v;
  }

  friend bool operator==(const Field&, const Field&) = default;

private:
  Residue p_;
};

struct Rref {
  Matrix reduced;
  Index rank = 0;
  std::vector<Index> pivots;
};

/// Reduced row echelon form. Pivot columns are chosen left to right and the
/// pivot row is the first row at or below the current one with a nonzero entry.
Rref rref(const Field& F, const Matrix& m);
Index rank(const Field& F, const Matrix& m);

/// Columns span ker m; one column per free variable of rref(m), with a 1 in
/// that free position.
Matrix nullspace(const Field& F, const Matrix& m);

/// Some x with a x = b, or nullopt if b is outside the column space.
std::optional<Vector> solve(const Field& F, const Matrix& a, const Vector& b);

/// Indices of the columns of `candidates` that extend a basis of span(base)
/// to a basis of span(base) + span(candidates), leftmost first.
std::vector<Index> extend_basis(const Field& F, const Matrix& base, const Matrix& candidates);

/// Linearly independent columns of m spanning its column space (pivot columns).
Matrix column_basis(const Field& F, const Matrix& m);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix select_rows(const Matrix& m, const std::vector<Index>& rows);
Matrix select_cols(const Matrix& m, const std::vector<Index>& cols);

bool is_zero(const Matrix& m);
bool is_zero(const Vector& v);

}  // namespace resco::gf
