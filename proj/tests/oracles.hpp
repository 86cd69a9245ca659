#pragma once

// Independent dimension oracles. They work with full d x d bilinear forms and
// raw brackets and never touch the wedge basis or the restricted chart.

#include <vector>

#include "resco/cochains.hpp"
#include "resco/pmap.hpp"

namespace resco::oracle {

/// Linear conditions on a form Phi (coordinates Phi(b_i, b_j) at i*d + j),
/// restricted to a parity: super-antisymmetry, the cocycle identity
///   Phi([x,y],z) - Phi(x,[y,z]) + (-1)^{|x||y|} Phi(y,[x,z]) = 0
/// on basis triples, and Phi(b_i, b_j) = 0 unless |i| + |j| = parity.
inline Matrix cocycle_conditions(const SuperAlgebra& A, int parity) {
  const Field& F = A.field();
  const int d = A.dim();
  std::vector<Vector> rows;
  auto row = [&] { return F.zeros(static_cast<Index>(d) * d); };
  auto slot = [&](int i, int j) { return static_cast<Index>(i) * d + j; };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vector r = row();
      if ((A.parity(i) + A.parity(j)) % 2 != parity) {
        r(slot(i, j)) = F.one();
      } else {
        r(slot(i, j)) += F.one();
        r(slot(j, i)) += A.parity(i) * A.parity(j) == 1 ? -F.one() : F.one();
      }
      rows.push_back(r);
    }
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Vector r = row();
        for (const auto& [k, v] : A.basis_bracket(x, y)) r(slot(k, z)) += v;
        for (const auto& [k, v] : A.basis_bracket(y, z)) r(slot(x, k)) -= v;
        const Fp sign = A.parity(x) * A.parity(y) == 1 ? -F.one() : F.one();
        for (const auto& [k, v] : A.basis_bracket(x, z)) r(slot(y, k)) += sign * v;
        rows.push_back(r);
      }
  Matrix M = F.zeros(static_cast<Index>(rows.size()), static_cast<Index>(d) * d);
  for (Index k = 0; k < M.rows(); ++k) M.row(k) = rows[k].transpose();
  return M;
}

/// Coboundary forms (x, y) -> psi([x, y]) for psi = b^k of the given parity.
inline Matrix coboundary_forms(const SuperAlgebra& A, int parity) {
  const Field& F = A.field();
  const int d = A.dim();
  Matrix B = F.zeros(static_cast<Index>(d) * d, 0);
  for (int k = 0; k < d; ++k) {
    if (A.parity(k) != parity) continue;
    Matrix col = F.zeros(static_cast<Index>(d) * d, 1);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) col(static_cast<Index>(x) * d + y, 0) = A.constant(x, y, k);
    B = gf::hstack(B, col);
  }
  return B;
}

inline SDim h2(const SuperAlgebra& A) {
  const Field& F = A.field();
  int dims[2];
  for (int parity = 0; parity < 2; ++parity) {
    const Matrix C = cocycle_conditions(A, parity);
    const Index cocycles = C.cols() - gf::rank(F, C);
    dims[parity] = static_cast<int>(cocycles - gf::rank(F, coboundary_forms(A, parity)));
  }
  return {dims[0], dims[1]};
}

/// H^1 = functionals of each parity killing every bracket.
inline SDim h1(const SuperAlgebra& A) {
  const Field& F = A.field();
  int dims[2];
  for (int parity = 0; parity < 2; ++parity) {
    Matrix M = F.zeros(0, A.dim());
    for (int x = 0; x < A.dim(); ++x)
      for (int y = 0; y < A.dim(); ++y) {
        Matrix r = F.zeros(1, A.dim());
        for (const auto& [k, v] : A.basis_bracket(x, y))
          if (A.parity(k) == parity) r(0, k) = v;
        M = gf::vstack(M, r);
      }
    int size = 0;
    for (int k = 0; k < A.dim(); ++k) size += A.parity(k) == parity;
    dims[parity] = size - static_cast<int>(gf::rank(F, M));
  }
  return {dims[0], dims[1]};
}

/// H^1_*: even functionals killing brackets and every basis p-power, odd
/// functionals killing brackets.
inline SDim h1_star(const SuperAlgebra& A, const PMapSpec& P) {
  const Field& F = A.field();
  SDim base = h1(A);
  Matrix M = F.zeros(0, A.dim());
  for (int x = 0; x < A.dim(); ++x)
    for (int y = 0; y < A.dim(); ++y) {
      Matrix r = F.zeros(1, A.dim());
      for (const auto& [k, v] : A.basis_bracket(x, y)) r(0, k) = v;
      M = gf::vstack(M, r);
    }
  for (const Vector& v : P.basis_values) M = gf::vstack(M, Matrix(v.transpose()));
  Matrix even = F.zeros(M.rows(), A.even_dim());
  for (int k = 0; k < A.even_dim(); ++k) even.col(k) = M.col(k);
  base.even = A.even_dim() - static_cast<int>(gf::rank(F, even));
  return base;
}

/// H^2_* through forms: unknowns are Phi (d*d) and the basis values omega_i.
/// Closed: Phi an even cocycle and, for every basis b_a and even b_i,
///   Phi(b_a, b_i^[p]) - Phi([..[b_a, b_i], .., b_i], b_i) = 0   ((p-1) brackets).
/// Exact: (psi([x,y]), psi(b_i^[p])) for even psi. Only even classes exist
/// beyond the ordinary odd ones; the odd part is the odd H^2 cocycles killed by
/// the same condition, modulo odd coboundaries.
inline SDim h2_star(const SuperAlgebra& A, const PMapSpec& P) {
  const Field& F = A.field();
  const int d = A.dim(), d0 = A.even_dim();
  const auto p = static_cast<int>(F.p());
  const Index forms = static_cast<Index>(d) * d;
  int dims[2];
  for (int parity = 0; parity < 2; ++parity) {
    const Index unknowns = forms + (parity == 0 ? d0 : 0);
    Matrix C = gf::hstack(cocycle_conditions(A, parity), F.zeros(cocycle_conditions(A, parity).rows(), unknowns - forms));
    for (int a = 0; a < d; ++a)
      for (int i = 0; i < d0; ++i) {
        Matrix r = F.zeros(1, unknowns);
        const Vector& Pi = P.basis_values[i];
        for (int k = 0; k < d; ++k) r(0, static_cast<Index>(a) * d + k) += Pi(k);
        Vector nested = A.basis(a);
        for (int s = 0; s < p - 1; ++s) nested = A.bracket(nested, A.basis(i));
        for (int k = 0; k < d; ++k) r(0, static_cast<Index>(k) * d + i) -= nested(k);
        C = gf::vstack(C, r);
      }
    const Index closed = unknowns - gf::rank(F, C);
    Matrix B = F.zeros(unknowns, 0);
    for (int k = 0; k < d; ++k) {
      if (A.parity(k) != parity) continue;
      Matrix col = F.zeros(unknowns, 1);
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) col(static_cast<Index>(x) * d + y, 0) = A.constant(x, y, k);
      if (parity == 0)
        for (int i = 0; i < d0; ++i) col(forms + i, 0) = P.basis_values[i](k);
      B = gf::hstack(B, col);
    }
    dims[parity] = static_cast<int>(closed - gf::rank(F, B));
  }
  return {dims[0], dims[1]};
}

}  // namespace resco::oracle
