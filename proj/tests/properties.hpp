#pragma once

// Randomized property suites with hand-rolled generators. Shared by the unit
// test binary and the acceptance runner.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "resco/extension.hpp"
#include "resco/theorems.hpp"

namespace resco::props {

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

using Rng = std::mt19937_64;

inline Residue pick_prime(Rng& rng, std::vector<Residue> primes = {3, 5, 7, 11, 13}) {
  return primes[rng() % primes.size()];
}

inline std::vector<Residue> random_units(Rng& rng, Residue p, int k) {
  std::vector<Residue> out(k);
  for (Residue& v : out) v = 1 + static_cast<Residue>(rng() % (p - 1));
  return out;
}

/// A random twisted parameter point with small dimensions (m, n, t may be 0).
inline TwistedParams random_params(Rng& rng, std::vector<Residue> primes = {3, 5}, int lo = 0) {
  TwistedParams P;
  P.p = pick_prime(rng, primes);
  P.m = lo + static_cast<int>(rng() % (3 - lo));
  P.n = lo + static_cast<int>(rng() % (3 - lo));
  P.t = lo + static_cast<int>(rng() % (3 - lo));
  P.lambda = random_units(rng, P.p, P.m);
  P.kappa = random_units(rng, P.p, P.n);
  P.mu.resize(2 * P.m + 2);
  for (Residue& v : P.mu) v = static_cast<Residue>(rng() % P.p);
  return P;
}

inline Vector random_even(const SuperAlgebra& A, Rng& rng) {
  Vector x = A.zero();
  for (int k = 0; k < A.even_dim(); ++k) x(k) = A.field().random(rng);
  return x;
}

inline Vector random_homogeneous(const SuperAlgebra& A, Rng& rng, int parity) {
  Vector x = A.zero();
  for (int k = 0; k < A.dim(); ++k)
    if (A.parity(k) == parity) x(k) = A.field().random(rng);
  return x;
}

/// Random even 2-cochain.
inline Cochain random_even_cochain(const CochainComplex& cx, Rng& rng) {
  Cochain c = cx.zero(2);
  for (Index k : cx.basis(2).of_parity(0)) c.coords(k) = cx.field().random(rng);
  return c;
}

struct Fixture {
  TwistedSuper T;
  RestrictedComplex rx;
};

inline std::vector<Fixture> fixtures(Rng& rng, int count) {
  std::vector<Fixture> out;
  while (static_cast<int>(out.size()) < count) {
    TwistedParams P = random_params(rng);
    TwistedSuper T = make_twisted_super(P);
    RestrictedComplex rx(T.algebra, T.pmap);
    out.push_back({std::move(T), std::move(rx)});
  }
  return out;
}

inline Outcome field_axioms(int cases, std::uint64_t seed) {
  Outcome o{"field axioms"};
  Rng rng(seed);
  for (int s = 0; s < cases; ++s) {
    const Field F(pick_prime(rng));
    const Fp a = F.random(rng), b = F.random(rng), c = F.random(rng);
    bool ok = (a + b) + c == a + (b + c) && a * b == b * a && (a * b) * c == a * (b * c) &&
              a * (b + c) == a * b + a * c && a + F.zero() == a && a * F.one() == a && a + (-a) == F.zero() &&
              a.pow(static_cast<std::uint64_t>(F.p())) == a;
    if (!a.is_zero()) ok = ok && a * a.inverse() == F.one() && (b / a) * a == b;
    o.record(ok, "p=" + std::to_string(F.p()) + " a=" + std::to_string(a.residue()) +
                     " b=" + std::to_string(b.residue()) + " c=" + std::to_string(c.residue()));
  }
  return o;
}

inline Outcome rank_nullity(int cases, std::uint64_t seed) {
  Outcome o{"rank-nullity"};
  Rng rng(seed);
  for (int s = 0; s < cases; ++s) {
    const Field F(pick_prime(rng, {3, 5, 7}));
    const Index rows = 1 + static_cast<Index>(rng() % 8), cols = 1 + static_cast<Index>(rng() % 8);
    Matrix M(rows, cols);
    // Mix in low-rank products so rank deficiency is common.
    if (rng() % 2) {
      const Index inner = 1 + static_cast<Index>(rng() % 3);
      Matrix A(rows, inner), B(inner, cols);
      for (Index i = 0; i < A.size(); ++i) A.data()[i] = F.random(rng);
      for (Index i = 0; i < B.size(); ++i) B.data()[i] = F.random(rng);
      M = A * B;
    } else {
      for (Index i = 0; i < M.size(); ++i) M.data()[i] = F.random(rng);
    }
    const Index r = gf::rank(F, M);
    const Matrix N = gf::nullspace(F, M);
    const bool ok = r + N.cols() == cols && gf::is_zero(Matrix(M * N)) && gf::rank(F, N) == N.cols() &&
                    gf::rank(F, Matrix(M.transpose())) == r;
    o.record(ok, std::to_string(rows) + "x" + std::to_string(cols) + " over F_" + std::to_string(F.p()));
  }
  return o;
}

inline Outcome super_jacobi(int cases, std::uint64_t seed) {
  Outcome o{"super-antisymmetry and graded Jacobi"};
  Rng rng(seed);
  const std::vector<Fixture> fx = fixtures(rng, 8);
  for (int s = 0; s < cases; ++s) {
    const SuperAlgebra& A = fx[s % fx.size()].T.algebra;
    const Field& F = A.field();
    const int px = static_cast<int>(rng() % 2), py = static_cast<int>(rng() % 2), pz = static_cast<int>(rng() % 2);
    const Vector x = random_homogeneous(A, rng, px), y = random_homogeneous(A, rng, py),
                 z = random_homogeneous(A, rng, pz);
    auto sign = [&](int a, int b) { return a * b == 1 ? -F.one() : F.one(); };
    const bool anti = A.bracket(x, y) == Vector(-sign(px, py) * A.bracket(y, x));
    const Vector jac = sign(px, pz) * A.bracket(x, A.bracket(y, z)) + sign(py, px) * A.bracket(y, A.bracket(z, x)) +
                       sign(pz, py) * A.bracket(z, A.bracket(x, y));
    o.record(anti && gf::is_zero(jac), "parities " + std::to_string(px) + std::to_string(py) + std::to_string(pz));
  }
  return o;
}

inline Outcome tilde_linearity(int cases, std::uint64_t seed) {
  Outcome o{"tilde linearity"};
  Rng rng(seed);
  const std::vector<Fixture> fx = fixtures(rng, 6);
  for (int s = 0; s < cases; ++s) {
    const RestrictedComplex& rx = fx[s % fx.size()].rx;
    const CochainComplex& cx = rx.ordinary();
    const Field& F = rx.field();
    const Cochain phi = random_even_cochain(cx, rng), psi = random_even_cochain(cx, rng);
    const Fp a = F.random(rng), b = F.random(rng), scale = F.random(rng);
    const Vector x = random_even(rx.algebra(), rng);
    const Cochain mix{2, Vector(a * phi.coords + b * psi.coords)};
    const bool linear = rx.tilde(mix, x) == a * rx.tilde(phi, x) + b * rx.tilde(psi, x);
    const bool homogeneous = rx.tilde(phi, Vector(scale * x)) == scale.pow(static_cast<std::uint64_t>(F.p())) * rx.tilde(phi, x);
    bool basis_zero = true;
    for (int k = 0; k < rx.algebra().even_dim(); ++k)
      basis_zero = basis_zero && rx.tilde(phi, rx.algebra().basis(k)).is_zero();
    o.record(linear && homogeneous && basis_zero, "case " + std::to_string(s));
  }
  return o;
}

inline Outcome ind2_omega_independence(int cases, std::uint64_t seed) {
  Outcome o{"ind2 independent of omega"};
  Rng rng(seed);
  const std::vector<Fixture> fx = fixtures(rng, 6);
  std::vector<Matrix> kernels;
  for (const Fixture& f : fx) kernels.push_back(gf::nullspace(f.rx.field(), f.rx.ordinary().d2()));
  for (int s = 0; s < cases; ++s) {
    const RestrictedComplex& rx = fx[s % fx.size()].rx;
    const Field& F = rx.field();
    const Cochain phi = random_even_cochain(rx.ordinary(), rng);
    const int d0 = rx.algebra().even_dim();
    const RestrictedCochain2 one{phi, F.random_vector(d0, rng)}, two{phi, F.random_vector(d0, rng)};
    const RestrictedCochain3 a = rx.d2_star(one), b = rx.d2_star(two);
    const bool same = a.eta == b.eta && a.zeta.coords == b.zeta.coords &&
                      Vector(rx.d2_star_matrix() * rx.chart(one)) == Vector(rx.d2_star_matrix() * rx.chart(two));
    // On an even cocycle the table reproduces the direct formula on random arguments.
    const Matrix& K = kernels[s % fx.size()];
    Cochain cocycle = rx.ordinary().zero(2);
    for (Index c = 0; c < K.cols(); ++c) cocycle.coords += F.random(rng) * K.col(c);
    for (Index k : rx.ordinary().basis(2).of_parity(1)) cocycle.coords(k) = F.zero();
    const Matrix table_c = rx.ind2(cocycle);
    const Vector g = random_homogeneous(rx.algebra(), rng, 0) + random_homogeneous(rx.algebra(), rng, 1);
    const Vector h = random_even(rx.algebra(), rng);
    Fp table = F.zero();
    for (int a2 = 0; a2 < rx.algebra().dim(); ++a2)
      for (int i = 0; i < d0; ++i) table += g(a2) * h(i).pow(static_cast<std::uint64_t>(F.p())) * table_c(a2, i);
    o.record(same && table == rx.ind2_direct(cocycle, g, h), "case " + std::to_string(s));
  }
  return o;
}

inline Outcome peeling_order(int cases, std::uint64_t seed) {
  Outcome o{"peeling-order independence"};
  Rng rng(seed);
  const std::vector<Fixture> fx = fixtures(rng, 6);
  std::vector<std::vector<Vector>> cocycles(fx.size());
  for (std::size_t f = 0; f < fx.size(); ++f) {
    const CohomologyReport h2s = restricted_cohomology(fx[f].rx, 2, 50, seed);
    for (Index c = 0; c < h2s.representatives.cols(); ++c)
      if (h2s.representative_parity[c] == 0) cocycles[f].push_back(h2s.representatives.col(c));
  }
  for (int s = 0; s < cases; ++s) {
    const std::size_t f = s % fx.size();
    const RestrictedComplex& rx = fx[f].rx;
    const Field& F = rx.field();
    const SuperAlgebra& A = rx.algebra();
    std::vector<int> order(A.even_dim());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Vector x = random_even(A, rng);
    bool ok = p_power(A, rx.pmap(), x, order) == p_power(A, rx.pmap(), x);
    // A random restricted cocycle: combination of representatives plus a coboundary.
    Vector chart = F.zeros(rx.c2_size());
    for (const Vector& v : cocycles[f]) chart += F.random(rng) * v;
    Cochain psi{1, F.zeros(rx.ordinary().basis(1).size())};
    for (int k = 0; k < A.even_dim(); ++k) psi.coords(k) = F.random(rng);
    chart += rx.chart(rx.d1_star(psi));
    const RestrictedCochain2 rc = rx.from_chart(chart);
    ok = ok && rx.compatible_evaluate(rc, x, order) == rx.compatible_evaluate(rc, x);
    o.record(ok, "case " + std::to_string(s));
  }
  return o;
}

inline std::vector<Outcome> all(int cases, std::uint64_t seed) {
  return {field_axioms(cases, seed),     rank_nullity(cases, seed + 1),           super_jacobi(cases, seed + 2),
          tilde_linearity(cases, seed + 3), ind2_omega_independence(cases, seed + 4), peeling_order(cases, seed + 5)};
}

}  // namespace resco::props
