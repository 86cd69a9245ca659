#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "resco/error.hpp"
#include "resco/theorems.hpp"

using namespace resco;

namespace {

struct Point {
  TwistedSuper T;
  RestrictedComplex rx;
  explicit Point(const TwistedParams& P) : T(make_twisted_super(P)), rx(T.algebra, T.pmap) {}
};

}  // namespace

TEST_CASE("Frobenius maps are p-semilinear") {
  const Field F(5);
  std::mt19937_64 rng(5);
  FrobeniusMap f{F.random_vector(4, rng)};
  for (int s = 0; s < 20; ++s) {
    const Vector x = F.random_vector(4, rng), y = F.random_vector(4, rng);
    const Fp a = F.random(rng), b = F.random(rng);
    CHECK(f(Vector(a * x + b * y)) == a.pow(5) * f(x) + b.pow(5) * f(y));
  }
}

TEST_CASE("tilde of e^{k,l} against the closed expression") {
  const TwistedParams P{5, 2, 1, 1, {1, 4}, {2}, {}};
  const Point pt(P);
  const RestrictedComplex& rx = pt.rx;
  const CochainComplex& cx = rx.ordinary();
  const Field& F = rx.field();
  const TwistedIndex ix{2, 1, 1};
  const int m = 2;
  std::mt19937_64 rng(9);
  for (int k = 1; k <= 2 * m; ++k)
    for (int l = k + 1; l <= 2 * m; ++l) {
      const Cochain phi = cx.dual({ix.e(k), ix.e(l)});
      for (int s = 0; s < 10; ++s) {
        Vector g0 = pt.T.algebra.zero();
        for (int i = 0; i < pt.T.algebra.even_dim(); ++i) g0(i) = F.random(rng);
        auto d = [&](int i) { return g0(ix.e(i)); };
        auto ekl = [&](int a, int b) { return cx.evaluate2(phi, pt.T.algebra.basis(ix.e(a)), pt.T.algebra.basis(ix.e(b))); };
        Fp sum = F.zero();
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= 2 * m; ++j)
            sum += F(P.lambda[i - 1]).pow(3) * (d(i) * d(j) * ekl(m + i, j) + d(m + i) * d(j) * ekl(i, j));
        const Fp expected = -F(2).inverse() * d(2 * m + 2).pow(3) * sum;
        CHECK(rx.tilde(phi, g0) == expected);
      }
    }
  // Forms on odd pairs have vanishing tilde.
  Vector g0 = pt.T.algebra.zero();
  for (int i = 0; i < pt.T.algebra.even_dim(); ++i) g0(i) = F(i + 1);
  CHECK(rx.tilde(cx.dual({ix.w(1), ix.w(1)}), g0).is_zero());
  CHECK(rx.tilde(cx.dual({ix.eta(1), ix.eta(1)}), g0).is_zero());
  CHECK(rx.tilde(cx.dual({ix.e(1), ix.e(3)}), pt.T.algebra.basis(ix.top())).is_zero());
}

TEST_CASE("ind1, d1_star and D") {
  const TwistedParams P{3, 1, 1, 1, {1}, {1}, {}};
  const Point pt(P);
  const RestrictedComplex& rx = pt.rx;
  const CochainComplex& cx = rx.ordinary();
  const Field& F = rx.field();
  const TwistedIndex ix{1, 1, 1};
  const FrobeniusMap D = rx.ind1(cx.dual({ix.top()}));
  CHECK(D.values == Vector(P.abs_lambda() * F.unit(4, ix.top())));
  CHECK(gf::is_zero(rx.ind1(cx.dual({ix.eta(1)})).values));
  CHECK(gf::is_zero(rx.ind1(cx.dual({ix.center()})).values));
  const RestrictedCochain2 img = rx.d1_star(cx.dual({ix.top()}));
  CHECK(gf::is_zero(img.phi.coords));
  CHECK(img.omega == D.values);
  CHECK(gf::is_zero(rx.chart(rx.d1_star(cx.zero(1)))));
  // With mu_3 != 0 the center functional is no longer killed.
  const Point mu({3, 1, 1, 1, {1}, {1}, {1, 0, 2, 0}});
  CHECK_FALSE(gf::is_zero(mu.rx.ind1(mu.rx.ordinary().dual({ix.center()})).values));
}

TEST_CASE("restricted differentials compose to zero") {
  const Point pt({5, 2, 1, 2, {1, 2}, {3}, {1, 2, 3, 4, 0, 1}});
  const RestrictedComplex& rx = pt.rx;
  const Field& F = rx.field();
  std::mt19937_64 rng(17);
  CHECK(gf::is_zero(Matrix(rx.d2_star_matrix() * rx.d1_star_matrix())));
  for (int s = 0; s < 100; ++s) {
    const Cochain psi{1, F.random_vector(rx.ordinary().basis(1).size(), rng)};
    const RestrictedCochain3 out = rx.d2_star(rx.d1_star(psi));
    CHECK(gf::is_zero(out.zeta.coords));
    CHECK(gf::is_zero(out.eta));
  }
  for (int i = 0; i < rx.algebra().even_dim(); ++i)
    CHECK(gf::is_zero(Vector(rx.d2_star_matrix() * rx.frobenius_direction(i))));
}

TEST_CASE("ind2 tables") {
  const TwistedParams P{5, 1, 1, 1, {1}, {1}, {}};
  const Point pt(P);
  const RestrictedComplex& rx = pt.rx;
  const CochainComplex& cx = rx.ordinary();
  const TwistedIndex ix{1, 1, 1};
  CHECK(gf::is_zero(rx.ind2(cx.zero(2))));
  const Matrix a5 = rx.ind2(cx.dual({ix.top(), ix.eta(1)}));
  CHECK_FALSE(a5(ix.eta(1), ix.top()).is_zero());
  for (const NamedCocycle& c : theorem_cocycles(cx, P)) {
    if (c.family > 4) continue;
    CAPTURE(c.label);
    CHECK(gf::is_zero(rx.ind2(c.phi)));
  }
}

TEST_CASE("restricted cohomology against the oracle") {
  const std::vector<TwistedParams> points{
      {3, 1, 1, 1, {1}, {1}, {}},
      {5, 2, 1, 2, {1, 2}, {3}, {}},
      {5, 1, 1, 1, {1}, {2}, {1, 2, 3, 4}},
      {3, 2, 2, 1, {1, 2}, {1, 1}, {0, 1, 0, 2, 1, 1}},
      {3, 1, 1, 0, {1}, {1}, {}},
  };
  for (const TwistedParams& P : points) {
    const Point pt(P);
    CAPTURE(P.m);
    CAPTURE(P.n);
    const CohomologyReport h1s = restricted_cohomology(pt.rx, 1);
    CHECK(h1s.dims == oracle::h1_star(pt.T.algebra, pt.T.pmap));
    CHECK(h1s.dims == SDim{0, P.t});
    REQUIRE(h1s.cross_check);
    CHECK(*h1s.cross_check == h1s.dims);
    CHECK(restricted_cohomology(pt.rx, 2).dims == oracle::h2_star(pt.T.algebra, pt.T.pmap));
  }
  const Point spot({5, 2, 1, 2, {1, 2}, {3}, {}});
  CHECK(oracle::h2_star(spot.T.algebra, spot.T.pmap) == SDim{10, 2});
}

TEST_CASE("H2_* representatives prefer the Frobenius directions") {
  const TwistedParams P{3, 2, 1, 1, {1, 2}, {1}, {}};
  const Point pt(P);
  const CohomologyReport r = restricted_cohomology(pt.rx, 2);
  const Field& F = pt.rx.field();
  for (int i = 0; i <= 2 * P.m; ++i) {
    bool found = false;
    for (Index c = 0; c < r.representatives.cols(); ++c)
      found = found || Vector(r.representatives.col(c)) == pt.rx.frobenius_direction(i);
    CHECK(found);
  }
  // e-bar^{2m+2} is a coboundary: d1_*(e^{2m+2}) = (0, |lambda| e-bar^{2m+2}).
  const Vector top = pt.rx.frobenius_direction(2 * P.m + 1);
  CHECK(gf::solve(F, pt.rx.d1_star_matrix(), top));
}

TEST_CASE("six-term sequence") {
  for (const TwistedParams& P : {TwistedParams{3, 1, 1, 1, {1}, {1}, {}}, TwistedParams{5, 2, 1, 2, {1, 2}, {3}, {}}}) {
    const PointReport r = analyze(P);
    for (const SixTermNode& node : r.six_term.nodes) {
      CAPTURE(node.name);
      CHECK(node.ok);
    }
    CHECK(r.im_D_is_top);
    CHECK(r.frobenius_classes);
    CHECK(r.six_term.ker_H == r.named_span);
  }
  // A Heisenberg superalgebra with the zero p-map has im D = 0.
  const SuperAlgebra H = make_heisenberg(3, 1, 1);
  const RestrictedComplex rx(H, PMapSpec{std::vector<Vector>(H.even_dim(), H.zero())});
  const DMapReport D = map_D(rx, cohomology(rx.ordinary(), 1));
  CHECK(D.rank == 0);
  CHECK(six_term_check(rx).ok);
}

TEST_CASE("H map on an A5 class") {
  const Point pt({5, 1, 1, 1, {1}, {1}, {}});
  const TwistedIndex ix{1, 1, 1};
  const Cochain phi = pt.rx.ordinary().dual({ix.top(), ix.eta(1)});
  CHECK_FALSE(h_value(pt.rx, phi, pt.T.algebra.basis(ix.top()), pt.T.algebra.basis(ix.eta(1))).is_zero());
}
