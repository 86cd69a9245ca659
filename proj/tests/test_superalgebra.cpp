#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "resco/error.hpp"
#include "resco/families.hpp"

using namespace resco;

namespace {

TwistedSuper h1111() { return make_twisted_super({3, 1, 1, 1, {1}, {1}, {}}); }

}  // namespace

TEST_CASE("basis brackets of the twisted family") {
  const TwistedSuper T = h1111();
  const SuperAlgebra& A = T.algebra;
  const Field& F = A.field();
  const TwistedIndex ix{1, 1, 1};
  auto b = [&](int k) { return A.basis(k); };
  CHECK(A.bracket(b(ix.e(1)), b(ix.e(2))) == b(ix.center()));
  CHECK(A.bracket(b(ix.w(1)), b(ix.w(1))) == b(ix.center()));
  CHECK(A.bracket(b(ix.top()), b(ix.e(1))) == b(ix.e(2)));
  for (int k = 0; k < A.dim(); ++k) CHECK(gf::is_zero(A.bracket(b(ix.center()), b(k))));
  // [[e_4, e_1], e_4] = [e_2, e_4] = -e_1.
  const std::array<Vector, 3> args{b(ix.top()), b(ix.e(1)), b(ix.top())};
  CHECK(A.nested_bracket(args) == Vector(-F.one() * b(ix.e(1))));
  const std::array<Vector, 3> central{b(ix.e(1)), b(ix.e(2)), b(ix.e(1))};
  CHECK(gf::is_zero(A.nested_bracket(central)));
  const Vector x = b(ix.e(1)) + F(2) * b(ix.top());
  CHECK(gf::is_zero(A.bracket(x, x)));
}

TEST_CASE("ad matrices") {
  const TwistedSuper T = make_twisted_super({5, 2, 1, 1, {1, 4}, {2}, {}});
  const SuperAlgebra& A = T.algebra;
  const TwistedIndex ix{2, 1, 1};
  CHECK(gf::is_zero(A.ad_matrix(A.basis(ix.center()))));
  CHECK(gf::is_zero(A.ad_matrix(A.zero())));
  const Matrix ad = A.ad_matrix(A.basis(ix.top()));
  // Column j holds [e_top, b_j].
  CHECK(ad(ix.e(3), ix.e(1)) == A.field()(1));
  CHECK(ad(ix.e(1), ix.e(3)) == A.field()(1));
  CHECK(ad(ix.e(4), ix.e(2)) == A.field()(4));
  CHECK(ad(ix.e(2), ix.e(4)) == A.field()(4));
  CHECK(ad(ix.w(2), ix.w(1)) == A.field()(2));
}

TEST_CASE("verifier on good and planted structures") {
  CHECK(verify_superalgebra(h1111().algebra.data()).ok);
  CHECK(verify_superalgebra(make_heisenberg(7, 2, 3).data()).ok);

  const Field F(5);
  StructureData abelian(F, 2, 3, {"a", "b", "x", "y", "z"});
  CHECK(verify_superalgebra(abelian).ok);

  StructureData bad(F, 3, 0, {"a", "b", "c"});
  bad.at(0, 1, 2) = F(1);  // partner entry left at 0
  const AxiomReport r = verify_superalgebra(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "super-antisymmetry");
  CHECK(r.triple == std::array<int, 3>{0, 1, 2});
  CHECK_THROWS_AS(SuperAlgebra{bad}, Error);

  StructureData parity(F, 1, 1, {"a", "x"});
  parity.set_bracket(0, 1, 0, F(1));  // even result from an even-odd pair
  CHECK(verify_superalgebra(parity).axiom == "parity");

  // [a, b] = a, [a, c] = b, [b, c] = a fails Jacobi.
  StructureData jac(F, 3, 0, {"a", "b", "c"});
  jac.set_bracket(0, 1, 0, F(1));
  jac.set_bracket(0, 2, 1, F(1));
  jac.set_bracket(1, 2, 0, F(1));
  CHECK(verify_superalgebra(jac).axiom == "jacobi");
}

TEST_CASE("elements must belong to the algebra") {
  const SuperAlgebra A = h1111().algebra;
  const SuperAlgebra B = make_heisenberg(3, 1, 1);
  CHECK_THROWS_AS(A.bracket(A.basis(0), B.basis(0)), Error);
  CHECK(A.index_of("eta1") == std::optional<int>(6));
  CHECK_FALSE(A.index_of("nope"));
  CHECK(A.is_even(A.basis(0)));
  CHECK(A.is_odd(A.basis(5)));
  CHECK_FALSE(A.is_even(A.basis(0) + A.basis(5)));
}
