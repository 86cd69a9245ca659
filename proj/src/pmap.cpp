#include "resco/pmap.hpp"

#include <numeric>
#include <random>

namespace resco {

namespace {

void require_even(const SuperAlgebra& A, const Vector& x, const char* what) {
  if (!A.is_even(x)) throw Error(Errc::OddArgument, std::string(what) + " needs an even element");
}

Vector random_even(const SuperAlgebra& A, std::mt19937_64& rng) {
  Vector x = A.zero();
  for (int i = 0; i < A.even_dim(); ++i) x(i) = A.field().random(rng);
  return x;
}

Matrix matrix_power(const Matrix& m, std::uint64_t e) {
  Matrix out = m;
  for (std::uint64_t i = 1; i < e; ++i) out = (out * m).eval();
  return out;
}

}  // namespace

std::vector<Vector> s_terms(const SuperAlgebra& A, const Vector& g, const Vector& h) {
  require_even(A, g, "s_terms");
  require_even(A, h, "s_terms");
  const Field& F = A.field();
  const auto p = static_cast<int>(F.p());

  // coeffs[k] is the coefficient of t^k.
  std::vector<Vector> coeffs(p, A.zero());
  coeffs[0] = g;
  for (int step = 0; step < p - 1; ++step) {
    std::vector<Vector> next(p, A.zero());
    for (int k = 0; k < p; ++k) {
      if (gf::is_zero(coeffs[k])) continue;
      if (k + 1 < p) next[k + 1] += A.bracket(g, coeffs[k]);
      next[k] += A.bracket(h, coeffs[k]);
    }
    coeffs = std::move(next);
  }

  std::vector<Vector> s(p - 1);
  for (int i = 1; i < p; ++i) s[i - 1] = F(i).inverse() * coeffs[i - 1];
  return s;
}

Vector p_power(const SuperAlgebra& A, const PMapSpec& P, const Vector& x, std::span<const int> order) {
  require_even(A, x, "p_power");
  if (static_cast<int>(P.basis_values.size()) != A.even_dim())
    throw Error(Errc::InvalidStructure, "p-map needs one value per even basis element");
  const Field& F = A.field();
  const auto p = static_cast<std::uint64_t>(F.p());

  std::vector<int> ascending;
  if (order.empty()) {
    ascending.resize(A.even_dim());
    std::iota(ascending.begin(), ascending.end(), 0);
    order = ascending;
  }

  Vector sum = A.zero();
  Vector power = A.zero();
  bool started = false;
  for (int k : order) {
    const Fp a = x(k);
    if (a.is_zero()) continue;
    const Vector h = a * A.basis(k);
    Vector next = power + a.pow(p) * P.basis_values[k];
    if (started)
      for (const Vector& s : s_terms(A, sum, h)) next += s;
    power = std::move(next);
    sum += h;
    started = true;
  }
  return power;
}

Vector closed_form_p_power(Residue p, int m, std::span<const Residue> lambda, std::span<const Residue> mu,
                           const Vector& x) {
  const Field F(p);
  const int even = 2 * m + 2;
  for (Index i = even; i < x.size(); ++i)
    if (!x(i).is_zero())
      throw Error(Errc::SupportOutsideEvenTwistedBasis, "coordinate " + std::to_string(i + 1) + " is nonzero");
  if (x.size() < even || static_cast<int>(lambda.size()) != m)
    throw Error(Errc::SupportOutsideEvenTwistedBasis, "element does not live in h^lambda_m");

  const auto up = static_cast<std::uint64_t>(p);
  const Fp abs_lambda = m > 0 ? F(lambda[0]).pow(up - 1) : F.one();
  auto a = [&](int i) { return F(x(i - 1).residue()); };  // 1-based, as in the formula
  auto mu_at = [&](int i) { return static_cast<std::size_t>(i - 1) < mu.size() ? F(mu[i - 1]) : F.zero(); };
  const Fp last = a(2 * m + 2);

  Vector out = F.zeros(x.size());
  for (int i = 1; i <= 2 * m; ++i) out(i - 1) = last.pow(up - 1) * abs_lambda * a(i);
  out(2 * m + 1) = last.pow(up) * abs_lambda;

  Fp center = F.zero();
  for (int i = 1; i <= 2 * m + 2; ++i) center += a(i).pow(up) * mu_at(i);
  Fp twist = F.zero();
  for (int i = 1; i <= m; ++i)
    twist += F(lambda[i - 1]).pow(up - 2) * (a(i) * a(i) - a(m + i) * a(m + i));
  center += F(2).inverse() * last.pow(up - 2) * twist;
  out(2 * m) = center;
  return out;
}

RestrictabilityVerdict verify_restricted(const SuperAlgebra& A, const PMapSpec& P, int samples, std::uint64_t seed) {
  const Field& F = A.field();
  const auto p = static_cast<std::uint64_t>(F.p());
  const int d = A.dim();
  RestrictabilityVerdict verdict;
  auto fail = [&](std::string axiom, Vector u, Vector v, std::string message) {
    verdict.restricted = false;
    verdict.failing_axiom = std::move(axiom);
    verdict.witness = std::make_pair(std::move(u), std::move(v));
    verdict.message = std::move(message);
    return verdict;
  };

  if (static_cast<int>(P.basis_values.size()) != A.even_dim())
    throw Error(Errc::InvalidStructure, "p-map needs one value per even basis element");
  for (const Vector& v : P.basis_values)
    if (!A.is_even(v)) throw Error(Errc::InvalidStructure, "p-map value is not even");

  // (ad x)^p = ad(x^[p]) column by column; odd columns are the module condition.
  auto check_ad_power = [&](const Vector& x) -> std::optional<RestrictabilityVerdict> {
    const Matrix lhs = matrix_power(A.ad_matrix(x), p);
    const Matrix rhs = A.ad_matrix(p_power(A, P, x));
    for (int j = 0; j < d; ++j)
      if (!gf::is_zero(Vector(lhs.col(j) - rhs.col(j))))
        return fail(A.parity(j) == 0 ? "A3-ad-power" : "module-condition", x, A.basis(j),
                    "(ad x)^p differs from ad(x^[p]) on " + A.name(j));
    return std::nullopt;
  };

  for (int i = 0; i < A.even_dim(); ++i)
    if (auto v = check_ad_power(A.basis(i))) return *v;

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vector g = random_even(A, rng);
    const Vector h = random_even(A, rng);
    const Fp a = F.random(rng);

    if (!(p_power(A, P, a * g) == a.pow(p) * p_power(A, P, g)))
      return fail("A1-scalar", g, a * g, "(a g)^[p] differs from a^p g^[p]");

    Vector rhs = p_power(A, P, g) + p_power(A, P, h);
    for (const Vector& term : s_terms(A, g, h)) rhs += term;
    if (!(p_power(A, P, g + h) == rhs)) return fail("A2-additivity", g, h, "(g+h)^[p] violates additivity");

    if (auto v = check_ad_power(g)) return *v;

    const Vector gp = p_power(A, P, g);
    for (int j = A.even_dim(); j < d; ++j) {
      Vector iterated = A.basis(j);
      for (std::uint64_t k = 0; k < p; ++k) iterated = A.bracket(g, iterated);
      if (!(iterated == A.bracket(gp, A.basis(j))))
        return fail("module-condition", g, A.basis(j), "p-fold bracket differs from [g^[p], h]");
    }
  }
  return verdict;
}

bool restrictable_predicate(Residue p, std::span<const Residue> lambda, std::span<const Residue> kappa) {
  if (!gf::is_prime(p)) throw Error(Errc::BadPrime, std::to_string(p) + " is not prime");
  for (Residue x : lambda)
    if (x % p == 0) throw Error(Errc::ZeroParameter, "lambda entry is zero mod p");
  for (Residue x : kappa)
    if (x % p == 0) throw Error(Errc::ZeroParameter, "kappa entry is zero mod p");
  if (p == 2) return false;

  const Field F(p);
  const auto e = static_cast<std::uint64_t>(p - 1);
  std::optional<Fp> common;
  auto agrees = [&](Residue x) {
    const Fp v = F(x).pow(e);
    if (!common) common = v;
    return *common == v;
  };
  for (Residue x : lambda)
    if (!agrees(x)) return false;
  for (Residue x : kappa)
    if (!agrees(x)) return false;
  return true;
}

}  // namespace resco
