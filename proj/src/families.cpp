#include "resco/families.hpp"

#include <string>

namespace resco {

namespace {

std::vector<std::string> labels(const std::string& prefix, int count, int first = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void check_counts(const TwistedParams& P) {
  if (P.m < 0 || P.n < 0 || P.t < 0) throw Error(Errc::InvalidStructure, "negative family size");
  if (static_cast<int>(P.lambda.size()) != P.m)
    throw Error(Errc::InvalidStructure, "lambda needs " + std::to_string(P.m) + " entries");
  if (static_cast<int>(P.kappa.size()) != P.n)
    throw Error(Errc::InvalidStructure, "kappa needs " + std::to_string(P.n) + " entries");
  if (!P.mu.empty() && static_cast<int>(P.mu.size()) != 2 * P.m + 2)
    throw Error(Errc::InvalidStructure, "mu needs " + std::to_string(2 * P.m + 2) + " entries");
}

void check_nonzero(Residue p, const std::vector<Residue>& values, const char* name) {
  for (Residue x : values)
    if (x % p == 0) throw Error(Errc::ZeroParameter, std::string(name) + " entry is zero mod p");
}

PMapSpec twisted_pmap(const SuperAlgebra& A, const TwistedParams& P) {
  const Field& F = A.field();
  const std::vector<Residue> mu = P.mu_or_zero();
  const int center = 2 * P.m;
  PMapSpec spec;
  for (int i = 0; i < 2 * P.m + 2; ++i) spec.basis_values.push_back(F(mu[i]) * A.basis(center));
  spec.basis_values.back() += P.abs_lambda() * A.basis(2 * P.m + 1);
  return spec;
}

}  // namespace

Fp TwistedParams::abs_lambda() const {
  const Field F(p);
  const auto e = static_cast<std::uint64_t>(p - 1);
  if (!lambda.empty()) return F(lambda[0]).pow(e);
  if (!kappa.empty()) return F(kappa[0]).pow(e);
  return F.one();
}

std::vector<Residue> TwistedParams::mu_or_zero() const {
  return mu.empty() ? std::vector<Residue>(2 * m + 2, 0) : mu;
}

Vector IdealEmbedding::embed(const SuperAlgebra& ambient, const Vector& x) const {
  Vector out = ambient.zero();
  for (std::size_t k = 0; k < ambient_index.size(); ++k) out(ambient_index[k]) = x(static_cast<Index>(k));
  return out;
}

Matrix IdealEmbedding::restricted_ad(const SuperAlgebra& ambient, const Vector& x) const {
  const Matrix ad = ambient.ad_matrix(x);
  std::vector<bool> inside(ambient.dim(), false);
  for (int k : ambient_index) inside[k] = true;
  const auto k = static_cast<Index>(ambient_index.size());
  Matrix out = ambient.field().zeros(k, k);
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i < ad.rows(); ++i)
      if (!inside[i] && !ad(i, ambient_index[j]).is_zero())
        throw Error(Errc::InvalidStructure, "ideal is not stable under ad x");
    for (Index i = 0; i < k; ++i) out(i, j) = ad(ambient_index[i], ambient_index[j]);
  }
  return out;
}

SuperAlgebra make_heisenberg(Residue p, int m, int n) {
  const Field F(p);
  if (m < 0 || n < 0) throw Error(Errc::InvalidStructure, "negative family size");
  StructureData data(F, 2 * m + 1, n, concat(labels("e", 2 * m + 1), labels("w", n)));
  const int center = 2 * m;
  for (int i = 0; i < m; ++i) data.set_bracket(i, m + i, center, F.one());
  for (int j = 0; j < n; ++j) data.set_bracket(2 * m + 1 + j, 2 * m + 1 + j, center, F.one());
  return SuperAlgebra(std::move(data));
}

SuperAlgebra twisted_brackets(const TwistedParams& P) {
  const Field F(P.p);
  check_counts(P);
  check_nonzero(P.p, P.lambda, "lambda");
  check_nonzero(P.p, P.kappa, "kappa");
  const int m = P.m, n = P.n;
  const TwistedIndex ix{m, n, P.t};
  StructureData data(F, 2 * m + 2, 2 * n + P.t,
                     concat(concat(labels("e", 2 * m + 2), labels("w", 2 * n)), labels("eta", P.t)));
  const int c = ix.center(), top = ix.top();
  for (int i = 1; i <= m; ++i) {
    data.set_bracket(ix.e(i), ix.e(m + i), c, F.one());
    data.set_bracket(top, ix.e(i), ix.e(m + i), F(P.lambda[i - 1]));
    data.set_bracket(top, ix.e(m + i), ix.e(i), F(P.lambda[i - 1]));
  }
  for (int j = 1; j <= n; ++j) {
    data.set_bracket(ix.w(j), ix.w(j), c, F.one());
    data.set_bracket(ix.w(n + j), ix.w(n + j), c, -F.one());
    data.set_bracket(top, ix.w(j), ix.w(n + j), F(P.kappa[j - 1]));
    data.set_bracket(top, ix.w(n + j), ix.w(j), F(P.kappa[j - 1]));
  }
  for (int k = 1; k <= P.t; ++k) data.set_bracket(ix.eta(k), ix.eta(k), c, F.one());
  return SuperAlgebra(std::move(data));
}

RestrictedAlgebra make_twisted_algebra(Residue p, int m, const std::vector<Residue>& lambda,
                                       const std::vector<Residue>& mu) {
  TwistedParams P{p, m, 0, 0, lambda, {}, mu};
  if (!gf::is_prime(p)) throw Error(Errc::BadPrime, std::to_string(p) + " is not prime");
  if (!restrictable_predicate(p, lambda, {})) throw Error(Errc::NotRestrictable, "lambda^{p-1} not constant");
  SuperAlgebra A = twisted_brackets(P);
  PMapSpec spec = twisted_pmap(A, P);
  return {std::move(A), std::move(spec)};
}

TwistedSuper make_twisted_super(const TwistedParams& P) {
  if (!gf::is_prime(P.p)) throw Error(Errc::BadPrime, std::to_string(P.p) + " is not prime");
  check_counts(P);
  if (!restrictable_predicate(P.p, P.lambda, P.kappa))
    throw Error(Errc::NotRestrictable, "no restricted structure for these parameters");
  SuperAlgebra A = twisted_brackets(P);
  PMapSpec spec = twisted_pmap(A, P);

  const Field& F = A.field();
  const int m = P.m, odd = 2 * P.n + P.t;
  std::vector<int> index;
  for (int i = 0; i < 2 * m + 1; ++i) index.push_back(i);
  for (int j = 0; j < odd; ++j) index.push_back(2 * m + 2 + j);
  std::vector<std::string> names;
  for (int k : index) names.push_back(A.name(k));
  StructureData ideal(F, 2 * m + 1, odd, names);
  const int d = static_cast<int>(index.size());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int k = 0; k < d; ++k) ideal.at(a, b, k) = A.constant(index[a], index[b], index[k]);

  return {P, std::move(A), std::move(spec), IdealEmbedding{SuperAlgebra(std::move(ideal)), std::move(index)}};
}

}  // namespace resco
