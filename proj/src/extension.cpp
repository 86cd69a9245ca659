#include "resco/extension.hpp"

#include <functional>
#include <random>

#include "resco/error.hpp"
#include "resco/theorems.hpp"

namespace resco {

namespace {

int shift_index(int k, int even_dim) { return k < even_dim ? k : k + 1; }

StructureData extension_frame(const SuperAlgebra& base) {
  std::vector<std::string> names;
  for (int k = 0; k < base.even_dim(); ++k) names.push_back(base.name(k));
  names.push_back("c");
  for (int k = base.even_dim(); k < base.dim(); ++k) names.push_back(base.name(k));
  StructureData data(base.field(), base.even_dim() + 1, base.odd_dim(), std::move(names));
  const int d0 = base.even_dim();
  for (int x = 0; x < base.dim(); ++x)
    for (int y = 0; y < base.dim(); ++y)
      for (const auto& [k, v] : base.basis_bracket(x, y))
        data.at(shift_index(x, d0), shift_index(y, d0), shift_index(k, d0)) = v;
  return data;
}

/// c-coefficient of [b_x, b_y] in the extension is bracket(b_x, b_y).
using BilinearTerm = std::function<Fp(const Vector&, const Vector&)>;
/// c-coefficient of g0^[p] in the extension.
using PCorrection = std::function<Fp(const Vector&)>;

ExtensionSpec assemble(const SuperAlgebra& base, const PMapSpec& base_pmap, RestrictedCochain2 cocycle,
                       const BilinearTerm& bracket, const PCorrection& correction,
                       const std::function<Vector(const Vector&)>& base_power) {
  const int d0 = base.even_dim();
  StructureData data = extension_frame(base);
  for (int x = 0; x < base.dim(); ++x)
    for (int y = 0; y < base.dim(); ++y)
      data.at(shift_index(x, d0), shift_index(y, d0), d0) = bracket(base.basis(x), base.basis(y));
  ExtensionSpec E{base, base_pmap, std::move(cocycle), SuperAlgebra(std::move(data)), {}, d0};
  for (int k = 0; k < d0; ++k) {
    Vector v = E.lift(base_power(base.basis(k)));
    v(d0) += correction(base.basis(k));
    E.result_pmap.basis_values.push_back(v);
  }
  E.result_pmap.basis_values.push_back(E.result.zero());
  return E;
}

void check_catalog(const TwistedParams& P, CatalogKind kind, int i, int j) {
  const Field F(P.p);
  auto pm = [&](Residue a, Residue b) { return F(a) == F(b) || F(a) == -F(b); };
  auto range = [&](bool ok) {
    if (!ok)
      throw Error(Errc::IndexOutOfRange, to_string(kind) + " indices (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") out of range");
  };
  auto condition = [&](bool ok, const char* what) {
    if (!ok) throw Error(Errc::ConditionNotMet, to_string(kind) + ": " + what + " fails");
  };
  switch (kind) {
    case CatalogKind::G_ij:
      range(1 <= i && i < j && j <= P.m);
      condition(pm(P.lambda[i - 1], P.lambda[j - 1]), "lambda_i = +-lambda_j");
      break;
    case CatalogKind::G_i_mj:
      range(1 <= i && i <= j && j <= P.m);
      condition(pm(P.lambda[i - 1], P.lambda[j - 1]), "lambda_i = +-lambda_j");
      break;
    case CatalogKind::H_ij:
    case CatalogKind::H_i_nj:
      range(1 <= i && i <= j && j <= P.n);
      condition(pm(P.kappa[i - 1], P.kappa[j - 1]), "kappa_i = +-kappa_j");
      break;
    case CatalogKind::J_kl:
      range(1 <= i && i <= j && j <= P.t);
      break;
    case CatalogKind::G_split_i:
      range(1 <= i && i <= 2 * P.m + 1);
      break;
  }
}

/// The printed bracket correction, on the coordinates (a | b, c) of g and h.
Fp catalog_bracket(const TwistedParams& P, CatalogKind kind, int i, int j, const Vector& g, const Vector& h) {
  const Field F(P.p);
  const TwistedIndex ix{P.m, P.n, P.t};
  const int m = P.m, n = P.n;
  auto a = [&](int k) { return g(ix.e(k)); };
  auto a_ = [&](int k) { return h(ix.e(k)); };
  auto b = [&](int k) { return g(ix.w(k)); };
  auto b_ = [&](int k) { return h(ix.w(k)); };
  auto c = [&](int k) { return g(ix.eta(k)); };
  auto c_ = [&](int k) { return h(ix.eta(k)); };
  switch (kind) {
    case CatalogKind::G_ij: {
      const Fp r = F(P.lambda[i - 1]) / F(P.lambda[j - 1]);
      return a(i) * a_(j) - a(j) * a_(i) - r * a(m + i) * a_(m + j) + r * a(m + j) * a_(m + i);
    }
    case CatalogKind::G_i_mj: {
      const Fp r = F(P.lambda[i - 1]) / F(P.lambda[j - 1]);
      return a(i) * a_(m + j) - a(m + j) * a_(i) - r * a(m + i) * a_(j) + r * a(j) * a_(m + i);
    }
    case CatalogKind::H_ij: {
      const Fp s = F(P.kappa[i - 1]) / F(P.kappa[j - 1]);
      return -(b(i) * b_(j) + b(j) * b_(i) - s * b(n + i) * b_(n + j) - s * b(n + j) * b_(n + i));
    }
    case CatalogKind::H_i_nj: {
      const Fp s = F(P.kappa[i - 1]) / F(P.kappa[j - 1]);
      return -(b_(i) * b(n + j) + b_(n + j) * b(i) - s * b_(n + i) * b(j) - s * b_(j) * b(n + i));
    }
    case CatalogKind::J_kl:
      return -(c_(i) * c(j) + c_(j) * c(i));
    case CatalogKind::G_split_i:
      return F.zero();
  }
  return F.zero();
}

/// The printed [p] correction on the even coordinates d of g0.
Fp catalog_correction(const TwistedParams& P, CatalogKind kind, int i, int j, const Vector& g0) {
  const Field F(P.p);
  const TwistedIndex ix{P.m, P.n, P.t};
  const int m = P.m;
  const std::uint64_t p = static_cast<std::uint64_t>(P.p);
  auto d = [&](int k) { return g0(ix.e(k)); };
  const Fp half = F(2).inverse();
  switch (kind) {
    case CatalogKind::G_ij: {
      const Fp li = F(P.lambda[i - 1]), lj = F(P.lambda[j - 1]);
      return -half * d(2 * m + 2).pow(p - 2) *
             (li.pow(p - 2) * d(m + i) * d(j) - F(2) * lj.pow(p - 2) * d(m + j) * d(i) +
              li * lj.pow(p - 3) * d(j) * d(m + i));
    }
    case CatalogKind::G_i_mj: {
      const Fp li = F(P.lambda[i - 1]), lj = F(P.lambda[j - 1]);
      return -half * d(2 * m + 2).pow(p - 2) *
             (li.pow(p - 2) * d(m + i) * d(m + j) - lj.pow(p - 2) * d(j) * d(i) - lj.pow(p - 2) * d(i) * d(j) +
              li * lj.pow(p - 3) * d(m + j) * d(m + i));
    }
    case CatalogKind::H_ij:
    case CatalogKind::H_i_nj:
    case CatalogKind::J_kl:
      return F.zero();
    case CatalogKind::G_split_i:
      return d(i).pow(p);
  }
  return F.zero();
}

Vector closed_base_power(const TwistedParams& P, const Vector& g0) {
  const std::vector<Residue> mu = P.mu_or_zero();
  return closed_form_p_power(P.p, P.m, P.lambda, mu, g0);
}

Vector random_even(const SuperAlgebra& A, std::mt19937_64& rng) {
  Vector x = A.zero();
  for (int k = 0; k < A.even_dim(); ++k) x(k) = A.field().random(rng);
  return x;
}

}  // namespace

Vector ExtensionSpec::lift(const Vector& x) const {
  const int d0 = base.even_dim();
  Vector y = result.zero();
  for (int k = 0; k < base.dim(); ++k) y(shift_index(k, d0)) = x(k);
  return y;
}

Vector ExtensionSpec::project(const Vector& y) const {
  const int d0 = base.even_dim();
  Vector x = base.zero();
  for (int k = 0; k < base.dim(); ++k) x(k) = y(shift_index(k, d0));
  return x;
}

ExtensionSpec build_extension(const RestrictedComplex& base, const RestrictedCochain2& rc) {
  const CochainComplex& cx = base.ordinary();
  const WedgeBasis& W2 = cx.basis(2);
  for (Index k = 0; k < W2.size(); ++k)
    if (W2.parity(k) == 1 && !rc.phi.coords(k).is_zero())
      throw Error(Errc::OddCocycle, "cocycle has an odd component");
  const Cochain d2phi = cx.d2(rc.phi);
  for (Index k = 0; k < d2phi.coords.size(); ++k)
    if (!d2phi.coords(k).is_zero()) {
      std::string row;
      for (int x : cx.basis(3).tuple(k)) row += (row.empty() ? "" : ",") + base.algebra().name(x);
      throw Error(Errc::NotACocycle, "d2 phi is nonzero at (" + row + ")");
    }
  const Matrix ind = base.ind2(rc.phi);
  for (Index a = 0; a < ind.rows(); ++a)
    for (Index i = 0; i < ind.cols(); ++i)
      if (!ind(a, i).is_zero())
        throw Error(Errc::NotACocycle, "ind2 phi is nonzero at (" + base.algebra().name(static_cast<int>(a)) +
                                           "," + base.algebra().name(static_cast<int>(i)) + ")");
  return assemble(
      base.algebra(), base.pmap(), rc,
      [&](const Vector& g, const Vector& h) { return cx.evaluate2(rc.phi, g, h); },
      [&](const Vector& g0) { return base.compatible_evaluate(rc, g0); },
      [&](const Vector& g0) { return base.p_power(g0); });
}

ExtensionCheck verify_extension(const ExtensionSpec& E, int samples, std::uint64_t seed) {
  ExtensionCheck out;
  const AxiomReport axioms = verify_superalgebra(E.result.data());
  out.superalgebra = axioms.ok;
  if (!axioms.ok) out.message = axioms.axiom + ": " + axioms.message;
  const RestrictabilityVerdict verdict = verify_restricted(E.result, E.result_pmap, samples, seed);
  out.restricted = verdict.restricted;
  if (!verdict.restricted) out.message = verdict.message;

  const Vector c = E.central();
  out.central = gf::is_zero(E.result_pmap.basis_values[E.central_index]);
  for (int k = 0; k < E.result.dim() && out.central; ++k)
    if (!gf::is_zero(E.result.bracket(c, E.result.basis(k)))) out.central = false;

  out.projection = true;
  const SuperAlgebra& B = E.base;
  for (int x = 0; x < B.dim() && out.projection; ++x) {
    if (E.project(E.lift(B.basis(x))) != B.basis(x)) out.projection = false;
    for (int y = 0; y < B.dim() && out.projection; ++y)
      if (E.project(E.result.bracket(E.lift(B.basis(x)), E.lift(B.basis(y)))) !=
          B.bracket(B.basis(x), B.basis(y)))
        out.projection = false;
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples && out.projection; ++s) {
    const Vector g0 = random_even(B, rng);
    if (E.project(p_power(E.result, E.result_pmap, E.lift(g0))) != p_power(B, E.base_pmap, g0))
      out.projection = false;
  }
  if (!out.central && out.message.empty()) out.message = "c is not central or c^[p] != 0";
  if (!out.projection && out.message.empty()) out.message = "projection does not preserve the structure";
  return out;
}

std::string to_string(CatalogKind kind) {
  switch (kind) {
    case CatalogKind::G_ij: return "G_ij";
    case CatalogKind::G_i_mj: return "G_i_mj";
    case CatalogKind::H_ij: return "H_ij";
    case CatalogKind::H_i_nj: return "H_i_nj";
    case CatalogKind::J_kl: return "J_kl";
    case CatalogKind::G_split_i: return "G_split_i";
  }
  return "?";
}

std::optional<CatalogKind> parse_catalog_kind(const std::string& name) {
  for (CatalogKind k : {CatalogKind::G_ij, CatalogKind::G_i_mj, CatalogKind::H_ij, CatalogKind::H_i_nj,
                        CatalogKind::J_kl, CatalogKind::G_split_i})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::vector<CatalogEntry> catalog_entries(const TwistedParams& P) {
  std::vector<CatalogEntry> out;
  auto attempt = [&](CatalogKind kind, int i, int j) {
    try {
      check_catalog(P, kind, i, j);
      out.push_back({kind, i, j});
    } catch (const Error&) {
    }
  };
  for (int i = 1; i <= P.m; ++i)
    for (int j = i + 1; j <= P.m; ++j) attempt(CatalogKind::G_ij, i, j);
  for (int i = 1; i <= P.m; ++i)
    for (int j = i; j <= P.m; ++j) attempt(CatalogKind::G_i_mj, i, j);
  for (int i = 1; i <= P.n; ++i)
    for (int j = i; j <= P.n; ++j) attempt(CatalogKind::H_ij, i, j);
  for (int i = 1; i <= P.n; ++i)
    for (int j = i; j <= P.n; ++j) attempt(CatalogKind::H_i_nj, i, j);
  for (int k = 1; k <= P.t; ++k)
    for (int l = k; l <= P.t; ++l) attempt(CatalogKind::J_kl, k, l);
  for (int i = 1; i <= 2 * P.m + 1; ++i) attempt(CatalogKind::G_split_i, i, 0);
  return out;
}

Vector catalog_p_power(const TwistedSuper& base, CatalogKind kind, int i, int j, const Vector& g0) {
  check_catalog(base.params, kind, i, j);
  const int d0 = base.algebra.even_dim();
  const Vector below = closed_base_power(base.params, g0);
  Vector out = base.algebra.field().zeros(base.algebra.dim() + 1);
  for (int k = 0; k < base.algebra.dim(); ++k) out(shift_index(k, d0)) = below(k);
  out(d0) = catalog_correction(base.params, kind, i, j, g0);
  return out;
}

RestrictedCochain2 catalog_cocycle(const RestrictedComplex& rx, const TwistedParams& P, CatalogKind kind, int i,
                                   int j) {
  check_catalog(P, kind, i, j);
  const CochainComplex& cx = rx.ordinary();
  const Field& F = rx.field();
  const TwistedIndex ix{P.m, P.n, P.t};
  const int m = P.m, n = P.n;
  auto lam = [&](int k) { return F(P.lambda[k - 1]); };
  auto kap = [&](int k) { return F(P.kappa[k - 1]); };
  // The odd symbol w^{a,b} is -(1 + delta_ab) times the dual wedge.
  auto odd = [&](int a, int b) { return a == b ? F(-2) : F(-1); };
  std::vector<std::pair<Fp, std::vector<int>>> terms;
  Vector omega = F.zeros(rx.algebra().even_dim());
  switch (kind) {
    case CatalogKind::G_ij:
      terms = {{F.one(), {ix.e(i), ix.e(j)}}, {-(lam(i) / lam(j)), {ix.e(m + i), ix.e(m + j)}}};
      break;
    case CatalogKind::G_i_mj:
      terms = {{F.one(), {ix.e(i), ix.e(m + j)}}, {lam(i) / lam(j), {ix.e(j), ix.e(m + i)}}};
      break;
    case CatalogKind::H_ij:
      terms = {{odd(i, j), {ix.w(i), ix.w(j)}}, {-(kap(i) / kap(j)) * odd(i, j), {ix.w(n + i), ix.w(n + j)}}};
      break;
    case CatalogKind::H_i_nj:
      terms = {{odd(i, n + j), {ix.w(i), ix.w(n + j)}}, {-(kap(i) / kap(j)) * odd(j, n + i), {ix.w(j), ix.w(n + i)}}};
      break;
    case CatalogKind::J_kl:
      terms = {{odd(i, j), {ix.eta(i), ix.eta(j)}}};
      break;
    case CatalogKind::G_split_i:
      omega(ix.e(i)) = F.one();
      break;
  }
  // The tilde map vanishes on the even basis, so only (0, e-bar^i) carries basis values.
  return {terms.empty() ? cx.zero(2) : wedge_form(cx, terms), omega};
}

ExtensionSpec catalog_extension(const TwistedSuper& base, CatalogKind kind, int i, int j) {
  check_catalog(base.params, kind, i, j);
  const TwistedParams& P = base.params;
  const RestrictedComplex rx(base.algebra, base.pmap);
  RestrictedCochain2 rc = catalog_cocycle(rx, P, kind, i, j);
  return assemble(
      base.algebra, base.pmap, std::move(rc),
      [&](const Vector& g, const Vector& h) { return catalog_bracket(P, kind, i, j, g, h); },
      [&](const Vector& g0) { return catalog_correction(P, kind, i, j, g0); },
      [&](const Vector& g0) { return closed_base_power(P, g0); });
}

bool catalog_matches_generic(const TwistedSuper& base, CatalogKind kind, int i, int j, int samples,
                             std::uint64_t seed) {
  const ExtensionSpec closed = catalog_extension(base, kind, i, j);
  const RestrictedComplex rx(base.algebra, base.pmap);
  std::optional<ExtensionSpec> built;
  try {
    built = build_extension(rx, catalog_cocycle(rx, base.params, kind, i, j));
  } catch (const Error& e) {
    if (e.code() != Errc::NotACocycle && e.code() != Errc::OddCocycle) throw;
    return false;
  }
  const ExtensionSpec& generic = *built;
  if (!(generic.result == closed.result)) return false;
  if (!(generic.result_pmap == closed.result_pmap)) return false;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vector g0 = random_even(base.algebra, rng);
    if (p_power(generic.result, generic.result_pmap, generic.lift(g0)) != catalog_p_power(base, kind, i, j, g0))
      return false;
  }
  return true;
}

std::optional<Equivalence> equivalence_check(const RestrictedComplex& base, const ExtensionSpec& E1,
                                             const ExtensionSpec& E2, int samples, std::uint64_t seed) {
  if (!(E1.base == base.algebra()) || !(E2.base == base.algebra()) || !(E1.base_pmap == base.pmap()) ||
      !(E2.base_pmap == base.pmap()))
    throw Error(Errc::BaseMismatch, "extensions are not over the given restricted base");
  const Field& F = base.field();
  const SuperAlgebra& B = base.algebra();
  const Vector diff = base.chart(E2.cocycle) - base.chart(E1.cocycle);
  // psi must be even, so only the even degree-1 coordinates are free.
  std::vector<Index> even_cols;
  for (int k = 0; k < B.even_dim(); ++k) even_cols.push_back(k);
  const auto sol = gf::solve(F, gf::select_cols(base.d1_star_matrix(), even_cols), diff);
  if (!sol) return std::nullopt;

  Equivalence eq;
  eq.psi = F.zeros(B.dim());
  for (int k = 0; k < B.even_dim(); ++k) eq.psi(k) = (*sol)(k);
  const int d = E1.result.dim();
  eq.sigma = F.identity(d);
  for (int k = 0; k < B.dim(); ++k) eq.sigma(E1.central_index, shift_index(k, B.even_dim())) = eq.psi(k);

  const SuperAlgebra& G1 = E1.result;
  const SuperAlgebra& G2 = E2.result;
  auto sigma = [&](const Vector& x) -> Vector { return eq.sigma * x; };
  bool ok = true;
  for (int x = 0; x < d && ok; ++x) {
    if (E2.project(sigma(G1.basis(x))) != E1.project(G1.basis(x))) ok = false;
    for (int y = 0; y < d && ok; ++y)
      if (sigma(G1.bracket(G1.basis(x), G1.basis(y))) != G2.bracket(sigma(G1.basis(x)), sigma(G1.basis(y))))
        ok = false;
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < G1.even_dim() + samples && ok; ++s) {
    Vector g = G1.zero();
    if (s < G1.even_dim())
      g = G1.basis(s);
    else
      for (int k = 0; k < G1.even_dim(); ++k) g(k) = F.random(rng);
    if (sigma(p_power(G1, E1.result_pmap, g)) != p_power(G2, E2.result_pmap, sigma(g))) ok = false;
  }
  eq.verified = ok;
  return eq;
}

int even_center_dim(const SuperAlgebra& A) {
  const Field& F = A.field();
  const int d = A.dim(), d0 = A.even_dim();
  // Row (k, l): coefficient of b_l in [x, b_k] as a linear form in the even coordinates of x.
  Matrix M = F.zeros(static_cast<Index>(d) * d, d0);
  for (int i = 0; i < d0; ++i)
    for (int k = 0; k < d; ++k)
      for (const auto& [l, v] : A.basis_bracket(i, k)) M(static_cast<Index>(k) * d + l, i) = v;
  return d0 - static_cast<int>(gf::rank(F, M));
}

ExtensionSuiteReport extension_suite(const TwistedSuper& base, int trials, std::uint64_t seed) {
  ExtensionSuiteReport r;
  const RestrictedComplex rx(base.algebra, base.pmap);
  const Field& F = rx.field();
  auto note = [&](const std::string& what) {
    if (r.first_failure.empty()) r.first_failure = what;
  };

  const CohomologyReport h2s = restricted_cohomology(rx, 2, 100, seed);
  std::vector<Vector> reps;
  for (Index c = 0; c < h2s.representatives.cols(); ++c)
    if (h2s.representative_parity[c] == 0) reps.push_back(h2s.representatives.col(c));
  std::vector<ExtensionSpec> built;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    ++r.representatives;
    try {
      ExtensionSpec E = build_extension(rx, rx.from_chart(reps[k]));
      const ExtensionCheck check = verify_extension(E, 20, seed + k);
      const int center = even_center_dim(E.result);
      if (check.ok() && center == 2)
        ++r.representatives_ok;
      else
        note("representative " + std::to_string(k) + ": " + (check.ok() ? "even center " + std::to_string(center)
                                                                           : check.message));
      built.push_back(std::move(E));
    } catch (const Error& e) {
      note("representative " + std::to_string(k) + ": " + e.what());
    }
  }

  for (const CatalogEntry& entry : catalog_entries(base.params)) {
    ++r.catalog;
    if (catalog_matches_generic(base, entry.kind, entry.i, entry.j, 50, seed))
      ++r.catalog_ok;
    else
      note("catalog " + to_string(entry.kind) + "(" + std::to_string(entry.i) + "," + std::to_string(entry.j) + ")");
  }

  for (std::size_t a = 0; a < built.size(); ++a)
    for (std::size_t b = a + 1; b < built.size(); ++b) {
      ++r.pairs;
      if (!equivalence_check(rx, built[a], built[b], 5, seed))
        ++r.pairs_ok;
      else
        note("representatives " + std::to_string(a) + " and " + std::to_string(b) + " are equivalent");
    }

  if (reps.empty()) return r;
  std::mt19937_64 rng(seed);
  const Index w1 = rx.ordinary().basis(1).size();
  auto random_psi = [&] {
    Cochain psi{1, F.zeros(w1)};
    for (int k = 0; k < rx.algebra().even_dim(); ++k) psi.coords(k) = F.random(rng);
    return psi;
  };
  auto combination = [&](const std::vector<Fp>& coeffs) {
    Vector v = F.zeros(rx.c2_size());
    for (std::size_t k = 0; k < reps.size(); ++k) v += coeffs[k] * reps[k];
    return v;
  };
  auto random_coeffs = [&] {
    std::vector<Fp> u(reps.size());
    for (Fp& x : u) x = F.random(rng);
    return u;
  };
  auto extension_at = [&](const Vector& chart) { return build_extension(rx, rx.from_chart(chart)); };
  auto boundary = [&](const Cochain& psi) { return rx.chart(rx.d1_star(psi)); };
  for (int s = 0; s < trials; ++s) {
    const std::vector<Fp> u = random_coeffs();
    const Vector base_chart = combination(u);
    const Vector moved = base_chart + boundary(random_psi());
    ++r.equivalent_trials;
    const auto eq = equivalence_check(rx, extension_at(base_chart), extension_at(moved), 3, seed + s);
    if (eq && eq->verified)
      ++r.equivalent_ok;
    else
      note("cohomologous trial " + std::to_string(s) + " not equivalent");

    std::vector<Fp> v = random_coeffs();
    if (v == u) v[rng() % v.size()] += F.one();
    ++r.inequivalent_trials;
    if (!equivalence_check(rx, extension_at(combination(u) + boundary(random_psi())),
                           extension_at(combination(v) + boundary(random_psi())), 3, seed + s))
      ++r.inequivalent_ok;
    else
      note("non-cohomologous trial " + std::to_string(s) + " equivalent");
  }
  return r;
}

}  // namespace resco
