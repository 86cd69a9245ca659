#include "resco/theorems.hpp"

namespace resco {

namespace {

bool plus_minus(const Field& F, Residue a, Residue b) { return F(a) == F(b) || F(a) == -F(b); }

int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace

ParameterCounts parameter_counts(const TwistedParams& P) {
  const Field F(P.p);
  ParameterCounts c;
  for (int i = 0; i < P.m; ++i)
    for (int j = i + 1; j < P.m; ++j)
      if (plus_minus(F, P.lambda[i], P.lambda[j])) ++c.lambda_pairs;
  for (int i = 0; i < P.n; ++i)
    for (int j = i; j < P.n; ++j)
      if (plus_minus(F, P.kappa[i], P.kappa[j])) ++c.kappa_pairs;
  for (int i = 0; i < P.m; ++i)
    for (int j = 0; j < P.n; ++j)
      if (plus_minus(F, P.lambda[i], P.kappa[j])) ++c.mixed_pairs;
  return c;
}

SDim theorem_h1(const TwistedParams& P) { return {1, P.t}; }

SDim theorem_h2(const TwistedParams& P) {
  const ParameterCounts c = parameter_counts(P);
  return {2 * c.lambda_pairs + 2 * c.kappa_pairs + P.t * (P.t + 1) / 2 + P.m - 1, 2 * c.mixed_pairs + P.t};
}

SDim theorem_h2_star(const TwistedParams& P) {
  const ParameterCounts c = parameter_counts(P);
  return {2 * c.lambda_pairs + 2 * c.kappa_pairs + P.t * (P.t + 1) / 2 + 3 * P.m, 2 * c.mixed_pairs};
}

SDim heisenberg_h1(int m, int n, int t) { return {2 * m, 2 * n + t}; }

SDim heisenberg_h2(int m, int n, int t) {
  return {choose2(2 * m) + 2 * n * t + n * (2 * n + 1) + choose2(t) + (t - 1), 2 * m * (2 * n + t)};
}

Cochain wedge_form(const CochainComplex& cx, const std::vector<std::pair<Fp, std::vector<int>>>& terms) {
  const int q = terms.empty() ? 2 : static_cast<int>(terms.front().second.size());
  Cochain c = cx.zero(q);
  for (const auto& [coeff, idx] : terms)
    if (auto loc = cx.basis(q).locate(idx)) c.coords(loc->first) += coeff * cx.field()(loc->second);
  return c;
}

std::vector<NamedCocycle> theorem_cocycles(const CochainComplex& cx, const TwistedParams& P) {
  const Field& F = cx.field();
  const TwistedIndex ix{P.m, P.n, P.t};
  const int m = P.m, n = P.n;
  auto lam = [&](int i) { return F(P.lambda[i - 1]); };
  auto kap = [&](int j) { return F(P.kappa[j - 1]); };
  std::vector<NamedCocycle> out;
  auto add = [&](int family, std::string label, std::vector<std::pair<Fp, std::vector<int>>> terms) {
    out.push_back({family, std::move(label), wedge_form(cx, terms)});
  };
  auto tag = [](const char* head, int i, int j) {
    return std::string(head) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };

  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      if (!plus_minus(F, P.lambda[i - 1], P.lambda[j - 1])) continue;
      const Fp r = lam(i) / lam(j);
      add(1, tag("A1a", i, j), {{F.one(), {ix.e(i), ix.e(j)}}, {-r, {ix.e(m + i), ix.e(m + j)}}});
      add(1, tag("A1b", i, j), {{F.one(), {ix.e(i), ix.e(m + j)}}, {r, {ix.e(j), ix.e(m + i)}}});
    }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!plus_minus(F, P.lambda[i - 1], P.kappa[j - 1])) continue;
      const Fp r = lam(i) / kap(j);
      add(2, tag("A2a", i, j), {{F.one(), {ix.e(m + i), ix.w(j)}}, {-r, {ix.e(i), ix.w(n + j)}}});
      add(2, tag("A2b", i, j), {{F.one(), {ix.e(i), ix.w(j)}}, {-r, {ix.e(m + i), ix.w(n + j)}}});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (!plus_minus(F, P.kappa[i - 1], P.kappa[j - 1])) continue;
      const Fp r = kap(i) / kap(j);
      add(3, tag("A3a", i, j), {{F.one(), {ix.w(i), ix.w(j)}}, {-r, {ix.w(n + i), ix.w(n + j)}}});
      add(3, tag("A3b", i, j), {{F.one(), {ix.w(i), ix.w(n + j)}}, {-r, {ix.w(j), ix.w(n + i)}}});
    }
  for (int i = 1; i <= P.t - 1; ++i) add(4, tag("A4", i, i), {{F.one(), {ix.eta(i), ix.eta(i)}}});
  for (int k = 1; k <= P.t; ++k)
    for (int l = k + 1; l <= P.t; ++l) add(4, tag("A4", k, l), {{F.one(), {ix.eta(k), ix.eta(l)}}});
  for (int k = 1; k <= P.t; ++k)
    add(5, "A5(" + std::to_string(k) + ")", {{F.one(), {ix.top(), ix.eta(k)}}});
  return out;
}

std::vector<Cochain> heisenberg_cocycles(const CochainComplex& ideal, int m, int n, int t) {
  const Field& F = ideal.field();
  auto e = [&](int i) { return i - 1; };
  auto w = [&](int j) { return 2 * m + 1 + j - 1; };
  auto eta = [&](int k) { return 2 * m + 1 + 2 * n + k - 1; };
  std::vector<Cochain> out;
  auto add = [&](int a, int b) { out.push_back(wedge_form(ideal, {{F.one(), {a, b}}})); };
  for (int i = 1; i <= 2 * m; ++i)
    for (int j = i + 1; j <= 2 * m; ++j) add(e(i), e(j));
  for (int i = 1; i <= 2 * m; ++i) {
    for (int j = 1; j <= 2 * n; ++j) add(e(i), w(j));
    for (int k = 1; k <= t; ++k) add(e(i), eta(k));
  }
  for (int j = 1; j <= 2 * n; ++j)
    for (int k = 1; k <= t; ++k) add(w(j), eta(k));
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i; j <= 2 * n; ++j) add(w(i), w(j));
  for (int k = 1; k <= t; ++k)
    for (int l = k + 1; l <= t; ++l) add(eta(k), eta(l));
  for (int i = 1; i <= t - 1; ++i) add(eta(i), eta(i));
  return out;
}

SDim class_span(const CochainComplex& cx, const std::vector<Cochain>& cocycles) {
  const Field& F = cx.field();
  const WedgeBasis& W1 = cx.basis(1);
  const WedgeBasis& W2 = cx.basis(2);
  int dims[2];
  for (int parity = 0; parity < 2; ++parity) {
    const Matrix B = gf::select_cols(cx.d1(), W1.of_parity(parity));
    Matrix S = F.zeros(W2.size(), 0);
    for (const Cochain& c : cocycles) {
      // Keep the parity-homogeneous component.
      Vector part = F.zeros(W2.size());
      for (Index k : W2.of_parity(parity)) part(k) = c.coords(k);
      Matrix col(W2.size(), 1);
      col.col(0) = part;
      S = gf::hstack(S, col);
    }
    dims[parity] = static_cast<int>(gf::rank(F, gf::hstack(B, S)) - gf::rank(F, B));
  }
  return {dims[0], dims[1]};
}

HsReport hs_decomposition_check(const TwistedParams& P, int k) {
  const TwistedSuper T = make_twisted_super(P);
  const CochainComplex whole(T.algebra);
  const CochainComplex ideal(T.embedding.ideal);
  const Matrix derivation = T.embedding.restricted_ad(T.algebra, T.algebra.basis(2 * P.m + 1));
  return hs_decomposition(whole, ideal, derivation, k);
}

PointReport analyze(const TwistedParams& P, std::uint64_t seed) {
  PointReport r;
  r.params = P;
  const TwistedSuper T = make_twisted_super(P);
  const RestrictedComplex rx(T.algebra, T.pmap);
  const CochainComplex& cx = rx.ordinary();
  const Field& F = rx.field();
  const bool empirical = !P.in_theorem_range();

  auto attach = [&](CohomologyReport& rep, SDim formula) {
    rep.formula = formula;
    rep.match = rep.dims == formula;
    rep.empirical_only = empirical;
  };
  r.h1 = cohomology(cx, 1);
  attach(r.h1, theorem_h1(P));
  r.h2 = cohomology(cx, 2);
  attach(r.h2, theorem_h2(P));
  r.h1_star = restricted_cohomology(rx, 1, 100, seed);
  attach(r.h1_star, SDim{0, P.t});
  r.h2_star = restricted_cohomology(rx, 2, 100, seed);
  attach(r.h2_star, theorem_h2_star(P));
  if (r.h2_star.dims != *r.h2_star.formula && r.h2.dims == *r.h2_star.formula)
    r.h2_star.note = "formula matches the ordinary H2 instead";

  const CochainComplex icx(T.embedding.ideal);
  r.ideal_h1 = cohomology(icx, 1);
  attach(r.ideal_h1, heisenberg_h1(P.m, P.n, P.t));
  r.ideal_h2 = cohomology(icx, 2);
  attach(r.ideal_h2, heisenberg_h2(P.m, P.n, P.t));

  const Matrix derivation = T.embedding.restricted_ad(T.algebra, T.algebra.basis(2 * P.m + 1));
  r.hs1 = hs_decomposition(cx, icx, derivation, 1);
  r.hs2 = hs_decomposition(cx, icx, derivation, 2);

  r.six_term = six_term_check(rx, seed);
  const int top = 2 * P.m + 1;
  r.six_term.nodes.push_back({"H2* = H2 - A5 + (2m+1)", r.h2_star.dims,
                              SDim{r.h2.dims.even + 2 * P.m + 1, r.h2.dims.odd - P.t},
                              r.h2_star.dims == SDim{r.h2.dims.even + 2 * P.m + 1, r.h2.dims.odd - P.t}});

  const DMapReport D = map_D(rx, r.h1);
  const Matrix top_unit = [&] {
    Matrix u = F.zeros(T.algebra.even_dim(), 1);
    u(top, 0) = F.one();
    return u;
  }();
  r.im_D_is_top = D.rank == 1 && gf::rank(F, gf::hstack(D.image_basis, top_unit)) == 1;
  r.six_term.nodes.push_back({"im D = F e-bar^{2m+2}", {D.rank, 0}, {1, 0}, r.im_D_is_top});

  std::vector<Cochain> named;
  for (const NamedCocycle& c : theorem_cocycles(cx, P)) {
    if (!gf::is_zero(cx.d2(c.phi).coords)) r.named_are_cocycles = false;
    if (c.family <= 4) {
      named.push_back(c.phi);
      if (!gf::is_zero(Matrix(rx.ind2(c.phi)))) r.named_in_ker_H = false;
      const CohomologyReport single{"", {}, Matrix(c.phi.coords), {0}};
      if (!gf::is_zero(Matrix(map_H(rx, single, seed).tables.front()))) r.named_in_ker_H = false;
    }
  }
  r.named_span = class_span(cx, named);
  r.six_term.nodes.push_back({"ker H = span A1..A4", r.six_term.ker_H, r.named_span,
                              r.six_term.ker_H == r.named_span});
  r.six_term.ok = true;
  for (const SixTermNode& node : r.six_term.nodes) r.six_term.ok = r.six_term.ok && node.ok;

  // (0, e-bar^i) for i <= 2m+1 are independent modulo im d1_*, while e-bar^{2m+2} lies in it.
  {
    const Matrix B = gf::column_basis(F, rx.d1_star_matrix());
    Matrix frob = F.zeros(rx.c2_size(), top);
    for (int i = 0; i < top; ++i) frob.col(i) = rx.frobenius_direction(i);
    const bool independent = gf::rank(F, gf::hstack(B, frob)) == B.cols() + top;
    Matrix last(rx.c2_size(), 1);
    last.col(0) = rx.frobenius_direction(top);
    const bool exact = gf::rank(F, gf::hstack(B, last)) == B.cols();
    const bool closed = gf::is_zero(Matrix(rx.d2_star_matrix() * frob));
    r.frobenius_classes = independent && exact && closed;
  }

  r.d_squared_zero = gf::is_zero(Matrix(cx.d2() * cx.d1()));
  r.restricted_d_squared_zero = gf::is_zero(Matrix(rx.d2_star_matrix() * rx.d1_star_matrix()));
  return r;
}

}  // namespace resco
