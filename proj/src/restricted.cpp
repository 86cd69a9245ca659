#include "resco/restricted.hpp"

#include <numeric>
#include <random>

namespace resco {

namespace {

Vector random_even(const SuperAlgebra& A, std::mt19937_64& rng) {
  Vector x = A.zero();
  for (int i = 0; i < A.even_dim(); ++i) x(i) = A.field().random(rng);
  return x;
}

Vector repeated_bracket(const SuperAlgebra& A, Vector v, const Vector& h, int times) {
  for (int k = 0; k < times; ++k) v = A.bracket(v, h);
  return v;
}

// Adds coeff * phi(b_a ^ v) to a row of a matrix whose columns are W2 coordinates.
void add_pairing(const WedgeBasis& W2, Matrix& M, Index row, int a, const Vector& v, Fp coeff, bool v_first) {
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k).is_zero()) continue;
    const int pair[2] = {v_first ? static_cast<int>(k) : a, v_first ? a : static_cast<int>(k)};
    if (auto loc = W2.locate(pair)) M(row, loc->first) += coeff * v(k) * Fp(loc->second);
  }
}

std::vector<int> ascending(int n) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

Fp FrobeniusMap::operator()(const Vector& x) const {
  Fp out = values.size() > 0 ? Fp(0, values(0).modulus()) : Fp(0);
  for (Index i = 0; i < values.size(); ++i) {
    if (x(i).is_zero()) continue;
    const auto p = static_cast<std::uint64_t>(x(i).modulus());
    out += x(i).pow(p) * values(i);
  }
  return out;
}

RestrictedComplex::RestrictedComplex(SuperAlgebra A, PMapSpec P) : cx_(std::move(A)), P_(std::move(P)) {
  const SuperAlgebra& G = algebra();
  const Field& F = field();
  const int d = G.dim(), d0 = G.even_dim();
  const auto p = static_cast<int>(F.p());
  if (static_cast<int>(P_.basis_values.size()) != d0)
    throw Error(Errc::InvalidStructure, "p-map needs one value per even basis element");
  const WedgeBasis& W1 = cx_.basis(1);
  const WedgeBasis& W2 = cx_.basis(2);
  const WedgeBasis& W3 = cx_.basis(3);

  Matrix bottom = F.zeros(d0, W1.size());
  for (int i = 0; i < d0; ++i) bottom.row(i) = P_.basis_values[i].transpose();
  d1s_ = gf::vstack(cx_.d1(), bottom);

  ind2_ = F.zeros(static_cast<Index>(d) * d0, W2.size());
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d0; ++i) {
      const Index row = static_cast<Index>(a) * d0 + i;
      add_pairing(W2, ind2_, row, a, P_.basis_values[i], F.one(), false);
      const Vector nested = repeated_bracket(G, G.basis(a), G.basis(i), p - 1);
      add_pairing(W2, ind2_, row, i, nested, -F.one(), true);
    }
  ind2_ = F.typed(ind2_);

  d2s_ = F.zeros(W3.size() + ind2_.rows(), c2_size());
  d2s_.topLeftCorner(W3.size(), W2.size()) = cx_.d2();
  d2s_.bottomLeftCorner(ind2_.rows(), W2.size()) = ind2_;
}

std::vector<int> RestrictedComplex::c2_parity() const {
  std::vector<int> out = cx_.basis(2).parities();
  out.resize(static_cast<std::size_t>(c2_size()), 0);
  return out;
}

Vector RestrictedComplex::chart(const RestrictedCochain2& rc) const {
  Vector v(c2_size());
  v << rc.phi.coords, rc.omega;
  return v;
}

RestrictedCochain2 RestrictedComplex::from_chart(const Vector& v) const {
  const Index w2 = cx_.basis(2).size();
  return {Cochain{2, v.head(w2)}, v.tail(algebra().even_dim())};
}

Vector RestrictedComplex::frobenius_direction(int i) const {
  return field().unit(c2_size(), cx_.basis(2).size() + i);
}

Fp RestrictedComplex::compatibility_term(const Cochain& phi, const Vector& g, const Vector& h) const {
  const SuperAlgebra& G = algebra();
  const Field& F = field();
  const auto p = static_cast<int>(F.p());
  Fp total = F.zero();
  // Sequences g_1 = g, g_2 = h, g_3..g_p in {g, h}; the nested bracket runs over g_1..g_{p-1}.
  auto rec = [&](auto&& self, const Vector& nested, int length, int count_g) -> void {
    if (length == p - 1) {
      total += F(count_g + 1).inverse() * cx_.evaluate2(phi, nested, g);
      total += F(count_g).inverse() * cx_.evaluate2(phi, nested, h);
      return;
    }
    self(self, G.bracket(nested, g), length + 1, count_g + 1);
    self(self, G.bracket(nested, h), length + 1, count_g);
  };
  rec(rec, G.bracket(g, h), 2, 1);
  return total;
}

Fp RestrictedComplex::compatible_evaluate(const RestrictedCochain2& rc, const Vector& x,
                                          std::span<const int> order) const {
  const SuperAlgebra& G = algebra();
  if (!G.is_even(x)) throw Error(Errc::OddArgument, "compatible maps live on the even part");
  const auto p = static_cast<std::uint64_t>(field().p());
  std::vector<int> fallback;
  if (order.empty()) {
    fallback = ascending(G.even_dim());
    order = fallback;
  }
  Vector sum = G.zero();
  Fp value = field().zero();
  bool started = false;
  for (int k : order) {
    const Fp a = x(k);
    if (a.is_zero()) continue;
    const Vector h = a * G.basis(k);
    Fp next = value + a.pow(p) * rc.omega(k);
    if (started) next += compatibility_term(rc.phi, sum, h);
    value = next;
    sum += h;
    started = true;
  }
  return value;
}

Fp RestrictedComplex::tilde(const Cochain& phi, const Vector& x) const {
  return compatible_evaluate({phi, field().zeros(algebra().even_dim())}, x);
}

FrobeniusMap RestrictedComplex::ind1(const Cochain& psi) const {
  const int d0 = algebra().even_dim();
  Vector values = field().zeros(d0);
  for (int i = 0; i < d0; ++i) values(i) = psi.coords.dot(P_.basis_values[i]);
  return {values};
}

Matrix RestrictedComplex::ind2(const Cochain& phi) const {
  const int d = algebra().dim(), d0 = algebra().even_dim();
  const Vector flat = ind2_ * phi.coords;
  Matrix table = field().zeros(d, d0);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d0; ++i) table(a, i) = flat(static_cast<Index>(a) * d0 + i);
  return table;
}

Fp RestrictedComplex::ind2_direct(const Cochain& phi, const Vector& g, const Vector& h) const {
  const auto p = static_cast<int>(field().p());
  const Vector nested = repeated_bracket(algebra(), g, h, p - 1);
  return cx_.evaluate2(phi, g, p_power(h)) - cx_.evaluate2(phi, nested, h);
}

RestrictedCochain2 RestrictedComplex::d1_star(const Cochain& psi) const {
  return {cx_.d1(psi), ind1(psi).values};
}

RestrictedCochain3 RestrictedComplex::d2_star(const RestrictedCochain2& rc) const {
  return {cx_.d2(rc.phi), ind2(rc.phi)};
}

SDim h1_star_annihilator(const RestrictedComplex& rx, int samples, std::uint64_t seed) {
  const SuperAlgebra& G = rx.algebra();
  const Field& F = rx.field();
  const int d = G.dim();
  std::vector<Vector> span;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) span.push_back(G.bracket(G.basis(i), G.basis(j)));
  for (int i = 0; i < G.even_dim(); ++i) span.push_back(rx.p_power(G.basis(i)));
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) span.push_back(rx.p_power(random_even(G, rng)));

  Matrix S = F.zeros(d, static_cast<Index>(span.size()));
  for (std::size_t j = 0; j < span.size(); ++j) S.col(static_cast<Index>(j)) = span[j];
  int dims[2];
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Index> rows;
    for (int i = 0; i < d; ++i)
      if (G.parity(i) == parity) rows.push_back(i);
    dims[parity] = static_cast<int>(rows.size()) - static_cast<int>(gf::rank(F, gf::select_rows(S, rows)));
  }
  return {dims[0], dims[1]};
}

CohomologyReport restricted_cohomology(const RestrictedComplex& rx, int q, int samples, std::uint64_t seed) {
  const Field& F = rx.field();
  const CochainComplex& cx = rx.ordinary();
  if (q == 1) {
    CohomologyReport r = graded_quotient(F, "H1*", rx.d1_star_matrix(), F.zeros(cx.basis(1).size(), 0),
                                         cx.basis(1).parities(), {});
    r.cross_check = h1_star_annihilator(rx, samples, seed);
    return r;
  }
  if (q == 2) {
    const int d0 = rx.algebra().even_dim();
    Matrix frob = F.zeros(rx.c2_size(), d0);
    for (int i = 0; i < d0; ++i) frob.col(i) = rx.frobenius_direction(i);
    return graded_quotient(F, "H2*", rx.d2_star_matrix(), rx.d1_star_matrix(), rx.c2_parity(),
                           cx.basis(1).parities(), frob);
  }
  throw Error(Errc::UnsupportedDegree, "restricted cohomology in degree " + std::to_string(q));
}

DMapReport map_D(const RestrictedComplex& rx, const CohomologyReport& h1) {
  const Field& F = rx.field();
  const int d0 = rx.algebra().even_dim();
  DMapReport out;
  Matrix images = F.zeros(d0, h1.representatives.cols());
  int count[2] = {0, 0};
  std::vector<Index> by_parity[2];
  for (Index j = 0; j < h1.representatives.cols(); ++j) {
    const FrobeniusMap f = rx.ind1(Cochain{1, h1.representatives.col(j)});
    images.col(j) = f.values;
    out.images.push_back(f);
    const int par = h1.representative_parity[j];
    ++count[par];
    by_parity[par].push_back(j);
  }
  out.image_basis = gf::column_basis(F, images);
  out.rank = static_cast<int>(out.image_basis.cols());
  int ker[2];
  for (int par = 0; par < 2; ++par)
    ker[par] = count[par] - static_cast<int>(gf::rank(F, gf::select_cols(images, by_parity[par])));
  out.kernel = {ker[0], ker[1]};
  return out;
}

Fp h_value(const RestrictedComplex& rx, const Cochain& phi, const Vector& g, const Vector& h) {
  const SuperAlgebra& G = rx.algebra();
  const auto p = static_cast<int>(rx.field().p());
  Vector moved = h;
  for (int k = 0; k < p - 1; ++k) moved = G.bracket(g, moved);
  const CochainComplex& cx = rx.ordinary();
  return cx.evaluate2(phi, g, moved) - cx.evaluate2(phi, rx.p_power(g), h);
}

HMapReport map_H(const RestrictedComplex& rx, const CohomologyReport& h2, std::uint64_t seed) {
  const SuperAlgebra& G = rx.algebra();
  const Field& F = rx.field();
  const CochainComplex& cx = rx.ordinary();
  const WedgeBasis& W2 = cx.basis(2);
  const int d = G.dim(), d0 = G.even_dim();
  const auto p = static_cast<int>(F.p());

  // Row (i, a): H_phi(b_i) . b_a as a linear form in phi.
  Matrix H = F.zeros(static_cast<Index>(d0) * d, W2.size());
  for (int i = 0; i < d0; ++i) {
    const Vector gi = G.basis(i);
    for (int a = 0; a < d; ++a) {
      const Index row = static_cast<Index>(i) * d + a;
      Vector moved = G.basis(a);
      for (int k = 0; k < p - 1; ++k) moved = G.bracket(gi, moved);
      add_pairing(W2, H, row, i, moved, F.one(), false);
      add_pairing(W2, H, row, a, rx.pmap().basis_values[i], -F.one(), true);
    }
  }
  H = F.typed(H);

  HMapReport out;
  const Matrix values = H * h2.representatives;
  std::mt19937_64 rng(seed);
  std::vector<Index> by_parity[2];
  for (Index j = 0; j < h2.representatives.cols(); ++j) {
    Matrix table = F.zeros(d0, d);
    for (int i = 0; i < d0; ++i)
      for (int a = 0; a < d; ++a) table(i, a) = values(static_cast<Index>(i) * d + a, j);
    out.tables.push_back(table);
    by_parity[h2.representative_parity[j]].push_back(j);

    const Cochain phi{2, h2.representatives.col(j)};
    const Vector g = random_even(G, rng);
    for (int a = 0; a < d; ++a) {
      Fp extended = F.zero();
      for (int i = 0; i < d0; ++i) extended += g(i).pow(static_cast<std::uint64_t>(p)) * table(i, a);
      if (!(extended == h_value(rx, phi, g, G.basis(a)))) out.semilinear = false;
    }
  }
  int ker[2];
  for (int par = 0; par < 2; ++par)
    ker[par] = static_cast<int>(by_parity[par].size()) -
               static_cast<int>(gf::rank(F, gf::select_cols(values, by_parity[par])));
  out.kernel = {ker[0], ker[1]};
  out.kernel_combinations = gf::nullspace(F, values);
  return out;
}

SixTermReport six_term_check(const RestrictedComplex& rx, std::uint64_t seed) {
  SixTermReport r;
  const CohomologyReport h1 = cohomology(rx.ordinary(), 1);
  const CohomologyReport h2 = cohomology(rx.ordinary(), 2);
  const CohomologyReport h1s = restricted_cohomology(rx, 1, 100, seed);
  const CohomologyReport h2s = restricted_cohomology(rx, 2, 100, seed);
  const DMapReport D = map_D(rx, h1);
  const HMapReport H = map_H(rx, h2, seed);
  const int d0 = rx.algebra().even_dim();

  r.h1 = h1.dims;
  r.h2 = h2.dims;
  r.h1_star = h1s.dims;
  r.h2_star = h2s.dims;
  r.ker_D = D.kernel;
  r.ker_H = H.kernel;
  r.rank_D = D.rank;

  auto node = [&](std::string name, SDim lhs, SDim rhs) {
    r.nodes.push_back({std::move(name), lhs, rhs, lhs == rhs});
    r.ok = r.ok && lhs == rhs;
  };
  node("H1* = ker D", h1s.dims, D.kernel);
  node("H1* = annihilator of [g,g] + <g0^[p]>", h1s.dims, *h1s.cross_check);

  Matrix frob = rx.field().zeros(rx.c2_size(), d0);
  for (int i = 0; i < d0; ++i) frob.col(i) = rx.frobenius_direction(i);
  node("Hom_Fr = even part", {static_cast<int>(gf::rank(rx.field(), frob)), 0}, {d0, 0});
  node("H2* = Hom_Fr / im D + ker H", h2s.dims, SDim{d0 - D.rank, 0} + H.kernel);
  r.nodes.push_back({"H semilinear in g", {}, {}, H.semilinear});
  r.ok = r.ok && H.semilinear;
  return r;
}

}  // namespace resco
