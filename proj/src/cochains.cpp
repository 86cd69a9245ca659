#include "resco/cochains.hpp"

#include <algorithm>

namespace resco {

namespace {

int swap_sign(int pa, int pb) { return (pa * pb) % 2 == 0 ? -1 : 1; }

std::vector<int> parities_of(const WedgeBasis& W) { return W.parities(); }

struct GradedPieces {
  Matrix cycles;      // chart x z, full chart coordinates
  Matrix boundaries;  // chart x b, a basis of the image
};

GradedPieces pieces(const Field& F, const Matrix& next, const Matrix& prev, const std::vector<int>& chart_parity,
                    const std::vector<int>& prev_parity, int parity) {
  const auto chart = static_cast<Index>(chart_parity.size());
  std::vector<Index> cols;
  for (Index i = 0; i < chart; ++i)
    if (chart_parity[i] == parity) cols.push_back(i);
  const Matrix sub = gf::nullspace(F, gf::select_cols(next, cols));
  Matrix cycles = F.zeros(chart, sub.cols());
  for (std::size_t r = 0; r < cols.size(); ++r) cycles.row(cols[r]) = sub.row(static_cast<Index>(r));

  std::vector<Index> pcols;
  for (std::size_t i = 0; i < prev_parity.size(); ++i)
    if (prev_parity[i] == parity) pcols.push_back(static_cast<Index>(i));
  Matrix image = gf::select_cols(prev, pcols);
  if (image.rows() != chart) image = F.zeros(chart, 0);
  return {std::move(cycles), gf::column_basis(F, image)};
}

int vector_parity(const Vector& v, const std::vector<int>& chart_parity) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return chart_parity[i];
  return 0;
}

}  // namespace

std::string to_string(const SDim& s) { return "(" + std::to_string(s.even) + ", " + std::to_string(s.odd) + ")"; }

WedgeBasis::WedgeBasis(const SuperAlgebra& A, int q) : q_(q) {
  if (q < 1 || q > 3) throw Error(Errc::UnsupportedDegree, "wedge degree " + std::to_string(q));
  const int d = A.dim();
  for (int i = 0; i < d; ++i) basis_parity_.push_back(A.parity(i));
  auto next_start = [&](int prev) { return basis_parity_[prev] == 0 ? prev + 1 : prev; };

  std::vector<int> cur;
  auto push = [&] {
    int par = 0;
    for (int i : cur) par += basis_parity_[i];
    lookup_.emplace(cur, static_cast<Index>(tuples_.size()));
    tuples_.push_back(cur);
    parities_.push_back(par % 2);
  };
  for (int a = 0; a < d; ++a) {
    cur = {a};
    if (q == 1) {
      push();
      continue;
    }
    for (int b = next_start(a); b < d; ++b) {
      cur = {a, b};
      if (q == 2) {
        push();
        continue;
      }
      for (int c = next_start(b); c < d; ++c) {
        cur = {a, b, c};
        push();
      }
    }
  }
}

std::vector<Index> WedgeBasis::of_parity(int parity) const {
  std::vector<Index> out;
  for (Index k = 0; k < size(); ++k)
    if (parities_[k] == parity) out.push_back(k);
  return out;
}

std::optional<std::pair<Index, int>> WedgeBasis::locate(std::span<const int> indices) const {
  std::vector<int> t(indices.begin(), indices.end());
  int sign = 1;
  for (std::size_t pass = 0; pass < t.size(); ++pass)
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      if (t[i] > t[i + 1]) {
        sign *= swap_sign(basis_parity_[t[i]], basis_parity_[t[i + 1]]);
        std::swap(t[i], t[i + 1]);
      }
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1] && basis_parity_[t[i]] == 0) return std::nullopt;
  const auto it = lookup_.find(t);
  if (it == lookup_.end()) return std::nullopt;
  return std::make_pair(it->second, sign);
}

std::optional<Index> WedgeBasis::find(const std::vector<int>& canonical) const {
  const auto it = lookup_.find(canonical);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

WedgeBasis wedge_basis(const SuperAlgebra& A, int q) { return WedgeBasis(A, q); }

CochainComplex::CochainComplex(SuperAlgebra A) : A_(std::move(A)) {
  for (int q = 1; q <= 3; ++q) bases_.emplace_back(A_, q);
  const Field& F = A_.field();
  const WedgeBasis& W1 = bases_[0];
  const WedgeBasis& W2 = bases_[1];
  const WedgeBasis& W3 = bases_[2];

  d1_ = F.zeros(W2.size(), W1.size());
  for (Index r = 0; r < W2.size(); ++r) {
    const auto& t = W2.tuple(r);
    for (const auto& [k, c] : A_.basis_bracket(t[0], t[1])) d1_(r, k) += c;
  }

  d2_ = F.zeros(W3.size(), W2.size());
  auto add = [&](Index row, int k, int l, Fp coeff) {
    const int pair[2] = {k, l};
    if (auto loc = W2.locate(pair)) d2_(row, loc->first) += coeff * Fp(loc->second);
  };
  for (Index r = 0; r < W3.size(); ++r) {
    const auto& t = W3.tuple(r);
    const int g = t[0], h = t[1], f = t[2];
    const int pg = A_.parity(g), ph = A_.parity(h), pf = A_.parity(f);
    const Fp s2 = -Fp((pf * ph) % 2 == 0 ? 1 : -1);
    const Fp s3 = Fp((pg * (ph + pf)) % 2 == 0 ? 1 : -1);
    for (const auto& [k, c] : A_.basis_bracket(g, h)) add(r, k, f, c);
    for (const auto& [k, c] : A_.basis_bracket(g, f)) add(r, k, h, s2 * c);
    for (const auto& [k, c] : A_.basis_bracket(h, f)) add(r, k, g, s3 * c);
  }
  d1_ = F.typed(d1_);
  d2_ = F.typed(d2_);
}

const WedgeBasis& CochainComplex::basis(int q) const {
  if (q < 1 || q > 3) throw Error(Errc::UnsupportedDegree, "wedge degree " + std::to_string(q));
  return bases_[q - 1];
}

Cochain CochainComplex::zero(int q) const { return {q, field().zeros(basis(q).size())}; }

Cochain CochainComplex::d1(const Cochain& psi) const {
  if (psi.degree != 1) throw Error(Errc::ArityMismatch, "d1 needs a 1-cochain");
  return {2, d1_ * psi.coords};
}

Cochain CochainComplex::d2(const Cochain& phi) const {
  if (phi.degree != 2) throw Error(Errc::ArityMismatch, "d2 needs a 2-cochain");
  return {3, d2_ * phi.coords};
}

Cochain CochainComplex::dual(std::vector<int> indices) const {
  const int q = static_cast<int>(indices.size());
  Cochain c = zero(q);
  const auto loc = basis(q).locate(indices);
  if (!loc) throw Error(Errc::IndexOutOfRange, "wedge vanishes or is out of range");
  c.coords(loc->first) = field()(loc->second);
  return c;
}

Fp CochainComplex::evaluate_basis(const Cochain& c, std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != c.degree)
    throw Error(Errc::ArityMismatch, "cochain of degree " + std::to_string(c.degree) + " given " +
                                         std::to_string(indices.size()) + " arguments");
  const auto loc = basis(c.degree).locate(indices);
  if (!loc) return field().zero();
  return c.coords(loc->first) * Fp(loc->second);
}

Fp CochainComplex::evaluate(const Cochain& c, std::span<const Vector> args) const {
  if (static_cast<int>(args.size()) != c.degree)
    throw Error(Errc::ArityMismatch, "cochain of degree " + std::to_string(c.degree) + " given " +
                                         std::to_string(args.size()) + " arguments");
  Fp total = field().zero();
  std::vector<int> idx(args.size());
  auto rec = [&](auto&& self, std::size_t pos, Fp weight) -> void {
    if (pos == args.size()) {
      total += weight * evaluate_basis(c, idx);
      return;
    }
    const Vector& v = args[pos];
    for (Index i = 0; i < v.size(); ++i) {
      if (v(i).is_zero()) continue;
      idx[pos] = static_cast<int>(i);
      self(self, pos + 1, weight * v(i));
    }
  };
  rec(rec, 0, field().one());
  return total;
}

Fp CochainComplex::evaluate2(const Cochain& phi, const Vector& x, const Vector& y) const {
  const Vector args[2] = {x, y};
  return evaluate(phi, args);
}

Matrix CochainComplex::action_matrix(int q, const Matrix& derivation) const {
  const WedgeBasis& W = basis(q);
  Matrix M = field().zeros(W.size(), W.size());
  for (Index r = 0; r < W.size(); ++r) {
    const auto& t = W.tuple(r);
    for (int pos = 0; pos < q; ++pos)
      for (Index k = 0; k < derivation.rows(); ++k) {
        const Fp coeff = derivation(k, t[pos]);
        if (coeff.is_zero()) continue;
        std::vector<int> moved = t;
        moved[pos] = static_cast<int>(k);
        if (auto loc = W.locate(moved)) M(r, loc->first) -= coeff * Fp(loc->second);
      }
  }
  return field().typed(M);
}

Cochain CochainComplex::act(const Vector& x, const Cochain& c) const {
  return {c.degree, action_matrix(c.degree, A_.ad_matrix(x)) * c.coords};
}

CohomologyReport graded_quotient(const Field& F, const std::string& space, const Matrix& next, const Matrix& prev,
                                 const std::vector<int>& chart_parity, const std::vector<int>& prev_parity,
                                 const Matrix& prefer) {
  CohomologyReport report;
  report.space = space;
  const auto chart = static_cast<Index>(chart_parity.size());
  report.representatives = F.zeros(chart, 0);
  int dims[2] = {0, 0};
  for (int parity = 0; parity < 2; ++parity) {
    const GradedPieces gp = pieces(F, next, prev, chart_parity, prev_parity, parity);
    dims[parity] = static_cast<int>(gp.cycles.cols() - gp.boundaries.cols());

    std::vector<Index> preferred;
    for (Index j = 0; j < prefer.cols(); ++j)
      if (vector_parity(prefer.col(j), chart_parity) == parity) preferred.push_back(j);
    const Matrix candidates = gf::hstack(gf::select_cols(prefer, preferred), gp.cycles);
    const auto picks = gf::extend_basis(F, gp.boundaries, candidates);
    const Matrix chosen = gf::select_cols(candidates, picks);
    report.representatives = gf::hstack(report.representatives, chosen);
    report.representative_parity.insert(report.representative_parity.end(), picks.size(), parity);
  }
  report.dims = {dims[0], dims[1]};
  if (report.representatives.rows() != chart) report.representatives = F.zeros(chart, 0);
  return report;
}

CohomologyReport cohomology(const CochainComplex& cx, int q) {
  const Field& F = cx.field();
  if (q == 1)
    return graded_quotient(F, "H1", cx.d1(), F.zeros(cx.basis(1).size(), 0), parities_of(cx.basis(1)), {});
  if (q == 2)
    return graded_quotient(F, "H2", cx.d2(), cx.d1(), parities_of(cx.basis(2)), parities_of(cx.basis(1)));
  throw Error(Errc::UnsupportedDegree, "cohomology in degree " + std::to_string(q));
}

HsReport hs_decomposition(const CochainComplex& whole, const CochainComplex& ideal, const Matrix& derivation,
                          int k) {
  if (k != 1 && k != 2) throw Error(Errc::UnsupportedDegree, "decomposition check in degree " + std::to_string(k));
  const Field& F = ideal.field();
  HsReport out;
  out.k = k;
  out.whole = cohomology(whole, k).dims;

  auto graded = [&](int q, int parity) {
    if (q == 1)
      return pieces(F, ideal.d1(), F.zeros(ideal.basis(1).size(), 0), parities_of(ideal.basis(1)), {}, parity);
    return pieces(F, ideal.d2(), ideal.d1(), parities_of(ideal.basis(2)), parities_of(ideal.basis(1)), parity);
  };
  // dim of x.H^q as a subspace of H^q, and dim H^q, for one parity.
  auto moved = [&](int q, int parity) {
    const GradedPieces gp = graded(q, parity);
    const Matrix image = ideal.action_matrix(q, derivation) * gp.cycles;
    const Index base = gp.boundaries.cols();
    const Index joint = gf::rank(F, gf::hstack(gp.boundaries, image));
    const auto h = static_cast<int>(gp.cycles.cols() - base);
    return std::make_pair(static_cast<int>(joint - base), h);
  };

  int inv[2], coinv[2];
  for (int parity = 0; parity < 2; ++parity) {
    // x acts on H^k; its kernel is the invariant part.
    const auto [image_k, h_k] = moved(k, parity);
    inv[parity] = h_k - image_k;
    if (k == 1) {
      coinv[parity] = parity == 0 ? 1 : 0;
    } else {
      const auto [image_prev, h_prev] = moved(1, parity);
      coinv[parity] = h_prev - image_prev;
    }
  }
  out.invariant = {inv[0], inv[1]};
  out.coinvariant = {coinv[0], coinv[1]};
  out.ok = out.whole == out.invariant + out.coinvariant;
  return out;
}

}  // namespace resco
