#include "resco/gf.hpp"

#include <ostream>
#include <string>

namespace resco {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::BadPrime: return "BadPrime";
    case Errc::OwnerMismatch: return "OwnerMismatch";
    case Errc::TooFewArguments: return "TooFewArguments";
    case Errc::OddArgument: return "OddArgument";
    case Errc::InvalidStructure: return "InvalidStructure";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::NotRestrictable: return "NotRestrictable";
    case Errc::SupportOutsideEvenTwistedBasis: return "SupportOutsideEvenTwistedBasis";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::OddCocycle: return "OddCocycle";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::ConditionNotMet: return "ConditionNotMet";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace gf {

namespace {

Residue reduce(Residue v, Residue p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// Common modulus of two operands, or 0 when both are untyped literals.
Residue common_modulus(const Fp& a, const Fp& b) {
  if (a.typed() && b.typed() && a.modulus() != b.modulus())
    throw Error(Errc::ModulusMismatch,
                std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  return a.typed() ? a.modulus() : b.modulus();
}

}  // namespace

Fp::Fp(Residue value, Residue modulus) : modulus_(modulus) {
  if (modulus <= 1) throw Error(Errc::BadPrime, "modulus " + std::to_string(modulus));
  value_ = reduce(value, modulus);
}

Fp Fp::pow(std::uint64_t exponent) const {
  if (!typed()) {
    Residue r = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) r *= value_;
    Fp out;
    out.value_ = r;
    return out;
  }
  Residue base = value_, result = 1;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base % modulus_;
    base = base * base % modulus_;
    exponent >>= 1U;
  }
  return Fp(result, modulus_);
}

Fp Fp::inverse() const {
  if (!typed()) throw Error(Errc::ModulusMismatch, "inverse of an untyped literal");
  if (value_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return pow(static_cast<std::uint64_t>(modulus_ - 2));
}

Fp Fp::operator-() const {
  Fp out = *this;
  out.value_ = typed() ? reduce(-value_, modulus_) : -value_;
  return out;
}

Fp& Fp::operator+=(const Fp& rhs) {
  const Residue p = common_modulus(*this, rhs);
  value_ = p ? reduce(value_ + rhs.value_, p) : value_ + rhs.value_;
  modulus_ = p;
  return *this;
}

Fp& Fp::operator-=(const Fp& rhs) {
  const Residue p = common_modulus(*this, rhs);
  value_ = p ? reduce(value_ - rhs.value_, p) : value_ - rhs.value_;
  modulus_ = p;
  return *this;
}

Fp& Fp::operator*=(const Fp& rhs) {
  const Residue p = common_modulus(*this, rhs);
  value_ = p ? reduce(reduce(value_, p) * reduce(rhs.value_, p), p) : value_ * rhs.value_;
  modulus_ = p;
  return *this;
}

Fp& Fp::operator/=(const Fp& rhs) {
  const Residue p = common_modulus(*this, rhs);
  if (p == 0) throw Error(Errc::ModulusMismatch, "division of untyped literals");
  return *this *= Fp(rhs.value_, p).inverse();
}

bool operator==(const Fp& a, const Fp& b) {
  const Residue p = common_modulus(a, b);
  return p ? reduce(a.value_, p) == reduce(b.value_, p) : a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.residue(); }

bool is_prime(Residue n) noexcept {
  if (n < 2) return false;
  for (Residue d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(Residue p) : p_(p) {
  if (!is_prime(p) || p == 2)
    throw Error(Errc::BadPrime, "modulus must be an odd prime, got " + std::to_string(p));
}

Matrix Field::identity(Index n) const {
  Matrix m = zeros(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = one();
  return m;
}

Vector Field::unit(Index n, Index i) const {
  Vector v = zeros(n);
  v(i) = one();
  return v;
}

Matrix Field::typed(const Matrix& m) const {
  Matrix out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      const Fp& x = m(i, j);
      if (x.typed() && x.modulus() != p_)
        throw Error(Errc::ModulusMismatch,
                    "entry mod " + std::to_string(x.modulus()) + " in F_" + std::to_string(p_));
      out(i, j) = Fp(x.residue(), p_);
    }
  return out;
}

namespace {

// Row-major residue buffer; elimination runs on plain integers.
struct Dense {
  Index rows, cols;
  Residue p;
  std::vector<Residue> a;

  Dense(const Field& F, const Matrix& m) : rows(m.rows()), cols(m.cols()), p(F.p()), a(rows * cols) {
    const Matrix t = F.typed(m);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) a[i * cols + j] = t(i, j).residue();
  }
  Residue& at(Index i, Index j) { return a[i * cols + j]; }

  Matrix to_matrix() const {
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = Fp(a[i * cols + j], p);
    return m;
  }
};

Residue inverse_mod(Residue x, Residue p) { return Fp(x, p).inverse().residue(); }

std::vector<Index> eliminate(Dense& d) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < d.cols && r < d.rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < d.rows; ++i)
      if (d.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (Index j = 0; j < d.cols; ++j) std::swap(d.at(r, j), d.at(pivot, j));
    const Residue inv = inverse_mod(d.at(r, c), d.p);
    for (Index j = c; j < d.cols; ++j) d.at(r, j) = d.at(r, j) * inv % d.p;
    for (Index i = 0; i < d.rows; ++i) {
      if (i == r) continue;
      const Residue f = d.at(i, c);
      if (f == 0) continue;
      for (Index j = c; j < d.cols; ++j) {
        Residue v = (d.at(i, j) - f * d.at(r, j)) % d.p;
        d.at(i, j) = v < 0 ? v + d.p : v;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rref rref(const Field& F, const Matrix& m) {
  Dense d(F, m);
  Rref out;
  out.pivots = eliminate(d);
  out.rank = static_cast<Index>(out.pivots.size());
  out.reduced = d.to_matrix();
  return out;
}

Index rank(const Field& F, const Matrix& m) {
  Dense d(F, m);
  return static_cast<Index>(eliminate(d).size());
}

Matrix nullspace(const Field& F, const Matrix& m) {
  Dense d(F, m);
  const auto pivots = eliminate(d);
  std::vector<bool> is_pivot(d.cols, false);
  for (Index c : pivots) is_pivot[c] = true;
  Matrix out = F.zeros(d.cols, d.cols - static_cast<Index>(pivots.size()));
  Index k = 0;
  for (Index f = 0; f < d.cols; ++f) {
    if (is_pivot[f]) continue;
    out(f, k) = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = F(-d.at(r, f));
    ++k;
  }
  return out;
}

std::optional<Vector> solve(const Field& F, const Matrix& a, const Vector& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  aug << a, b;
  Dense d(F, aug);
  const auto pivots = eliminate(d);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x = F.zeros(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = F(d.at(r, a.cols()));
  return x;
}

std::vector<Index> extend_basis(const Field& F, const Matrix& base, const Matrix& candidates) {
  const Matrix joint = hstack(base, candidates);
  Dense d(F, joint);
  std::vector<Index> out;
  for (Index c : eliminate(d))
    if (c >= base.cols()) out.push_back(c - base.cols());
  return out;
}

Matrix column_basis(const Field& F, const Matrix& m) {
  Dense d(F, m);
  const auto pivots = eliminate(d);
  return select_cols(F.typed(m), pivots);
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Matrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Matrix out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

Matrix select_rows(const Matrix& m, const std::vector<Index>& rows) {
  Matrix out(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = m.row(rows[i]);
  return out;
}

Matrix select_cols(const Matrix& m, const std::vector<Index>& cols) {
  Matrix out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = m.col(cols[j]);
  return out;
}

bool is_zero(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_zero(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

}  // namespace gf
}  // namespace resco
