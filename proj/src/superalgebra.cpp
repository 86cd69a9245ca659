#include "resco/superalgebra.hpp"

#include <sstream>

namespace resco {

namespace {

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

StructureData::StructureData(const Field& F, int even, int odd, std::vector<std::string> basis_names)
    : p(F.p()), even_dim(even), odd_dim(odd), names(std::move(basis_names)) {
  if (static_cast<int>(names.size()) != dim())
    throw Error(Errc::InvalidStructure, "basis name count does not match dimension");
  constants.assign(static_cast<std::size_t>(dim()) * dim() * dim(), F.zero());
}

void StructureData::set_bracket(int i, int j, int k, Fp value) {
  at(i, j, k) = value;
  const Fp partner = -value * Fp(sign(parity(i) * parity(j)));
  if (i != j) at(j, i, k) = partner;
}

AxiomReport verify_superalgebra(const StructureData& data) {
  const int d = data.dim();
  AxiomReport report;
  auto fail = [&](std::string axiom, int i, int j, int k) {
    report.ok = false;
    report.axiom = std::move(axiom);
    report.triple = {i, j, k};
    std::ostringstream os;
    os << report.axiom << " fails at (" << data.names[i] << ", " << data.names[j] << ", "
       << data.names[k] << ")";
    report.message = os.str();
    return report;
  };

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const Fp c = data.at(i, j, k);
        if (!(c == -Fp(sign(data.parity(i) * data.parity(j))) * data.at(j, i, k)))
          return fail("super-antisymmetry", i, j, k);
        if (!c.is_zero() && data.parity(k) != (data.parity(i) + data.parity(j)) % 2)
          return fail("parity", i, j, k);
      }

  std::vector<std::vector<std::pair<int, Fp>>> sparse(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!data.at(i, j, k).is_zero()) sparse[static_cast<std::size_t>(i) * d + j].emplace_back(k, data.at(i, j, k));

  // acc += s * [[x,y],z]
  std::vector<Fp> acc(d);
  auto add_double_bracket = [&](int x, int y, int z, int s) {
    for (const auto& [a, c] : sparse[static_cast<std::size_t>(x) * d + y])
      for (const auto& [b, e] : sparse[static_cast<std::size_t>(a) * d + z]) acc[b] += Fp(s) * c * e;
  };

  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        const int px = data.parity(x), py = data.parity(y), pz = data.parity(z);
        std::fill(acc.begin(), acc.end(), Fp(0));
        add_double_bracket(x, y, z, sign(px * pz));
        add_double_bracket(y, z, x, sign(py * px));
        add_double_bracket(z, x, y, sign(pz * py));
        for (int b = 0; b < d; ++b)
          if (!acc[b].is_zero()) return fail("jacobi", x, y, z);
      }
  return report;
}

SuperAlgebra::SuperAlgebra(StructureData data) : field_(data.p), data_(std::move(data)) {
  for (auto& c : data_.constants) {
    if (c.typed() && c.modulus() != field_.p())
      throw Error(Errc::ModulusMismatch, "structure constant outside F_" + std::to_string(field_.p()));
    c = field_(c.residue());
  }
  const AxiomReport report = verify_superalgebra(data_);
  if (!report.ok) throw Error(Errc::InvalidStructure, report.message);

  const int d = dim();
  sparse_.resize(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!data_.at(i, j, k).is_zero()) sparse_[static_cast<std::size_t>(i) * d + j].emplace_back(k, data_.at(i, j, k));
}

std::optional<int> SuperAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (data_.names[i] == name) return i;
  return std::nullopt;
}

void SuperAlgebra::check_owner(const Vector& x) const {
  if (x.size() != dim())
    throw Error(Errc::OwnerMismatch,
                "element of length " + std::to_string(x.size()) + " in algebra of dimension " +
                    std::to_string(dim()));
  for (Index i = 0; i < x.size(); ++i)
    if (x(i).typed() && x(i).modulus() != field_.p())
      throw Error(Errc::OwnerMismatch, "element coordinates over a different field");
}

bool SuperAlgebra::is_even(const Vector& x) const {
  check_owner(x);
  return gf::is_zero(Vector(x.tail(odd_dim())));
}

bool SuperAlgebra::is_odd(const Vector& x) const {
  check_owner(x);
  return gf::is_zero(Vector(x.head(even_dim())));
}

Vector SuperAlgebra::bracket(const Vector& x, const Vector& y) const {
  check_owner(x);
  check_owner(y);
  const int d = dim();
  Vector out = zero();
  for (int i = 0; i < d; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y(j).is_zero()) continue;
      const Fp w = x(i) * y(j);
      for (const auto& [k, c] : basis_bracket(i, j)) out(k) += w * c;
    }
  }
  return out;
}

Vector SuperAlgebra::nested_bracket(std::span<const Vector> args) const {
  if (args.size() < 2) throw Error(Errc::TooFewArguments, "nested bracket needs at least two arguments");
  Vector acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = bracket(acc, args[i]);
  return acc;
}

Matrix SuperAlgebra::ad_matrix(const Vector& x) const {
  if (!is_even(x)) throw Error(Errc::OddArgument, "ad_matrix needs an even element");
  const int d = dim();
  Matrix m = field_.zeros(d, d);
  for (int i = 0; i < d; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : basis_bracket(i, j)) m(k, j) += x(i) * c;
  }
  return m;
}

}  // namespace resco
