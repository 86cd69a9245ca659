#include "resco/io.hpp"

#include <set>
#include <unordered_map>

#include "resco/error.hpp"

namespace resco {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

std::vector<std::string> names_of(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) fail(std::string("missing array \"") + key + "\"");
  std::vector<std::string> out;
  for (const json& n : j[key]) {
    if (!n.is_string()) fail(std::string("non-string name in \"") + key + "\"");
    out.push_back(n.get<std::string>());
  }
  return out;
}

struct Lookup {
  std::unordered_map<std::string, int> index;

  int operator()(const json& name) const {
    if (!name.is_string()) fail("basis name must be a string");
    const auto it = index.find(name.get<std::string>());
    if (it == index.end()) fail("unknown basis name \"" + name.get<std::string>() + "\"");
    return it->second;
  }
};

Vector parse_value(const Field& F, int dim, const Lookup& lookup, const json& value) {
  if (!value.is_array()) fail("\"value\" must be a list of [coeff, name] pairs");
  Vector v = F.zeros(dim);
  for (const json& term : value) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
      fail("each term must be [integer coeff, name]");
    v(lookup(term[1])) += F(term[0].get<Residue>());
  }
  return v;
}

}  // namespace

ParsedAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) fail("algebra must be a JSON object");
  if (!j.contains("p") || !j["p"].is_number_integer()) fail("missing integer \"p\"");
  const auto p = j["p"].get<Residue>();
  if (!gf::is_prime(p)) throw Error(Errc::BadPrime, std::to_string(p) + " is not prime");
  const Field F(p);
  const std::vector<std::string> even = names_of(j, "even");
  const std::vector<std::string> odd = names_of(j, "odd");
  std::vector<std::string> names = even;
  names.insert(names.end(), odd.begin(), odd.end());
  Lookup lookup;
  for (int k = 0; k < static_cast<int>(names.size()); ++k)
    if (!lookup.index.emplace(names[k], k).second) fail("duplicate basis name \"" + names[k] + "\"");

  StructureData data(F, static_cast<int>(even.size()), static_cast<int>(odd.size()), names);
  const int d = data.dim();
  std::vector<bool> seen(static_cast<std::size_t>(d) * d, false);
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) fail("\"brackets\" must be a list");
    for (const json& entry : j["brackets"]) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") || !entry.contains("value"))
        fail("bracket entries need \"i\", \"j\" and \"value\"");
      const int x = lookup(entry["i"]);
      const int y = lookup(entry["j"]);
      const Vector v = parse_value(F, d, lookup, entry["value"]);
      // [b_y, b_x] = -(-1)^{|x||y|} [b_x, b_y].
      const Fp sign = data.parity(x) * data.parity(y) == 1 ? F.one() : -F.one();
      auto store = [&](int a, int b, const Vector& w) {
        const std::size_t slot = static_cast<std::size_t>(a) * d + b;
        if (seen[slot]) {
          for (int k = 0; k < d; ++k)
            if (data.at(a, b, k) != w(k))
              fail("conflicting entries for [" + names[a] + ", " + names[b] + "]");
          return;
        }
        seen[slot] = true;
        for (int k = 0; k < d; ++k) data.at(a, b, k) = w(k);
      };
      store(x, y, v);
      store(y, x, Vector(v * sign));
    }
  }
  AxiomReport report = verify_superalgebra(data);
  if (!report.ok) throw Error(Errc::InvalidStructure, report.axiom + ": " + report.message);
  ParsedAlgebra out{SuperAlgebra(std::move(data)), std::nullopt};

  if (j.contains("pmap")) {
    if (!j["pmap"].is_array()) fail("\"pmap\" must be a list");
    const SuperAlgebra& A = out.algebra;
    PMapSpec P;
    P.basis_values.assign(A.even_dim(), A.zero());
    std::set<int> given;
    for (const json& entry : j["pmap"]) {
      if (!entry.is_object() || !entry.contains("x") || !entry.contains("value"))
        fail("pmap entries need \"x\" and \"value\"");
      const int x = lookup(entry["x"]);
      if (x >= A.even_dim()) fail("[p]-value given for odd element " + names[x]);
      if (!given.insert(x).second) fail("duplicate [p]-value for " + names[x]);
      P.basis_values[x] = parse_value(F, d, lookup, entry["value"]);
    }
    out.pmap = std::move(P);
  }
  return out;
}

ParsedAlgebra algebra_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  return algebra_from_json(j);
}

json element_to_json(const SuperAlgebra& A, const Vector& x) {
  json out = json::array();
  for (int k = 0; k < A.dim(); ++k)
    if (!x(k).is_zero()) out.push_back(json::array({x(k).residue(), A.name(k)}));
  return out;
}

json algebra_to_json(const SuperAlgebra& A, const PMapSpec* pmap) {
  json out;
  out["p"] = A.field().p();
  out["even"] = json::array();
  out["odd"] = json::array();
  for (int k = 0; k < A.dim(); ++k) out[A.parity(k) == 0 ? "even" : "odd"].push_back(A.name(k));
  json brackets = json::array();
  for (int x = 0; x < A.dim(); ++x)
    for (int y = x; y < A.dim(); ++y) {
      const Vector v = A.bracket(A.basis(x), A.basis(y));
      if (!gf::is_zero(v)) brackets.push_back({{"i", A.name(x)}, {"j", A.name(y)}, {"value", element_to_json(A, v)}});
    }
  out["brackets"] = std::move(brackets);
  if (pmap) {
    json values = json::array();
    for (int k = 0; k < A.even_dim(); ++k)
      values.push_back({{"x", A.name(k)}, {"value", element_to_json(A, pmap->basis_values[k])}});
    out["pmap"] = std::move(values);
  }
  return out;
}

}  // namespace resco
