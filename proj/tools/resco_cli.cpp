// resco: restricted twisted Heisenberg superalgebras from the command line.
//
//   resco algebra     --p 3 --m 1 --n 1 --t 1 --lambda 1 --kappa 1
//   resco cohomology  --restricted --degree 2 --p 5 --m 2 --n 1 --t 2 --lambda 1,2 --kappa 3
//   resco extend      --list | --build G_ij --indices 1,2 | --representative 0
//   resco sweep       --grid "p=3,5;m=1..2;n=1..2;t=1..2;mu=0,random"
//
// Exit codes: 0 success, 2 bad input, 3 theorem mismatch, 4 verifier failure.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "resco/error.hpp"
#include "resco/extension.hpp"
#include "resco/grid.hpp"
#include "resco/io.hpp"
#include "resco/theorems.hpp"

using nlohmann::json;
using namespace resco;

namespace {

constexpr int kBadInput = 2;
constexpr int kMismatch = 3;
constexpr int kVerifier = 4;

struct Options {
  Residue p = 3;
  int m = 1, n = 1, t = 1;
  std::vector<Residue> lambda, kappa, mu;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string input;
};

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_params(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "Odd prime");
  cmd->add_option("--m", o.m, "Number of twisted even pairs");
  cmd->add_option("--n", o.n, "Number of twisted odd pairs");
  cmd->add_option("--t", o.t, "Number of untwisted odd elements");
  cmd->add_option("--lambda", o.lambda, "lambda_1,...,lambda_m (default all ones)")->delimiter(',');
  cmd->add_option("--kappa", o.kappa, "kappa_1,...,kappa_n (default all ones)")->delimiter(',');
  cmd->add_option("--mu", o.mu, "mu_1,...,mu_{2m+2} (default zero)")->delimiter(',');
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--seed", o.seed, "Seed for randomized checks");
}

TwistedParams params_of(const Options& o) {
  if (o.m < 0 || o.n < 0 || o.t < 0) throw BadInput("m, n, t must be nonnegative");
  TwistedParams P{o.p, o.m, o.n, o.t, o.lambda, o.kappa, o.mu};
  if (P.lambda.empty()) P.lambda.assign(o.m, 1);
  if (P.kappa.empty()) P.kappa.assign(o.n, 1);
  if (static_cast<int>(P.lambda.size()) != o.m) throw BadInput("--lambda needs m entries");
  if (static_cast<int>(P.kappa.size()) != o.n) throw BadInput("--kappa needs n entries");
  if (!P.mu.empty() && static_cast<int>(P.mu.size()) != 2 * o.m + 2) throw BadInput("--mu needs 2m+2 entries");
  return P;
}

json params_json(const TwistedParams& P) {
  return {{"p", P.p}, {"m", P.m}, {"n", P.n}, {"t", P.t}, {"lambda", P.lambda}, {"kappa", P.kappa},
          {"mu", P.mu_or_zero()}, {"empirical_only", !P.in_theorem_range()}};
}

json sdim_json(const SDim& s) { return json::array({s.even, s.odd}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json report_json(const CohomologyReport& r) {
  json out{{"space", r.space}, {"parity_dims", sdim_json(r.dims)}, {"empirical_only", r.empirical_only}};
  out["formula_dims"] = r.formula ? sdim_json(*r.formula) : json(nullptr);
  out["match"] = r.match ? json(*r.match) : json(nullptr);
  if (r.cross_check) out["cross_check"] = sdim_json(*r.cross_check);
  if (!r.note.empty()) out["note"] = r.note;
  json reps = json::array();
  for (Index c = 0; c < r.representatives.cols(); ++c) {
    json col = json::array();
    for (Index k = 0; k < r.representatives.rows(); ++k) col.push_back(r.representatives(k, c).residue());
    reps.push_back({{"parity", r.representative_parity[c]}, {"coords", col}});
  }
  out["representatives"] = std::move(reps);
  return out;
}

json six_term_json(const SixTermReport& s) {
  json nodes = json::array();
  for (const SixTermNode& node : s.nodes)
    nodes.push_back({{"node", node.name}, {"lhs", sdim_json(node.lhs)}, {"rhs", sdim_json(node.rhs)}, {"ok", node.ok}});
  return {{"ok", s.ok}, {"nodes", nodes}};
}

bool mismatched(const CohomologyReport& r) { return r.match && !*r.match && !r.empirical_only; }

// ---- CSV rows shared by cohomology and sweep ----

const char* kCsvHeader = "p,m,n,t,lambda,kappa,mu,space,dim_even,dim_odd,formula_even,formula_odd,match";

struct Row {
  std::string prefix;  // p,m,n,t,lambda,kappa,mu
  std::string space;
  SDim dims;
  std::optional<SDim> formula;
  std::optional<bool> match;

  std::string csv() const {
    std::string out = prefix + "," + space + "," + std::to_string(dims.even) + "," + std::to_string(dims.odd) + ",";
    out += formula ? std::to_string(formula->even) + "," + std::to_string(formula->odd) : std::string(",");
    out += ",";
    out += match ? (*match ? "true" : "false") : "";
    return out;
  }
  json to_json() const {
    return {{"point", prefix}, {"space", space}, {"dims", sdim_json(dims)},
            {"formula", formula ? sdim_json(*formula) : json(nullptr)},
            {"match", match ? json(*match) : json(nullptr)}};
  }
};

std::string prefix_of(const TwistedParams& P) {
  return std::to_string(P.p) + "," + std::to_string(P.m) + "," + std::to_string(P.n) + "," + std::to_string(P.t) +
         "," + join(P.lambda) + "," + join(P.kappa) + "," + join(P.mu_or_zero());
}

Row report_row(const std::string& prefix, const CohomologyReport& r) {
  Row row{prefix, r.space, r.dims, r.formula, r.match};
  if (r.empirical_only) row.match.reset();
  return row;
}

void print_rows(const std::vector<Row>& rows, const std::string& format) {
  if (format == "csv") {
    std::cout << kCsvHeader << "\n";
    for (const Row& r : rows) std::cout << r.csv() << "\n";
  } else if (format == "json") {
    json out = json::array();
    for (const Row& r : rows) out.push_back(r.to_json());
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Row& r : rows) {
      std::cout << r.prefix << "  " << r.space << "  sdim " << to_string(r.dims);
      if (r.formula) std::cout << "  formula " << to_string(*r.formula);
      if (r.match) std::cout << (*r.match ? "  ok" : "  MISMATCH");
      std::cout << "\n";
    }
  }
}

// ---- subcommands ----

int cmd_algebra(const Options& o) {
  if (!o.input.empty()) {
    const ParsedAlgebra parsed = algebra_from_json_text(read_file(o.input));
    json out = algebra_to_json(parsed.algebra, parsed.pmap ? &*parsed.pmap : nullptr);
    bool ok = true;
    if (parsed.pmap) {
      const RestrictabilityVerdict v = verify_restricted(parsed.algebra, *parsed.pmap, 20, o.seed);
      out["restricted"] = v.restricted;
      if (!v.restricted) {
        out["failing_axiom"] = v.failing_axiom.value_or("");
        ok = false;
      }
    }
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : kVerifier;
  }
  const TwistedParams P = params_of(o);
  const TwistedSuper T = make_twisted_super(P);
  const RestrictabilityVerdict v = verify_restricted(T.algebra, T.pmap, 20, o.seed);
  if (o.format == "json") {
    json out = algebra_to_json(T.algebra, &T.pmap);
    out["params"] = params_json(P);
    out["restricted"] = v.restricted;
    std::cout << out.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "i,j,k,coeff\n";
    const SuperAlgebra& A = T.algebra;
    for (int x = 0; x < A.dim(); ++x)
      for (int y = x; y < A.dim(); ++y)
        for (const auto& [k, c] : A.basis_bracket(x, y))
          std::cout << A.name(x) << "," << A.name(y) << "," << A.name(k) << "," << c.residue() << "\n";
  } else {
    const SuperAlgebra& A = T.algebra;
    std::cout << "sdim (" << A.even_dim() << "," << A.odd_dim() << ") over F_" << P.p
              << (P.in_theorem_range() ? "" : "  [empirical only]") << "\n";
    for (int x = 0; x < A.dim(); ++x)
      for (int y = x; y < A.dim(); ++y) {
        const json v2 = element_to_json(A, A.bracket(A.basis(x), A.basis(y)));
        if (!v2.empty()) std::cout << "[" << A.name(x) << ", " << A.name(y) << "] = " << v2.dump() << "\n";
      }
    for (int k = 0; k < A.even_dim(); ++k)
      std::cout << A.name(k) << "^[p] = " << element_to_json(A, T.pmap.basis_values[k]).dump() << "\n";
    std::cout << "restricted: " << (v.restricted ? "yes" : "no") << "\n";
  }
  return v.restricted ? 0 : kVerifier;
}

int cmd_cohomology(const Options& o, bool ordinary, bool restricted, int degree) {
  if (!ordinary && !restricted) ordinary = restricted = true;
  std::vector<int> degrees = degree ? std::vector<int>{degree} : std::vector<int>{1, 2};

  std::vector<CohomologyReport> reports;
  std::optional<SixTermReport> six;
  std::string prefix;
  json header;
  if (!o.input.empty()) {
    const ParsedAlgebra parsed = algebra_from_json_text(read_file(o.input));
    const CochainComplex cx(parsed.algebra);
    if (ordinary)
      for (int q : degrees) reports.push_back(cohomology(cx, q));
    if (restricted) {
      if (!parsed.pmap) throw BadInput("restricted cohomology needs a \"pmap\" entry");
      if (!verify_restricted(parsed.algebra, *parsed.pmap, 20, o.seed).restricted) {
        std::cerr << "error: the given [p]-map is not restricted\n";
        return kVerifier;
      }
      const RestrictedComplex rx(parsed.algebra, *parsed.pmap);
      for (int q : degrees) reports.push_back(restricted_cohomology(rx, q, 100, o.seed));
      six = six_term_check(rx, o.seed);
    }
    prefix = std::to_string(parsed.algebra.field().p()) + ",,,,,,";
    header = {{"input", o.input}};
  } else {
    const TwistedParams P = params_of(o);
    const PointReport r = analyze(P, o.seed);
    for (int q : degrees) {
      if (ordinary) reports.push_back(q == 1 ? r.h1 : r.h2);
    }
    for (int q : degrees) {
      if (restricted) reports.push_back(q == 1 ? r.h1_star : r.h2_star);
    }
    if (restricted) six = r.six_term;
    prefix = prefix_of(P);
    header = params_json(P);
  }

  bool mismatch = false;
  for (const CohomologyReport& r : reports) mismatch = mismatch || mismatched(r);
  const bool six_ok = !six || six->ok;
  if (o.format == "json") {
    json out{{"params", header}, {"reports", json::array()}};
    for (const CohomologyReport& r : reports) out["reports"].push_back(report_json(r));
    if (six) out["six_term"] = six_term_json(*six);
    std::cout << out.dump(2) << "\n";
  } else {
    std::vector<Row> rows;
    for (const CohomologyReport& r : reports) rows.push_back(report_row(prefix, r));
    print_rows(rows, o.format);
    if (six && o.format == "text")
      for (const SixTermNode& node : six->nodes)
        std::cout << "six-term " << node.name << ": " << to_string(node.lhs) << " vs " << to_string(node.rhs)
                  << (node.ok ? "  ok" : "  FAIL") << "\n";
  }
  if (!six_ok) return kVerifier;
  return mismatch ? kMismatch : 0;
}

int cmd_extend(const Options& o, bool list, const std::string& kind_name, const std::vector<int>& indices,
               int representative) {
  const TwistedParams P = params_of(o);
  const TwistedSuper T = make_twisted_super(P);
  if (list || (kind_name.empty() && representative < 0)) {
    const std::vector<CatalogEntry> entries = catalog_entries(P);
    if (o.format == "json") {
      json out = json::array();
      for (const CatalogEntry& e : entries) {
        json idx = e.kind == CatalogKind::G_split_i ? json::array({e.i}) : json::array({e.i, e.j});
        out.push_back({{"kind", to_string(e.kind)}, {"indices", idx}});
      }
      std::cout << out.dump(2) << "\n";
    } else {
      if (o.format == "csv") std::cout << "kind,i,j\n";
      for (const CatalogEntry& e : entries) {
        if (o.format == "csv")
          std::cout << to_string(e.kind) << "," << e.i << "," << e.j << "\n";
        else
          std::cout << to_string(e.kind) << " " << e.i << (e.kind == CatalogKind::G_split_i ? "" : " " + std::to_string(e.j))
                    << "\n";
      }
    }
    return 0;
  }

  std::optional<ExtensionSpec> E;
  json source;
  if (representative >= 0) {
    const RestrictedComplex rx(T.algebra, T.pmap);
    const CohomologyReport h2s = restricted_cohomology(rx, 2, 100, o.seed);
    std::vector<Index> even;
    for (Index c = 0; c < h2s.representatives.cols(); ++c)
      if (h2s.representative_parity[c] == 0) even.push_back(c);
    if (representative >= static_cast<int>(even.size()))
      throw BadInput("only " + std::to_string(even.size()) + " even H2* representatives");
    E = build_extension(rx, rx.from_chart(h2s.representatives.col(even[representative])));
    source = {{"representative", representative}};
  } else {
    const auto kind = parse_catalog_kind(kind_name);
    if (!kind) throw BadInput("unknown extension kind " + kind_name);
    const int need = *kind == CatalogKind::G_split_i ? 1 : 2;
    if (static_cast<int>(indices.size()) != need)
      throw BadInput(kind_name + " takes " + std::to_string(need) + " indices");
    const int i = indices[0], j = need == 2 ? indices[1] : 0;
    E = catalog_extension(T, *kind, i, j);
    source = {{"kind", kind_name}, {"indices", indices},
              {"matches_generic", catalog_matches_generic(T, *kind, i, j, 50, o.seed)}};
  }
  const ExtensionCheck check = verify_extension(*E, 20, o.seed);
  json out = algebra_to_json(E->result, &E->result_pmap);
  out["params"] = params_json(P);
  out["source"] = source;
  out["central"] = "c";
  out["verified"] = check.ok();
  if (!check.ok()) out["failure"] = check.message;
  if (o.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    const std::string label = source.contains("kind")
                                  ? source["kind"].get<std::string>() + " " + source["indices"].dump()
                                  : "representative " + source["representative"].dump();
    std::cout << "extension " << label << " sdim (" << E->result.even_dim() << "," << E->result.odd_dim()
              << ") verified " << (check.ok() ? "yes" : "no") << "\n";
    for (const json& b : out["brackets"]) std::cout << "[" << b["i"].get<std::string>() << ", " << b["j"].get<std::string>() << "] = " << b["value"].dump() << "\n";
    for (const json& v : out["pmap"]) std::cout << v["x"].get<std::string>() << "^[p] = " << v["value"].dump() << "\n";
  }
  const bool generic_ok = !source.contains("matches_generic") || source["matches_generic"].get<bool>();
  return check.ok() && generic_ok ? 0 : kVerifier;
}

std::vector<Row> sweep_point(const TwistedParams& P, std::uint64_t seed, int trials) {
  const std::string prefix = prefix_of(P);
  const PointReport r = analyze(P, seed);
  std::vector<Row> rows;
  for (const CohomologyReport* rep : {&r.h1, &r.h2, &r.h1_star, &r.h2_star})
    rows.push_back(report_row(prefix, *rep));
  for (CohomologyReport rep : {r.ideal_h1, r.ideal_h2}) {
    rep.space = "ideal_" + rep.space;
    rows.push_back(report_row(prefix, rep));
  }
  auto counted = [&](const std::string& space, int good, int total) {
    rows.push_back({prefix, space, {good, 0}, SDim{total, 0}, good == total});
  };
  int good = 0;
  for (const SixTermNode& node : r.six_term.nodes) good += node.ok;
  counted("six_term", good, static_cast<int>(r.six_term.nodes.size()));
  counted("hochschild_serre", (r.hs1.ok ? 1 : 0) + (r.hs2.ok ? 1 : 0), 2);
  if (trials >= 0) {
    const ExtensionSuiteReport e = extension_suite(make_twisted_super(P), trials, seed);
    const int ok = e.representatives_ok + e.catalog_ok + e.pairs_ok + e.equivalent_ok + e.inequivalent_ok;
    const int total = e.representatives + e.catalog + e.pairs + e.equivalent_trials + e.inequivalent_trials;
    counted("extensions", ok, total);
  }
  return rows;
}

int cmd_sweep(const Options& o, const std::string& grid_text, bool full, int threads, int trials) {
  GridSpec grid = parse_grid(grid_text);
  grid.sorted = !full;
  const std::vector<TwistedParams> points = enumerate_grid(grid, o.seed);
  std::vector<std::vector<Row>> results(points.size());
  std::vector<std::string> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) {
      try {
        results[k] = sweep_point(points[k], o.seed, trials);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  const int count = std::max(1, threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int k = 0; k < count; ++k) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();

  std::vector<Row> rows;
  bool mismatch = false;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!errors[k].empty()) {
      rows.push_back({prefix_of(points[k]), "error: " + errors[k], {}, std::nullopt, false});
      mismatch = true;
    }
    for (const Row& r : results[k]) {
      rows.push_back(r);
      if (r.match && !*r.match) mismatch = true;
    }
  }
  print_rows(rows, o.format);
  return mismatch ? kMismatch : 0;
}

int exit_code_of(const Error& e) {
  switch (e.code()) {
    case Errc::BadPrime:
    case Errc::ZeroParameter:
    case Errc::NotRestrictable:
    case Errc::InvalidStructure:
    case Errc::ParseError:
    case Errc::IndexOutOfRange:
    case Errc::ConditionNotMet:
    case Errc::OddCocycle:
    case Errc::NotACocycle:
    case Errc::UnsupportedDegree:
    case Errc::BaseMismatch:
    case Errc::SupportOutsideEvenTwistedBasis:
      return kBadInput;
    default:
      return kVerifier;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted twisted Heisenberg Lie superalgebras: cohomology and central extensions"};
  app.require_subcommand(1);
  Options o;

  CLI::App* algebra = app.add_subcommand("algebra", "Emit structure constants and [p]-map");
  add_params(algebra, o);
  algebra->add_option("--input", o.input, "Read a JSON algebra instead of the family parameters");

  bool ordinary = false, restricted = false;
  int degree = 0;
  CLI::App* coh = app.add_subcommand("cohomology", "Ordinary and restricted cohomology in degrees 1 and 2");
  add_params(coh, o);
  coh->add_option("--input", o.input, "Read a JSON algebra instead of the family parameters");
  coh->add_flag("--ordinary", ordinary, "Ordinary cohomology");
  coh->add_flag("--restricted", restricted, "Restricted cohomology and the six-term checks");
  coh->add_option("--degree", degree, "1 or 2 (default both)")->check(CLI::IsMember({1, 2}));

  bool list = false;
  std::string kind;
  std::vector<int> indices;
  int representative = -1;
  CLI::App* ext = app.add_subcommand("extend", "Restricted one-dimensional central extensions");
  add_params(ext, o);
  ext->add_flag("--list", list, "List the valid catalog entries");
  ext->add_option("--build", kind, "Catalog kind: G_ij, G_i_mj, H_ij, H_i_nj, J_kl, G_split_i");
  ext->add_option("--indices", indices, "Catalog indices, e.g. 1,2")->delimiter(',');
  ext->add_option("--representative", representative, "Build from the k-th even H2* representative");

  std::string grid_text;
  bool full = false;
  int threads = 0, trials = 50;
  CLI::App* sweep = app.add_subcommand("sweep", "CSV table over a parameter grid");
  add_params(sweep, o);
  sweep->add_option("--grid", grid_text, "e.g. \"p=3,5;m=1..2;n=1..2;t=1..2;mu=0,random\"");
  sweep->add_flag("--full", full, "Every lambda and kappa tuple instead of sorted ones");
  sweep->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");
  sweep->add_option("--trials", trials, "Equivalence trials per point; negative skips the extension suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }
  if (sweep->parsed() && sweep->get_option("--format")->count() == 0) o.format = "csv";

  try {
    if (algebra->parsed()) return cmd_algebra(o);
    if (coh->parsed()) return cmd_cohomology(o, ordinary, restricted, degree);
    if (ext->parsed()) return cmd_extend(o, list, kind, indices, representative);
    if (sweep->parsed()) return cmd_sweep(o, grid_text, full, threads, trials);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_of(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifier;
  }
  return 0;
}
