// Acceptance runner: one PASS/FAIL line per criterion over the full grid.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "resco/error.hpp"
#include "resco/extension.hpp"
#include "resco/grid.hpp"
#include "resco/theorems.hpp"

using namespace resco;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Criterion {
  int number;
  std::string title;
  int checked = 0;
  int failed = 0;
  std::vector<std::string> details;
  int gap_n = 0;  // formula mismatches whose excess is exactly (n, 0)

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ < 5) details.push_back(what);
  }
  void merge(const Criterion& other) {
    checked += other.checked;
    failed += other.failed;
    gap_n += other.gap_n;
    for (const std::string& d : other.details)
      if (details.size() < 5) details.push_back(d);
  }
};

std::string describe(const TwistedParams& P) {
  std::ostringstream os;
  os << "p=" << P.p << " m=" << P.m << " n=" << P.n << " t=" << P.t << " lambda=(" << join(P.lambda, ',')
     << ") kappa=(" << join(P.kappa, ',') << ") mu=(" << join(P.mu_or_zero(), ',') << ")";
  return os.str();
}

std::string vs(const SDim& got, const SDim& want) { return to_string(got) + " vs " + to_string(want); }

void restrictability(Criterion& c) {
  for (Residue p : {2, 3, 5, 7})
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= 2; ++n) {
        std::vector<Residue> lambda(m, 1), kappa(n, 1);
        const bool got = restrictable_predicate(p, lambda, kappa);
        c.check(got == (p > 2), "predicate at p=" + std::to_string(p));
        bool rejected = false;
        try {
          make_twisted_super({p, m, n, 1, lambda, kappa, {}});
        } catch (const Error&) {
          rejected = true;
        }
        c.check(rejected == (p == 2), "constructor at p=" + std::to_string(p));
        if (p > 2) {
          // Every unit satisfies the power condition over F_p.
          std::mt19937_64 rng(kSeed + p);
          const auto l = props::random_units(rng, p, m), k = props::random_units(rng, p, n);
          c.check(restrictable_predicate(p, l, k), "random units at p=" + std::to_string(p));
        }
      }
}

void closed_form(Criterion& c) {
  std::mt19937_64 rng(kSeed);
  const std::vector<std::pair<Residue, int>> points{{3, 1}, {3, 2}, {3, 3}, {3, 2}, {5, 1}, {5, 2},
                                                    {5, 3}, {5, 2}, {7, 1}, {7, 2}, {7, 3}, {7, 1}};
  for (const auto& [p, m] : points) {
    const auto lambda = props::random_units(rng, p, m);
    std::vector<Residue> mu(2 * m + 2);
    for (Residue& v : mu) v = static_cast<Residue>(rng() % p);
    const RestrictedAlgebra R = make_twisted_algebra(p, m, lambda, mu);
    const Field& F = R.algebra.field();
    for (int s = 0; s < 200; ++s) {
      const Vector x = F.random_vector(R.algebra.dim(), rng);
      c.check(p_power(R.algebra, R.pmap, x) == closed_form_p_power(p, m, lambda, mu, x),
              "p=" + std::to_string(p) + " m=" + std::to_string(m) + " sample " + std::to_string(s));
    }
  }
}

struct PointResult {
  Criterion c3{3, ""}, c4{4, ""}, c5{5, ""}, c6{6, ""}, c7{7, ""}, c8{8, ""}, c9{9, ""};
};

PointResult run_point(const TwistedParams& P) {
  PointResult out;
  const std::string at = describe(P);
  const PointReport r = analyze(P, kSeed);

  out.c3.check(r.h1.dims == theorem_h1(P), "H1 " + vs(r.h1.dims, theorem_h1(P)) + " at " + at);
  out.c3.check(r.h2.dims == theorem_h2(P), "H2 " + vs(r.h2.dims, theorem_h2(P)) + " at " + at);
  out.c3.gap_n += r.h2.dims + SDim{P.n, 0} == theorem_h2(P);

  const SDim want_h1 = heisenberg_h1(P.m, P.n, P.t);
  out.c4.check(r.ideal_h1.dims.total() == 2 * P.m + 2 * P.n + P.t && r.ideal_h1.dims == want_h1,
               "ideal H1 " + vs(r.ideal_h1.dims, want_h1) + " at " + at);
  out.c4.check(r.ideal_h2.dims == heisenberg_h2(P.m, P.n, P.t),
               "ideal H2 " + vs(r.ideal_h2.dims, heisenberg_h2(P.m, P.n, P.t)) + " at " + at);

  out.c5.check(r.hs1.ok, "k=1 " + vs(r.hs1.whole, r.hs1.invariant + r.hs1.coinvariant) + " at " + at);
  out.c5.check(r.hs2.ok, "k=2 " + vs(r.hs2.whole, r.hs2.invariant + r.hs2.coinvariant) + " at " + at);

  out.c6.check(r.h1_star.dims == SDim{0, P.t}, "H1_* " + vs(r.h1_star.dims, SDim{0, P.t}) + " at " + at);
  out.c6.check(r.h2_star.dims == theorem_h2_star(P),
               "H2_* " + vs(r.h2_star.dims, theorem_h2_star(P)) + " at " + at);
  out.c6.gap_n += r.h2_star.dims + SDim{P.n, 0} == theorem_h2_star(P);
  out.c6.check(r.frobenius_classes, "Frobenius representatives at " + at);

  for (const SixTermNode& node : r.six_term.nodes)
    out.c7.check(node.ok, "node '" + node.name + "' " + vs(node.lhs, node.rhs) + " at " + at);
  out.c7.check(r.im_D_is_top, "im D at " + at);
  out.c7.check(r.six_term.ker_H == r.named_span, "ker H " + vs(r.six_term.ker_H, r.named_span) + " at " + at);
  out.c7.check(r.named_are_cocycles && r.named_in_ker_H, "A1-A4 cocycles in ker H at " + at);

  out.c8.check(r.d_squared_zero, "d2 d1 at " + at);
  out.c8.check(r.restricted_d_squared_zero, "d2_* d1_* at " + at);

  const ExtensionSuiteReport e = extension_suite(make_twisted_super(P), 50, kSeed);
  out.c9.check(e.ok(), e.first_failure + " at " + at);
  return out;
}

void spot_values(Criterion& c3, Criterion& c6) {
  const TwistedParams P{5, 2, 1, 2, {1, 2}, {3}, {}};
  const TwistedSuper T = make_twisted_super(P);
  const CochainComplex cx(T.algebra);
  const RestrictedComplex rx(T.algebra, T.pmap);
  const SDim h2 = cohomology(cx, 2).dims, h2_oracle = oracle::h2(T.algebra);
  c3.check(h2 == h2_oracle, "spot H2 library " + vs(h2, h2_oracle) + " oracle");
  c3.check(h2 == SDim{6, 4}, "spot H2 " + vs(h2, SDim{6, 4}));
  const SDim h2s = restricted_cohomology(rx, 2).dims, h2s_oracle = oracle::h2_star(T.algebra, T.pmap);
  c6.check(h2s == h2s_oracle, "spot H2_* library " + vs(h2s, h2s_oracle) + " oracle");
  c6.check(h2s == SDim{11, 2}, "spot H2_* " + vs(h2s, SDim{11, 2}));
  const SDim h1s = restricted_cohomology(rx, 1).dims, h1s_oracle = oracle::h1_star(T.algebra, T.pmap);
  c6.check(h1s == h1s_oracle, "spot H1_* library " + vs(h1s, h1s_oracle) + " oracle");
}

void properties(Criterion& c) {
  for (const props::Outcome& o : props::all(100, kSeed)) {
    c.check(o.cases >= 100, o.name + ": only " + std::to_string(o.cases) + " cases");
    c.check(o.ok(), o.name + ": " + std::to_string(o.failures) + " failures, first " + o.first_failure);
  }
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Criterion> crit;
  crit.push_back({1, "restrictability predicate and p = 2 rejection"});
  crit.push_back({2, "generic [p]-power equals the closed form"});
  crit.push_back({3, "ordinary H1 and H2 against the closed-form counts"});
  crit.push_back({4, "Heisenberg ideal cohomology"});
  crit.push_back({5, "Hochschild-Serre identity for k = 1, 2"});
  crit.push_back({6, "restricted H1_* and H2_* against the closed-form counts"});
  crit.push_back({7, "six-term sequence, im D and ker H"});
  crit.push_back({8, "d2 d1 = 0 and d2_* d1_* = 0"});
  crit.push_back({9, "restricted central extensions"});
  crit.push_back({10, "property suites"});

  restrictability(crit[0]);
  closed_form(crit[1]);

  const std::vector<TwistedParams> grid = enumerate_grid(parse_grid("p=3,5;m=1..2;n=1..2;t=1..2;mu=0,random"), kSeed);
  std::vector<PointResult> results(grid.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_lock;
  std::string internal_error;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < grid.size(); k = next++) {
        try {
          results[k] = run_point(grid[k]);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(error_lock);
          internal_error += describe(grid[k]) + ": " + e.what() + "\n";
          results[k].c3.check(false, std::string("exception ") + e.what());
        }
      }
    });
  for (std::thread& t : pool) t.join();
  for (const PointResult& r : results) {
    crit[2].merge(r.c3);
    crit[3].merge(r.c4);
    crit[4].merge(r.c5);
    crit[5].merge(r.c6);
    crit[6].merge(r.c7);
    crit[7].merge(r.c8);
    crit[8].merge(r.c9);
  }
  spot_values(crit[2], crit[5]);
  properties(crit[9]);

  bool all = internal_error.empty();
  for (const Criterion& c : crit) {
    const bool ok = c.failed == 0;
    all = all && ok;
    std::printf("criterion %2d %s: %s (%d checks, %d failed)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(),
                c.checked, c.failed);
    for (const std::string& d : c.details) std::printf("    %s\n", d.c_str());
    if (c.gap_n > 0) std::printf("    grid points where the formula exceeds the computed value by exactly (n, 0): %d\n", c.gap_n);
  }
  if (!internal_error.empty()) std::printf("internal errors:\n%s", internal_error.c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu grid points, %u threads, %.1f s\n", grid.size(), workers, secs);
  return all ? 0 : 1;
}
