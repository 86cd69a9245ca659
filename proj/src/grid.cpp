#include "resco/grid.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "resco/error.hpp"

namespace resco {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, "grid: " + what); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

long long to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) fail("bad integer \"" + s + "\"");
    return v;
  } catch (const std::logic_error&) {
    fail("bad integer \"" + s + "\"");
  }
}

template <class T>
std::vector<T> values(const std::string& text) {
  std::vector<T> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const long long lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
    for (long long v = lo; v <= hi; ++v) out.push_back(static_cast<T>(v));
    return out;
  }
  for (const std::string& item : split(text, ',')) out.push_back(static_cast<T>(to_int(item)));
  return out;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  for (const std::string& clause : split(text, ';')) {
    const auto eq = clause.find('=');
    if (eq == std::string::npos) fail("expected key=value in \"" + clause + "\"");
    const std::string key = clause.substr(0, eq), val = clause.substr(eq + 1);
    if (key == "p") {
      g.primes = values<Residue>(val);
    } else if (key == "m") {
      g.m = values<int>(val);
    } else if (key == "n") {
      g.n = values<int>(val);
    } else if (key == "t") {
      g.t = values<int>(val);
    } else if (key == "mu") {
      g.mu_zero = g.mu_random = false;
      for (const std::string& item : split(val, ',')) {
        if (item == "0") g.mu_zero = true;
        else if (item == "random") g.mu_random = true;
        else fail("mu takes 0 or random, not \"" + item + "\"");
      }
    } else {
      fail("unknown key \"" + key + "\"");
    }
  }
  for (Residue p : g.primes)
    if (!gf::is_prime(p)) fail(std::to_string(p) + " is not prime");
  for (const auto* dims : {&g.m, &g.n, &g.t})
    for (int v : *dims)
      if (v < 0) fail("negative dimension");
  return g;
}

std::vector<std::vector<Residue>> unit_tuples(Residue p, int k, bool sorted) {
  std::vector<std::vector<Residue>> out;
  std::vector<Residue> cur;
  auto rec = [&](auto&& self, Residue lo) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (Residue v = sorted ? lo : 1; v < p; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<TwistedParams> enumerate_grid(const GridSpec& grid, std::uint64_t seed) {
  std::vector<TwistedParams> out;
  std::mt19937_64 rng(seed);
  for (Residue p : grid.primes)
    for (int m : grid.m)
      for (int n : grid.n)
        for (int t : grid.t)
          for (const auto& lambda : unit_tuples(p, m, grid.sorted))
            for (const auto& kappa : unit_tuples(p, n, grid.sorted)) {
              TwistedParams P{p, m, n, t, lambda, kappa, {}};
              if (grid.mu_zero) out.push_back(P);
              if (grid.mu_random) {
                std::vector<Residue> mu(2 * m + 2, 0);
                while (std::all_of(mu.begin(), mu.end(), [](Residue v) { return v == 0; }))
                  for (Residue& v : mu) v = std::uniform_int_distribution<Residue>(0, p - 1)(rng);
                P.mu = mu;
                out.push_back(P);
              }
            }
  return out;
}

std::string join(const std::vector<Residue>& values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

}  // namespace resco
