#pragma once

// Parameter grids for sweeps: "p=3,5;m=1..2;n=1..2;t=1..2;mu=0,random".

#include <cstdint>
#include <string>
#include <vector>

#include "resco/families.hpp"

namespace resco {

struct GridSpec {
  std::vector<Residue> primes{3, 5};
  std::vector<int> m{1, 2};
  std::vector<int> n{1, 2};
  std::vector<int> t{1, 2};
  bool mu_zero = true;
  bool mu_random = true;
  /// Sorted lambda and kappa tuples only (canonical up to order); false lists every tuple.
  bool sorted = true;
};

/// Keys p, m, n, t take "a,b,..." or "a..b"; mu takes "0", "random" or both.
/// Unlisted keys keep their defaults. Throws ParseError.
GridSpec parse_grid(const std::string& text);

/// All points in a fixed order: p, m, n, t, lambda, kappa, then mu = 0 before
/// the random mu. Random mu vectors are nonzero and drawn from `seed`.
std::vector<TwistedParams> enumerate_grid(const GridSpec& grid, std::uint64_t seed);

/// Tuples of length k over 1..p-1, non-decreasing when `sorted`.
std::vector<std::vector<Residue>> unit_tuples(Residue p, int k, bool sorted);

std::string join(const std::vector<Residue>& values, char sep = ' ');

}  // namespace resco
