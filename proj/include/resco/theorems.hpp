#pragma once

// Closed-form dimension counts and named cocycles for the twisted Heisenberg
// family, plus a one-call analysis of a parameter point.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "resco/families.hpp"
#include "resco/restricted.hpp"

namespace resco {

struct ParameterCounts {
  int lambda_pairs = 0;  // #{i < j : lambda_i = +-lambda_j}
  int kappa_pairs = 0;   // #{i <= j : kappa_i = +-kappa_j}
  int mixed_pairs = 0;   // #{(i, j) : lambda_i = +-kappa_j}
};

ParameterCounts parameter_counts(const TwistedParams& P);

/// (1, t).
SDim theorem_h1(const TwistedParams& P);
/// (2 C_lambda + 2 C_kappa + t(t+1)/2 + m - 1, 2 C_mixed + t).
SDim theorem_h2(const TwistedParams& P);
/// (2 C_lambda + 2 C_kappa + t(t+1)/2 + 3m, 2 C_mixed).
SDim theorem_h2_star(const TwistedParams& P);
/// H^1 of h_{m,2n+t}: (2m, 2n+t).
SDim heisenberg_h1(int m, int n, int t);
/// Size of the printed H^2 spanning set of h_{m,2n+t}, split by parity.
SDim heisenberg_h2(int m, int n, int t);

/// A linear combination of dual wedges; vanishing wedges contribute nothing.
Cochain wedge_form(const CochainComplex& cx, const std::vector<std::pair<Fp, std::vector<int>>>& terms);

struct NamedCocycle {
  int family = 0;  // 1..5
  std::string label;
  Cochain phi;
};

/// The sets A_1, ..., A_5 for h^{lambda,kappa,mu}_{m,n,t} (terms with a false
/// condition are left out; terms that vanish identically are kept as zero).
std::vector<NamedCocycle> theorem_cocycles(const CochainComplex& cx, const TwistedParams& P);
/// The printed spanning set of H^2(h_{m,2n+t}) in the ideal's basis.
std::vector<Cochain> heisenberg_cocycles(const CochainComplex& ideal, int m, int n, int t);

/// sdim of the span of the classes of the given 2-cocycles in H^2.
SDim class_span(const CochainComplex& cx, const std::vector<Cochain>& cocycles);

HsReport hs_decomposition_check(const TwistedParams& P, int k);

/// Everything computed at one parameter point.
struct PointReport {
  TwistedParams params;
  CohomologyReport h1, h2, h1_star, h2_star;
  CohomologyReport ideal_h1, ideal_h2;
  HsReport hs1, hs2;
  SixTermReport six_term;
  SDim named_span;            // span of the classes of A_1..A_4
  bool named_are_cocycles = true;
  bool named_in_ker_H = true;
  bool im_D_is_top = false;   // im D = F e-bar^{2m+2}
  bool frobenius_classes = false;  // (0, e-bar^i), i <= 2m+1, independent; e-bar^{2m+2} exact
  bool d_squared_zero = false;
  bool restricted_d_squared_zero = false;
};

PointReport analyze(const TwistedParams& P, std::uint64_t seed = 1);

}  // namespace resco
