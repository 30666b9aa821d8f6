#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "whitlocal/laurent.hpp"
#include "whitlocal/matrix.hpp"
#include "whitlocal/report.hpp"

namespace whitlocal {

/// The spectral parameters (s, w) for rank n. Each is a rational or a
/// linear expression in the symbols s and w.
struct ParamPair {
  LaurentPoly s;
  LaurentPoly w;
  int n = 2;

  static ParamPair symbolic(int n);
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const ParamPair& a, const ParamPair& b) { return a.n == b.n && a.s == b.s && a.w == b.w; }
};

/// s' = (1 + (n-1) w - s) / n, w' = ((n+1) s + w - 1) / n. The perturbation
/// is added to s' and exists only to exercise the checks with a wrong map.
ParamPair dual_params(const ParamPair& p, const Rational& perturbation = 0);

/// Involution, the two exponent identities, the fixed central point and,
/// for n = 2, the two-variable form s' = (1 + w - s)/2.
SuiteReport verify_involution_and_exponents(int n, const Rational& perturbation = 0);

/// The test-vector unipotents at q and at l (beta_i in column n+1, resp. n,
/// rows 1..n-1) and the swap w12 of the last two coordinates.
SymbolicMatrix unipotent_at_q(int n);
SymbolicMatrix unipotent_at_l(int n);
SymbolicMatrix weyl_swap(int n);

/// w12 U_l w12 = U_q and w12^2 = I in GL(n+1).
SuiteReport weyl_conjugation_identity(int n);

/// diag(u H, u, 1) = C w12 diag(H, u^-1, 1) w12 with C = u I central and H a
/// symbolic (n-1) x (n-1) matrix; plus centrality of C and the u = 1 case.
SuiteReport cusp_invariance_factorization(int n);

}  // namespace whitlocal
