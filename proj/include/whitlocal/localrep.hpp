#pragma once

#include <complex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "whitlocal/laurent.hpp"
#include "whitlocal/rational.hpp"

namespace whitlocal {

/// Residue cardinality p (numeric prime power, or the symbol q) and the
/// conductor exponent of the additive character.
class LocalField {
 public:
  static LocalField symbolic(int conductor = 0);
  /// Throws InvalidArgument unless p is a prime power >= 2.
  static LocalField numeric(long p, int conductor = 0);

  bool is_symbolic() const noexcept { return !p_.has_value(); }
  std::optional<long> p() const noexcept { return p_; }
  int conductor() const noexcept { return conductor_; }

  /// q or the number p, as a polynomial.
  LaurentPoly residue() const;
  LaurentPoly residue_power(int k) const;

  std::string to_string() const;

 private:
  std::optional<long> p_;
  int conductor_ = 0;
};

bool is_prime_power(long p);

/// An unramified representation of GL(n) recorded by its Satake parameters.
///
/// Each parameter is a unit of the Laurent ring (a constant times a monomial)
/// or zero: plain symbols, inverted symbols after taking contragredients, or
/// rationals. With trivial_central and numeric parameters the product must be 1;
/// for symbolic parameters the flag is only recorded and applied on request.
class UnramifiedRep {
 public:
  UnramifiedRep(std::vector<LaurentPoly> satake, bool trivial_central = false);

  static UnramifiedRep symbolic(const std::string& prefix, int rank, bool trivial_central = false);
  static UnramifiedRep numeric(const std::vector<Rational>& satake, bool trivial_central = false);

  int rank() const noexcept { return static_cast<int>(satake_.size()); }
  const std::vector<LaurentPoly>& satake() const noexcept { return satake_; }
  bool trivial_central() const noexcept { return trivial_central_; }
  bool is_numeric() const;

  /// Product of the Satake parameters (the central character at the uniformizer).
  LaurentPoly central_value() const;
  std::set<std::string> symbols() const;

  /// Imposes the trivial central character on a symbolic expression by
  /// eliminating the last parameter, alpha_n -> (alpha_1 ... alpha_{n-1})^-1.
  LaurentPoly apply_trivial_central(const LaurentPoly& expr) const;

  nlohmann::json to_json() const;
  static UnramifiedRep from_json(const nlohmann::json& j);

  friend bool operator==(const UnramifiedRep& a, const UnramifiedRep& b) {
    return a.satake_ == b.satake_ && a.trivial_central_ == b.trivial_central_;
  }

 private:
  std::vector<LaurentPoly> satake_;
  bool trivial_central_ = false;
};

enum class HeckeNormalization { Analytic, Classical };

/// lambda(varpi^k) = h_k(satake). The classical normalization multiplies by
/// q^{k(n-1)/2}.
LaurentPoly hecke_eigenvalue(const UnramifiedRep& rep, int k,
                             HeckeNormalization norm = HeckeNormalization::Analytic);

/// Inverts the Satake parameters and reverses their order.
UnramifiedRep contragredient(const UnramifiedRep& rep);

/// [K : K_0(varpi^m)] = p^{(n-1)(m-1)} (p^n - 1)/(p - 1) for m >= 1, and 1 for m = 0.
BigInt congruence_index(int n, long p, int m);
/// The same closed form as a polynomial in q.
LaurentPoly congruence_index_symbolic(int n, int m);

/// Counts GL_n(Z/p^m Z) and its subgroup with bottom-row off-diagonal entries
/// zero, and returns the quotient. p must be prime and p^{m n^2} <= 2^24.
BigInt congruence_index_bruteforce(int n, long p, int m, int jobs = 1);

/// Counts the cosets K_0(p^m) g through their invariant, the bottom row of g
/// up to unit scaling: enumerates (Z/p^m)^n, keeps primitive rows and counts
/// the distinct unit-orbit representatives. p must be prime, p^{mn} <= 2^24.
BigInt congruence_index_by_cosets(int n, long p, int m);

/// sum over beta in (m^-m / o)^r of psi(sum beta_i h_i), where v(h_i) are
/// the given valuations: p^{rm} if every valuation is >= m, else 0.
LaurentPoly character_sum(const LocalField& field, int m, const std::vector<int>& valuations);

/// Independent check of character_sum for prime p: sums exp(2 pi i x / p^m)
/// over (Z/p^m)^r with x = sum b_i p^{v_i}, in floating point.
/// EnumerationTooLarge when p^{mr} > 2^24.
std::complex<double> character_sum_numeric(long p, int m, const std::vector<int>& valuations);

/// The constant p^{(n-2)m} that the published reduction of the twisted
/// character sum prints; kept for side-by-side reporting.
LaurentPoly printed_character_constant(const LocalField& field, int n, int m);

}  // namespace whitlocal
