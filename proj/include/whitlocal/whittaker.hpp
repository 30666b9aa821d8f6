#pragma once

#include <string>
#include <vector>

#include "whitlocal/laurent.hpp"
#include "whitlocal/localrep.hpp"
#include "whitlocal/symfunc.hpp"

namespace whitlocal {

/// diag(t^m_1, ..., t^m_n) for a uniformizer t.
class TorusCocharacter {
 public:
  TorusCocharacter() = default;
  explicit TorusCocharacter(std::vector<int> exps) : exps_(std::move(exps)) {}

  const std::vector<int>& exps() const noexcept { return exps_; }
  int size() const noexcept { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_.at(static_cast<std::size_t>(i)); }
  bool is_dominant() const;
  int weight() const;

  /// (m_1, ..., m_n, tail...)
  TorusCocharacter extended(int tail) const;
  /// (-m_n, ..., -m_1)
  TorusCocharacter reversed_negated() const;
  TorusCocharacter shifted(int c) const;

  /// Twice the exponent of q in delta_B^{1/2}: -sum m_i (n + 1 - 2i).
  int twice_modular_half() const;

  std::string to_string() const;

  friend bool operator==(const TorusCocharacter&, const TorusCocharacter&) = default;

 private:
  std::vector<int> exps_;
};

/// Casselman-Shalika evaluator for one representation. Keeps a Schur table,
/// so repeated evaluation at many cocharacters shares the h_k.
/// Immutable after construction.
class SphericalWhittaker {
 public:
  SphericalWhittaker(const UnramifiedRep& rep, int max_weight);

  const UnramifiedRep& rep() const noexcept { return rep_; }

  /// delta^{1/2}(t^mu) s_{mu - m_n}(satake) (prod satake)^{m_n}, and 0 off
  /// dominant mu. The shifted weight must not exceed max_weight.
  LaurentPoly value(const TorusCocharacter& mu) const;
  /// The same without the delta factor.
  LaurentPoly schur_part(const TorusCocharacter& mu) const;

 private:
  UnramifiedRep rep_;
  SchurTable table_;
};

LaurentPoly spherical_value(const UnramifiedRep& rep, const TorusCocharacter& mu);

/// sum over beta in (m^-m/o)^{n-1} of W(diag(t^mu, 1) u(-beta)), u(beta) the
/// unipotent with beta in the last column. Conjugating u(-beta) to the left
/// leaves only the superdiagonal coordinate -t^{mu_{n-1}} beta_{n-1} under psi,
/// so the sum is p^{(n-1)m} [mu_{n-1} >= m] W(diag(t^mu, 1)).
LaurentPoly twisted_value(const UnramifiedRep& rep, const TorusCocharacter& mu, int m, const LocalField& field);

/// The published form of the same sum: p^{(n-2)m} with every mu_i >= m imposed.
LaurentPoly twisted_value_printed(const UnramifiedRep& rep, const TorusCocharacter& mu, int m,
                                  const LocalField& field);

/// W(w0 (g^t)^-1) at g = diag(t^mu), computed through the matrix
/// w0 g^-1 w0 and read back as a cocharacter.
LaurentPoly contragredient_value(const UnramifiedRep& rep, const TorusCocharacter& mu);

}  // namespace whitlocal
