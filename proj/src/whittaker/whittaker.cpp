#include "whitlocal/whittaker.hpp"

#include <algorithm>
#include <numeric>

#include "whitlocal/error.hpp"
#include "whitlocal/matrix.hpp"

namespace whitlocal {

bool TorusCocharacter::is_dominant() const {
  return std::is_sorted(exps_.rbegin(), exps_.rend());
}

int TorusCocharacter::weight() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

TorusCocharacter TorusCocharacter::extended(int tail) const {
  auto e = exps_;
  e.push_back(tail);
  return TorusCocharacter(std::move(e));
}

TorusCocharacter TorusCocharacter::reversed_negated() const {
  std::vector<int> e(exps_.rbegin(), exps_.rend());
  for (int& x : e) x = -x;
  return TorusCocharacter(std::move(e));
}

TorusCocharacter TorusCocharacter::shifted(int c) const {
  auto e = exps_;
  for (int& x : e) x += c;
  return TorusCocharacter(std::move(e));
}

int TorusCocharacter::twice_modular_half() const {
  int n = size();
  int total = 0;
  for (int i = 1; i <= n; ++i) total -= exps_[static_cast<std::size_t>(i - 1)] * (n + 1 - 2 * i);
  return total;
}

std::string TorusCocharacter::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exps_[i]);
  }
  return out + ")";
}

SphericalWhittaker::SphericalWhittaker(const UnramifiedRep& rep, int max_weight)
    : rep_(rep), table_(rep.satake(), std::max(0, max_weight)) {}

LaurentPoly SphericalWhittaker::schur_part(const TorusCocharacter& mu) const {
  if (mu.size() != rep_.rank())
    throw Error(ErrorCode::RankMismatch, "cocharacter " + mu.to_string() + " has length " +
                                             std::to_string(mu.size()) + ", rank is " + std::to_string(rep_.rank()));
  if (!mu.is_dominant()) return LaurentPoly();
  int last = mu.exps().back();
  std::vector<int> parts;
  for (int x : mu.exps()) parts.push_back(x - last);
  LaurentPoly s = table_.schur(Partition(parts));
  if (last == 0) return s;
  LaurentPoly central = rep_.central_value();
  if (last < 0 && central.is_zero())
    throw Error(ErrorCode::ZeroSatakeParameter, "negative central shift with a zero Satake parameter");
  return s * central.pow(last);
}

LaurentPoly SphericalWhittaker::value(const TorusCocharacter& mu) const {
  LaurentPoly s = schur_part(mu);
  if (s.is_zero()) return s;
  return s * LaurentPoly::term(1, Monomial::from_twice(residue_variable(), mu.twice_modular_half()));
}

namespace {

int shifted_weight(const TorusCocharacter& mu) {
  if (mu.size() == 0 || !mu.is_dominant()) return 0;
  return mu.weight() - mu.size() * mu.exps().back();
}

}  // namespace

LaurentPoly spherical_value(const UnramifiedRep& rep, const TorusCocharacter& mu) {
  return SphericalWhittaker(rep, shifted_weight(mu)).value(mu);
}

namespace {

void check_twist(const UnramifiedRep& rep, const TorusCocharacter& mu, int m, const LocalField& field) {
  if (mu.size() + 1 != rep.rank())
    throw Error(ErrorCode::RankMismatch, "twisted values need a cocharacter of length rank - 1");
  if (field.conductor() != 0) throw Error(ErrorCode::UnsupportedConductor, "the twist needs d_v = 0");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "level must be non-negative");
}

}  // namespace

LaurentPoly twisted_value(const UnramifiedRep& rep, const TorusCocharacter& mu, int m, const LocalField& field) {
  check_twist(rep, mu, m, field);
  int n = rep.rank();
  LaurentPoly w = spherical_value(rep, mu.extended(0));
  if (w.is_zero()) return w;
  // The n-2 unconstrained coordinates each contribute the full count p^m;
  // n = 1 has no coordinate at all.
  if (n == 1) return w;
  int last = mu.exps().back();
  LaurentPoly factor = field.residue_power((n - 2) * m) * character_sum(field, m, {last});
  return factor * w;
}

LaurentPoly twisted_value_printed(const UnramifiedRep& rep, const TorusCocharacter& mu, int m,
                                  const LocalField& field) {
  check_twist(rep, mu, m, field);
  int n = rep.rank();
  if (n == 1) return spherical_value(rep, mu.extended(0));
  for (int x : mu.exps())
    if (x < m) return LaurentPoly();
  return printed_character_constant(field, n, m) * spherical_value(rep, mu.extended(0));
}

LaurentPoly contragredient_value(const UnramifiedRep& rep, const TorusCocharacter& mu) {
  int n = rep.rank();
  if (mu.size() != n) throw Error(ErrorCode::RankMismatch, "cocharacter length differs from the rank");
  const std::string t = "t";
  std::vector<LaurentPoly> diag, inv;
  for (int x : mu.exps()) {
    diag.push_back(LaurentPoly::variable(t, x));
    inv.push_back(LaurentPoly::variable(t, -x));
  }
  auto g = SymbolicMatrix::diagonal(diag);
  auto g_inv = SymbolicMatrix::diagonal(inv);
  if (!(g * g_inv == SymbolicMatrix::identity(static_cast<std::size_t>(n))))
    throw Error(ErrorCode::InvalidArgument, "torus inverse failed");
  SymbolicMatrix w0(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w0.at(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1 - i)) = 1;
  // g is diagonal, so g^t = g; w0 on the right is absorbed by K-invariance.
  auto h = w0 * g_inv.transpose() * w0;
  if (!h.is_diagonal()) throw Error(ErrorCode::InvalidArgument, "conjugated torus element is not diagonal");
  VarId tid = intern_variable(t);
  std::vector<int> exps;
  for (int i = 0; i < n; ++i) {
    auto term = h.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)).single_term();
    exps.push_back(term->second.twice_exponent(tid) / 2);
  }
  return spherical_value(rep, TorusCocharacter(std::move(exps)));
}

}  // namespace whitlocal
