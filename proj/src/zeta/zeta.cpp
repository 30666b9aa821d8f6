#include "whitlocal/zeta.hpp"

#include <algorithm>
#include <atomic>

#include "whitlocal/error.hpp"
#include "whitlocal/parallel.hpp"
#include "whitlocal/partition.hpp"
#include "whitlocal/whittaker.hpp"

namespace whitlocal {

bool ZetaResult::consistent() const {
  if (!closed_form) return true;
  return series_equal(series, series_expand(*closed_form, series.var(), series.order()));
}

nlohmann::ordered_json ZetaResult::to_json() const {
  nlohmann::ordered_json out;
  out["series"] = nlohmann::ordered_json(series.to_json());
  out["closedForm"] = closed_form ? nlohmann::ordered_json(closed_form->to_json()) : nlohmann::ordered_json();
  out["latticePoints"] = lattice_points;
  return out;
}

const char* place_kind_name(PlaceKind k) noexcept {
  switch (k) {
    case PlaceKind::Unramified:
      return "unramified";
    case PlaceKind::DividingL:
      return "dividing_l";
    case PlaceKind::DividingQ:
      return "dividing_q";
  }
  return "unknown";
}

nlohmann::ordered_json PaperComparison::to_json() const {
  nlohmann::ordered_json out;
  out["paperConstant"] = paper_constant.to_string();
  out["computedConstant"] = computed_constant.to_string();
  out["ratio"] = ratio.to_string();
  out["note"] = note;
  return out;
}

nlohmann::ordered_json WeightResult::to_json() const {
  nlohmann::ordered_json out;
  out["placeKind"] = place_kind_name(kind);
  if (exact) out["value"] = exact->to_string();
  if (series) out["series"] = nlohmann::ordered_json(series->to_json());
  if (!factors.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : factors) arr.push_back(nlohmann::ordered_json(f.to_json()));
    out["factors"] = arr;
  }
  if (complement_series) out["complementSeries"] = nlohmann::ordered_json(complement_series->to_json());
  if (printed_series) out["printedSeries"] = nlohmann::ordered_json(printed_series->to_json());
  if (kind == PlaceKind::DividingQ) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : index_set) arr.push_back({t[0], t[1], t[2]});
    out["indexSet"] = arr;
    out["vanishes"] = vanishes;
  }
  out["paperComparison"] = paper ? paper->to_json() : nlohmann::ordered_json();
  out["latticePoints"] = lattice_points;
  return out;
}

namespace {

void check_series_variable(const UnramifiedRep& a, const UnramifiedRep& b, const std::string& x) {
  auto sa = a.symbols();
  auto sb = b.symbols();
  if (sa.count(x) || sb.count(x)) throw Error(ErrorCode::SymbolCollision, "series variable " + x + " is a Satake symbol");
  if (x == kResidueVariable) throw Error(ErrorCode::SymbolCollision, "the series variable cannot be q");
}

void check_disjoint(const UnramifiedRep& a, const UnramifiedRep& b, const std::string& x) {
  auto sb = b.symbols();
  for (const auto& s : a.symbols())
    if (sb.count(s)) throw Error(ErrorCode::SymbolCollision, "symbol " + s + " is used by both representations");
  check_series_variable(a, b, x);
}

// prod (1 - alpha_i beta_j x) as a truncated series.
TruncatedSeries l_denominator(const UnramifiedRep& a, const UnramifiedRep& b, const std::string& x, int order) {
  TruncatedSeries out = TruncatedSeries::one(x, order);
  for (const auto& alpha : a.satake())
    for (const auto& beta : b.satake()) {
      TruncatedSeries factor = TruncatedSeries::one(x, order);
      if (order >= 1) factor.add_to(1, -(alpha * beta));
      out = out * factor;
    }
  return out;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, int jobs) {
  int order = std::min(a.order(), b.order());
  std::vector<LaurentPoly> coeffs(static_cast<std::size_t>(order) + 1);
  parallel_for(order + 1, jobs, [&](int k) {
    LaurentPoly c;
    for (int i = 0; i <= k; ++i) c.add_product(a[i], b[k - i]);
    coeffs[static_cast<std::size_t>(k)] = std::move(c);
  });
  return TruncatedSeries(a.var(), std::move(coeffs));
}

// Dominant mu of length len with every entry >= 0 and |mu| = k.
std::vector<TorusCocharacter> lattice_layer(int k, int len) {
  std::vector<TorusCocharacter> out;
  if (len == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  for (const auto& p : partitions_of(k, len)) out.emplace_back(p.padded(len));
  return out;
}

// Measure factor of the Iwasawa reduction for GL(n+1) x GL(n) at mu of
// length n: q^{|mu|/2} delta_{B_n}(mu)^-1. Checks that the composite
// delta bookkeeping collapses to q^{-|mu|/2}.
LaurentPoly measure_factor(const TorusCocharacter& mu) {
  int composite = mu.extended(0).twice_modular_half() - mu.twice_modular_half();
  if (composite != -mu.weight())
    throw Error(ErrorCode::InvalidArgument, "modular character collapse failed at " + mu.to_string());
  return LaurentPoly::term(1, Monomial::from_twice(residue_variable(), mu.weight() - 2 * mu.twice_modular_half()));
}

void check_q_free(const LaurentPoly& term, const TorusCocharacter& mu) {
  if (term.mentions(residue_variable()))
    throw Error(ErrorCode::InvalidArgument, "lattice term at " + mu.to_string() + " keeps a power of q: " + term.to_string());
}

// sum over k <= order and mu in layer(k) with keep(mu) of term(mu) x^k.
template <class Keep, class Term>
TruncatedSeries lattice_sum(const std::string& x, int order, int len, int jobs, long& points, Keep keep, Term term,
                            bool q_free = true) {
  std::vector<LaurentPoly> coeffs(static_cast<std::size_t>(order) + 1);
  std::atomic<long> visited{0};
  parallel_for(order + 1, jobs, [&](int k) {
    LaurentPoly c;
    for (const auto& mu : lattice_layer(k, len)) {
      if (!keep(mu)) continue;
      ++visited;
      LaurentPoly t = term(mu);
      if (q_free) check_q_free(t, mu);
      c += t;
    }
    coeffs[static_cast<std::size_t>(k)] = std::move(c);
  });
  points += visited.load();
  return TruncatedSeries(x, std::move(coeffs));
}

}  // namespace

RationalFunction local_l_factor(const UnramifiedRep& a, const UnramifiedRep& b, const std::string& x) {
  // Shared symbols are allowed here: L(pi x dual pi) is a legitimate factor.
  check_series_variable(a, b, x);
  LaurentPoly den(1);
  LaurentPoly xv = LaurentPoly::variable(x);
  for (const auto& alpha : a.satake())
    for (const auto& beta : b.satake()) den *= LaurentPoly(1) - alpha * beta * xv;
  return RationalFunction(LaurentPoly(1), den);
}

ZetaResult local_zeta_unramified(const UnramifiedRep& a, const UnramifiedRep& b, const std::string& x, int order,
                                 int jobs) {
  if (a.rank() != b.rank() + 1)
    throw Error(ErrorCode::RankMismatch, "zeta integrals pair GL(n+1) with GL(n); got ranks " +
                                             std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
  check_disjoint(a, b, x);
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
  int n = b.rank();
  SphericalWhittaker wa(a, order), wb(b, order);
  long points = 0;
  auto series = lattice_sum(
      x, order, n, jobs, points, [](const TorusCocharacter&) { return true; },
      [&](const TorusCocharacter& mu) { return wa.value(mu.extended(0)) * wb.value(mu) * measure_factor(mu); });
  return ZetaResult{std::move(series), local_l_factor(a, b, x), points};
}

SuiteReport verify_unramified_identity(int n, int order, int jobs) {
  SuiteReport report{"unramified", {}};
  std::string id = "gl" + std::to_string(n + 1) + "xgl" + std::to_string(n);
  std::string desc = "GL(" + std::to_string(n + 1) + ")xGL(" + std::to_string(n) +
                     ") lattice sum equals the L-factor expansion to order " + std::to_string(order);
  report.checks.push_back(run_check(id, desc, [&]() -> std::optional<std::string> {
    auto a = UnramifiedRep::symbolic("a", n + 1);
    auto b = UnramifiedRep::symbolic("b", n);
    auto z = local_zeta_unramified(a, b, "X", order, jobs);
    auto expected = series_expand(*z.closed_form, "X", order);
    for (int k = 0; k <= order; ++k)
      if (!(z.series[k] == expected[k]))
        return "degree " + std::to_string(k) + ": lattice " + z.series[k].to_string() + " vs L " + expected[k].to_string();
    if (z.series[0] != LaurentPoly(1)) return std::string("constant term is not 1");
    return std::nullopt;
  }));
  return report;
}

WeightResult weight_unramified(const UnramifiedRep& big, const UnramifiedRep& pi, const UnramifiedRep& pi1,
                               int order, int jobs) {
  if (big.rank() != pi.rank() + 1 || pi.rank() != pi1.rank() + 1)
    throw Error(ErrorCode::RankMismatch, "weights need ranks (n+1, n, n-1)");
  // conj W_pi is the spherical vector of the contragredient in the psi^-1 model.
  auto dual = contragredient(pi);
  auto z1 = local_zeta_unramified(big, dual, "X", order, jobs);
  auto z2 = local_zeta_unramified(pi, pi1, "Y", order, jobs);
  WeightResult out;
  out.kind = PlaceKind::Unramified;
  out.factors.push_back(multiply(z1.series, l_denominator(big, dual, "X", order), jobs));
  out.factors.push_back(multiply(z2.series, l_denominator(pi, pi1, "Y", order), jobs));
  out.lattice_points = z1.lattice_points + z2.lattice_points;
  if (out.factors[0].is_one() && out.factors[1].is_one()) out.exact = RationalFunction(LaurentPoly(1));
  return out;
}

WeightResult weight_at_l(const UnramifiedRep& pi, const UnramifiedRep& pi1, int m, const std::string& y, int order,
                         const LocalField& field, int jobs) {
  if (pi.rank() != pi1.rank() + 1) throw Error(ErrorCode::RankMismatch, "weights at l need ranks (n, n-1)");
  check_disjoint(pi, pi1, y);
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "level must be non-negative");
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
  int n = pi.rank();
  SphericalWhittaker w(pi, order), w1(pi1, order);
  auto denominator = l_denominator(pi, pi1, y, order);
  // 1/p^{(n-1)m} from the test vector at l.
  LaurentPoly prefactor = field.residue_power(-(n - 1) * m);

  WeightResult out;
  out.kind = PlaceKind::DividingL;
  auto at_least = [&](const TorusCocharacter& mu) { return mu.exps().back() >= m; };
  auto tail = lattice_sum(y, order, n - 1, jobs, out.lattice_points, at_least, [&](const TorusCocharacter& mu) {
    return prefactor * twisted_value(pi, mu, m, field) * w1.value(mu) * measure_factor(mu);
  });
  out.series = multiply(tail, denominator, jobs);

  long head_points = 0;
  auto head = lattice_sum(
      y, order, n - 1, jobs, head_points, [&](const TorusCocharacter& mu) { return !at_least(mu); },
      [&](const TorusCocharacter& mu) { return w.value(mu.extended(0)) * w1.value(mu) * measure_factor(mu); });
  out.complement_series = TruncatedSeries::one(y, order) - multiply(head, denominator, jobs);

  // Printed route: mu = a + (nu, ..., nu) with a_{n-1} = 0 and nu >= m, the
  // central part of GL(n-1) split off, and the printed character constant
  // in place of the computed one (and no test-vector prefactor).
  TruncatedSeries printed(y, order);
  for (int nu = m; (n - 1) * nu <= order; ++nu) {
    long unused = 0;
    auto inner = lattice_sum(
        y, order - (n - 1) * nu, n - 1, jobs, unused, [](const TorusCocharacter& a) { return a.exps().back() == 0; },
        [&](const TorusCocharacter& a) {
          auto mu = a.shifted(nu);
          return twisted_value_printed(pi, mu, m, field) * pi1.central_value().pow(nu) * w1.value(a) *
                 measure_factor(mu);
        },
        false);
    for (int k = 0; k <= inner.order(); ++k) printed.add_to(k + (n - 1) * nu, inner[k]);
  }
  out.printed_series = multiply(printed, denominator, jobs);

  LaurentPoly paper_constant = printed_character_constant(field, n, m);
  out.paper = PaperComparison{RationalFunction(paper_constant), RationalFunction(LaurentPoly(1)),
                              RationalFunction(LaurentPoly(1), paper_constant),
                              "printed character constant p^((n-2)m) without the 1/p^((n-1)m) test-vector prefactor, "
                              "against the orthogonality count p^((n-1)m) with the prefactor"};
  if (out.series->is_one()) out.exact = RationalFunction(LaurentPoly(1));
  return out;
}

std::optional<std::string> weight_at_l_rationality(const WeightResult& w, int n, int m) {
  if (!w.series) return std::string("no series to check");
  for (int k = n * m + 1; k <= w.series->order(); ++k)
    if (!(*w.series)[k].is_zero())
      return "degree " + std::to_string(k) + " > " + std::to_string(n * m) + " has coefficient " +
             (*w.series)[k].to_string();
  return std::nullopt;
}

WeightResult weight_at_q_structural(int n0, int m, int n, const LocalField& field) {
  if (n0 < 0 || m < 0) throw Error(ErrorCode::InvalidArgument, "conductor and level must be non-negative");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "rank must be at least 2");
  WeightResult out;
  out.kind = PlaceKind::DividingQ;
  for (int a1 = 0; a1 <= m; ++a1) {
    int a2 = m - a1;
    for (int j = 0; j <= a2 - n0; ++j) out.index_set.push_back({a1, a2, j});
  }
  out.vanishes = out.index_set.empty();
  if (out.vanishes) {
    out.exact = RationalFunction(LaurentPoly(0));
  } else if (n0 == m) {
    LaurentPoly index = field.p() ? LaurentPoly(Rational(congruence_index(n, *field.p(), m)))
                                  : congruence_index_symbolic(n, m);
    RationalFunction value(LaurentPoly(1), index);
    LaurentPoly paper = field.residue_power(-(n - 1) * m);
    out.exact = value;
    out.paper = PaperComparison{RationalFunction(paper), value, value / RationalFunction(paper),
                                "printed volume p^(-(n-1)m) against the exact 1/[K : K_0(p^m)]"};
  }
  return out;
}

}  // namespace whitlocal
