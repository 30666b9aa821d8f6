#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "whitlocal/localrep.hpp"
#include "whitlocal/rational_function.hpp"
#include "whitlocal/report.hpp"
#include "whitlocal/series.hpp"

namespace whitlocal {

struct ZetaResult {
  TruncatedSeries series;
  std::optional<RationalFunction> closed_form;
  long lattice_points = 0;

  /// series_equal(series, series_expand(closed_form)); true without a closed form.
  bool consistent() const;
  nlohmann::ordered_json to_json() const;
};

enum class PlaceKind { Unramified, DividingL, DividingQ };
const char* place_kind_name(PlaceKind k) noexcept;

/// A constant as printed in the published computation next to the one this
/// library derives; ratio = computed / paper.
struct PaperComparison {
  RationalFunction paper_constant;
  RationalFunction computed_constant;
  RationalFunction ratio;
  std::string note;

  nlohmann::ordered_json to_json() const;
};

struct WeightResult {
  PlaceKind kind = PlaceKind::Unramified;
  /// The weight as a series in the zeta variable (v | l).
  std::optional<TruncatedSeries> series;
  /// The weight when it is an exact closed value (unramified, v | q).
  std::optional<RationalFunction> exact;
  /// Unramified places: the two zeta/L ratios whose product is the weight.
  std::vector<TruncatedSeries> factors;
  /// v | l: the weight recomputed through 1 - L^-1 * (partial lattice sum),
  /// and through the nu-decomposition with the printed constant.
  std::optional<TruncatedSeries> complement_series;
  std::optional<TruncatedSeries> printed_series;
  /// v | q: the (a1, a2, j) index set and the vanishing verdict.
  std::vector<std::array<int, 3>> index_set;
  bool vanishes = false;
  std::optional<PaperComparison> paper;
  long lattice_points = 0;

  nlohmann::ordered_json to_json() const;
};

/// 1 / prod_{i, j} (1 - alpha_i beta_j x). SymbolCollision when either
/// parameter set uses the series variable. The sets may share symbols, as in
/// L(pi x dual pi).
RationalFunction local_l_factor(const UnramifiedRep& a, const UnramifiedRep& b, const std::string& x);

/// The Iwasawa-reduced lattice sum for GL(n+1) x GL(n) with spherical vectors:
/// sum over dominant mu (m_n >= 0, |mu| <= order) of
/// W_a(mu, 0) W_b(mu) q^{-|mu|(s - 1/2)} delta_{B_n}(mu)^-1 with x = q^-s.
/// The q-powers cancel (checked at every lattice point). SymbolCollision when
/// the parameter sets share a symbol. Lattice points are
/// grouped by |mu| and spread over `jobs` threads.
ZetaResult local_zeta_unramified(const UnramifiedRep& a, const UnramifiedRep& b, const std::string& x, int order,
                                 int jobs = 1);

/// Symbolic GL(n+1) x GL(n) run of local_zeta_unramified, checked against
/// the L-factor expansion.
SuiteReport verify_unramified_identity(int n, int order, int jobs = 1);

/// [Psi(s, W_Pi, conj W_pi) / L(s, Pi x dual pi)] [Psi(w, W_pi, W_pi1) / L(w, pi x pi1)]
/// for spherical vectors. Both factors are computed as series; the exact value
/// is set to 1 only when both are identically 1 to the given order.
WeightResult weight_unramified(const UnramifiedRep& big, const UnramifiedRep& pi, const UnramifiedRep& pi1,
                               int order, int jobs = 1);

/// The weight at v | l with level exponent m: the tail lattice sum over
/// mu_{n-1} >= m of W^{(m)}(mu) W_pi1(mu), including the 1/p^{(n-1)m}
/// prefactor of the test vector, divided by L(w, pi x pi1) in y = q^-w.
WeightResult weight_at_l(const UnramifiedRep& pi, const UnramifiedRep& pi1, int m, const std::string& y, int order,
                         const LocalField& field, int jobs = 1);

/// Coefficients of degree > n*m of the weight at l must vanish. Returns the
/// first nonvanishing degree as a witness.
std::optional<std::string> weight_at_l_rationality(const WeightResult& w, int n, int m);

/// Index set and surviving-term volume at v | q for conductor exponent n0,
/// level m and rank n.
WeightResult weight_at_q_structural(int n0, int m, int n, const LocalField& field);

}  // namespace whitlocal
