#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "whitlocal/rational.hpp"

namespace whitlocal {

using VarId = std::uint32_t;

/// The residue cardinality. It is the only variable allowed to carry
/// half-integer exponents.
inline constexpr std::string_view kResidueVariable = "q";

/// Interns a variable name. Names must match [A-Za-z_][A-Za-z0-9_]*.
/// Thread safe; ids are stable for the life of the process.
VarId intern_variable(std::string_view name);
const std::string& variable_name(VarId id);
VarId residue_variable();

/// A product of variables raised to exponents in (1/2)Z.
///
/// Exponents are stored doubled. Entries are kept sorted by VarId and never
/// hold a zero exponent, so structural equality is mathematical equality.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::int32_t>;

  Monomial() = default;

  static Monomial variable(std::string_view name, const Rational& exponent = 1);
  static Monomial from_twice(VarId id, std::int32_t twice_exponent);

  std::span<const Entry> entries() const noexcept { return entries_; }
  bool is_one() const noexcept { return entries_.empty(); }

  std::int32_t twice_exponent(VarId id) const noexcept;
  Rational exponent(VarId id) const;

  Monomial inverse() const;
  Monomial pow(std::int32_t k) const;
  Monomial without(VarId id) const;

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const noexcept { return entries_ == other.entries_; }

  std::size_t hash() const noexcept;

  /// Order used for serialization: variables compared by name, then exponent.
  /// Returns <0, 0, >0.
  static int compare_canonical(const Monomial& a, const Monomial& b);

  /// A multiplicative total order on VarId exponent vectors (lex, larger first).
  static int compare_lex(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  explicit Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  std::vector<Entry> entries_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Exact multivariate Laurent polynomial over Q.
///
/// Values are immutable once handed out; every operation returns a fresh value
/// in canonical form (no zero coefficients stored).
class LaurentPoly {
 public:
  using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}   // NOLINT

  static LaurentPoly variable(std::string_view name, const Rational& exponent = 1);
  static LaurentPoly term(const Rational& coeff, const Monomial& monomial);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  std::optional<Rational> constant_value() const;
  Rational coefficient(const Monomial& m) const;

  /// The single (coefficient, monomial) pair when the polynomial is a unit of
  /// the Laurent ring, i.e. a nonzero constant times a monomial.
  std::optional<std::pair<Rational, Monomial>> single_term() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Adds coeff * m in place.
  void add_term(const Rational& coeff, const Monomial& m);
  /// this += a * b, without materializing a * b.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  /// Negative k requires a unit (single term); throws DivisionByZero otherwise.
  LaurentPoly pow(int k) const;
  /// Inverse of a unit. Throws DivisionByZero for zero, InexactDivision for
  /// anything with more than one term.
  LaurentPoly inverse() const;

  bool mentions(VarId id) const;
  std::set<std::string> variables() const;

  /// Groups terms by the (doubled) exponent of one variable. The keys of the
  /// result never mention that variable.
  std::map<std::int32_t, LaurentPoly> split_by(VarId id) const;

  /// Replaces a variable by a polynomial. Exponents of that variable must be
  /// integral; negative exponents need a unit replacement.
  LaurentPoly substitute(std::string_view name, const LaurentPoly& value) const;

  /// Terms in canonical order (descending), the order used for text output.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

  /// Exact evaluation. Half exponents need a rational square as binding.
  Rational evaluate(const std::map<std::string, Rational>& bindings) const;
  std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& bindings) const;

 private:
  TermMap terms_;
};

/// Lexicographic leading monomial (compare_lex order); the polynomial must be nonzero.
Monomial leading_monomial(const LaurentPoly& p);

/// Exact quotient a / b; throws InexactDivision when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace whitlocal
