#include "whitlocal/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>

#include "whitlocal/error.hpp"

namespace whitlocal {

namespace {

struct VariableRegistry {
  std::shared_mutex mutex;
  std::deque<std::string> names;  // deque: references stay valid on growth
  std::unordered_map<std::string, VarId> ids;
};

VariableRegistry& registry() {
  static VariableRegistry instance;
  return instance;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

std::int32_t checked_twice(const Rational& exponent, std::string_view name) {
  Rational twice = exponent * 2;
  if (twice.get_den() != 1)
    throw Error(ErrorCode::InvalidArgument,
                "exponent " + to_string(exponent) + " of '" + std::string(name) + "' is not in (1/2)Z");
  if (!twice.get_num().fits_sint_p()) throw Error(ErrorCode::InvalidArgument, "exponent out of range");
  return static_cast<std::int32_t>(twice.get_num().get_si());
}

void check_half(VarId id, std::int32_t twice) {
  if ((twice & 1) != 0 && id != residue_variable())
    throw Error(ErrorCode::InvalidArgument,
                "half-integer exponent on '" + variable_name(id) + "'; only " + std::string(kResidueVariable) +
                    " may carry one");
}

}  // namespace

VarId intern_variable(std::string_view name) {
  if (!valid_name(name)) throw Error(ErrorCode::InvalidArgument, "bad variable name '" + std::string(name) + "'");
  auto& reg = registry();
  std::string key(name);
  {
    std::shared_lock lock(reg.mutex);
    if (auto it = reg.ids.find(key); it != reg.ids.end()) return it->second;
  }
  std::unique_lock lock(reg.mutex);
  if (auto it = reg.ids.find(key); it != reg.ids.end()) return it->second;
  auto id = static_cast<VarId>(reg.names.size());
  reg.names.push_back(key);
  reg.ids.emplace(std::move(key), id);
  return id;
}

const std::string& variable_name(VarId id) {
  auto& reg = registry();
  std::shared_lock lock(reg.mutex);
  if (id >= reg.names.size()) throw Error(ErrorCode::InvalidArgument, "unknown variable id");
  return reg.names[id];
}

VarId residue_variable() {
  static const VarId id = intern_variable(kResidueVariable);
  return id;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::string_view name, const Rational& exponent) {
  VarId id = intern_variable(name);
  return from_twice(id, checked_twice(exponent, name));
}

Monomial Monomial::from_twice(VarId id, std::int32_t twice_exponent) {
  if (twice_exponent == 0) return {};
  check_half(id, twice_exponent);
  return Monomial({{id, twice_exponent}});
}

std::int32_t Monomial::twice_exponent(VarId id) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const Entry& e, VarId v) { return e.first < v; });
  return (it != entries_.end() && it->first == id) ? it->second : 0;
}

Rational Monomial::exponent(VarId id) const {
  Rational r(twice_exponent(id), 2);
  r.canonicalize();
  return r;
}

Monomial Monomial::inverse() const {
  std::vector<Entry> out(entries_);
  for (auto& e : out) e.second = -e.second;
  return Monomial(std::move(out));
}

Monomial Monomial::pow(std::int32_t k) const {
  if (k == 0) return {};
  std::vector<Entry> out(entries_);
  for (auto& e : out) {
    std::int64_t v = std::int64_t{e.second} * k;
    if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
      throw Error(ErrorCode::InvalidArgument, "exponent overflow");
    e.second = static_cast<std::int32_t>(v);
  }
  return Monomial(std::move(out));
}

Monomial Monomial::without(VarId id) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_)
    if (e.first != id) out.push_back(e);
  return Monomial(std::move(out));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.push_back(*b++);
    } else {
      std::int32_t sum = a->second + b->second;
      if (sum != 0) out.emplace_back(a->first, sum);
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, entries_.end());
  out.insert(out.end(), b, other.entries_.end());
  return Monomial(std::move(out));
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [id, e] : entries_) {
    std::size_t x = (std::size_t{id} << 32) ^ static_cast<std::uint32_t>(e);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::vector<std::pair<std::string_view, std::int32_t>> by_name(const Monomial& m) {
  std::vector<std::pair<std::string_view, std::int32_t>> out;
  out.reserve(m.entries().size());
  for (const auto& [id, e] : m.entries()) out.emplace_back(variable_name(id), e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int Monomial::compare_canonical(const Monomial& a, const Monomial& b) {
  auto x = by_name(a);
  auto y = by_name(b);
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = x[i].first.compare(y[i].first); c != 0) return c < 0 ? -1 : 1;
    if (x[i].second != y[i].second) return x[i].second < y[i].second ? -1 : 1;
  }
  if (x.size() == y.size()) return 0;
  return x.size() < y.size() ? -1 : 1;
}

int Monomial::compare_lex(const Monomial& a, const Monomial& b) {
  auto x = a.entries_.begin();
  auto y = b.entries_.begin();
  while (x != a.entries_.end() || y != b.entries_.end()) {
    VarId vx = x != a.entries_.end() ? x->first : std::numeric_limits<VarId>::max();
    VarId vy = y != b.entries_.end() ? y->first : std::numeric_limits<VarId>::max();
    VarId v = std::min(vx, vy);
    std::int32_t ex = vx == v ? x->second : 0;
    std::int32_t ey = vy == v ? y->second : 0;
    if (ex != ey) return ex < ey ? -1 : 1;
    if (vx == v) ++x;
    if (vy == v) ++y;
  }
  return 0;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

LaurentPoly LaurentPoly::variable(std::string_view name, const Rational& exponent) {
  return term(1, Monomial::variable(name, exponent));
}

LaurentPoly LaurentPoly::term(const Rational& coeff, const Monomial& monomial) {
  LaurentPoly p;
  if (sgn(coeff) != 0) p.terms_.emplace(monomial, coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  auto c = constant_value();
  return c && *c == 1;
}

std::optional<Rational> LaurentPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<Rational, Monomial>> LaurentPoly::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  return std::make_pair(c, m);
}

void LaurentPoly::add_term(const Rational& coeff, const Monomial& m) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (this == &other) {
    for (auto& [m, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (this == &other) {
    terms_.clear();
    return *this;
  }
  for (const auto& [m, c] : other.terms_) add_term(-c, m);
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = terms_.try_emplace(ma * mb, prod);
      if (!inserted) {
        it->second += prod;
        if (sgn(it->second) == 0) terms_.erase(it);
      }
    }
  }
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  out.add_product(a, b);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero polynomial");
  auto t = single_term();
  if (!t) throw Error(ErrorCode::InexactDivision, "inverse of non-monomial " + to_string());
  Rational inv = 1 / t->first;
  return term(inv, t->second.inverse());
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (auto t = single_term()) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= t->first;
    return term(r, t->second.pow(k));
  }
  LaurentPoly result(1);
  LaurentPoly base(*this);
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool LaurentPoly::mentions(VarId id) const {
  return std::any_of(terms_.begin(), terms_.end(), [id](const auto& kv) { return kv.first.twice_exponent(id) != 0; });
}

std::set<std::string> LaurentPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [id, e] : m.entries()) out.insert(variable_name(id));
  return out;
}

std::map<std::int32_t, LaurentPoly> LaurentPoly::split_by(VarId id) const {
  std::map<std::int32_t, LaurentPoly> out;
  for (const auto& [m, c] : terms_) out[m.twice_exponent(id)].terms_.emplace(m.without(id), c);
  return out;
}

LaurentPoly LaurentPoly::substitute(std::string_view name, const LaurentPoly& value) const {
  VarId id = intern_variable(name);
  LaurentPoly out;
  std::map<std::int32_t, LaurentPoly> powers;
  for (const auto& [twice, rest] : split_by(id)) {
    if (twice % 2 != 0)
      throw Error(ErrorCode::InvalidArgument, "cannot substitute into half exponent of " + std::string(name));
    auto [it, inserted] = powers.try_emplace(twice, LaurentPoly{});
    if (inserted) it->second = value.pow(twice / 2);
    out.add_product(rest, it->second);
  }
  return out;
}

std::vector<std::pair<Monomial, Rational>> LaurentPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return Monomial::compare_canonical(a.first, b.first) > 0; });
  return out;
}

// ---------------------------------------------------------------- evaluation

Rational LaurentPoly::evaluate(const std::map<std::string, Rational>& bindings) const {
  std::unordered_map<VarId, Rational> values;
  std::unordered_map<VarId, Rational> roots;
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [id, twice] : m.entries()) {
      auto it = values.find(id);
      if (it == values.end()) {
        const auto& name = variable_name(id);
        auto b = bindings.find(name);
        if (b == bindings.end()) throw Error(ErrorCode::UnboundVariable, "no binding for '" + name + "'");
        it = values.emplace(id, b->second).first;
      }
      const Rational& x = it->second;
      if (twice < 0 && sgn(x) == 0)
        throw Error(ErrorCode::DivisionByZero, "negative power of '" + variable_name(id) + "' bound to 0");
      Rational base = x;
      int k = twice;
      if (twice % 2 != 0) {
        if (sgn(x) < 0)
          throw Error(ErrorCode::NegativeUnderHalfExponent,
                      "half exponent of '" + variable_name(id) + "' bound to " + whitlocal::to_string(x));
        auto r = roots.find(id);
        if (r == roots.end()) {
          Rational root;
          if (!exact_sqrt(x, root))
            throw Error(ErrorCode::InvalidArgument,
                        "half exponent of '" + variable_name(id) + "' needs a rational square, got " + whitlocal::to_string(x));
          r = roots.emplace(id, root).first;
        }
        base = r->second;
      } else {
        k = twice / 2;
      }
      if (k < 0) {
        base = 1 / base;
        k = -k;
      }
      for (int i = 0; i < k; ++i) v *= base;
    }
    total += v;
  }
  return total;
}

std::complex<double> LaurentPoly::evaluate(const std::map<std::string, std::complex<double>>& bindings) const {
  std::complex<double> total = 0.0;
  for (const auto& [m, c] : sorted_terms()) {
    std::complex<double> v = c.get_d();
    for (const auto& [id, twice] : m.entries()) {
      const auto& name = variable_name(id);
      auto b = bindings.find(name);
      if (b == bindings.end()) throw Error(ErrorCode::UnboundVariable, "no binding for '" + name + "'");
      std::complex<double> x = b->second;
      if (twice < 0 && x == std::complex<double>(0.0, 0.0))
        throw Error(ErrorCode::DivisionByZero, "negative power of '" + name + "' bound to 0");
      int k = twice;
      if (twice % 2 != 0) {
        x = std::sqrt(x);
      } else {
        k = twice / 2;
      }
      if (k < 0) {
        x = 1.0 / x;
        k = -k;
      }
      std::complex<double> p = 1.0;
      for (int i = 0; i < k; ++i) p *= x;
      v *= p;
    }
    total += v;
  }
  return total;
}

// ---------------------------------------------------------------- division

Monomial leading_monomial(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::DivisionByZero, "leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (best == nullptr || Monomial::compare_lex(m, *best) > 0) best = &m;
  return *best;
}

namespace {

struct ExponentRange {
  std::int32_t lo = 0;
  std::int32_t hi = 0;
};

std::unordered_map<VarId, ExponentRange> exponent_ranges(const LaurentPoly& p) {
  std::unordered_map<VarId, ExponentRange> out;
  for (const auto& [m, c] : p.terms())
    for (const auto& [id, e] : m.entries()) out.try_emplace(id);
  for (auto& [id, r] : out) {
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
      std::int32_t e = m.twice_exponent(id);
      if (first || e < r.lo) r.lo = e;
      if (first || e > r.hi) r.hi = e;
      first = false;
    }
  }
  return out;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero polynomial");
  if (a.is_zero()) return {};
  // An exact quotient has every exponent inside the box determined by the
  // exponent ranges of a and b; leaving it proves inexactness and bounds the loop.
  auto ra = exponent_ranges(a);
  auto rb = exponent_ranges(b);
  auto inside_box = [&](const Monomial& m) {
    std::set<VarId> ids;
    for (const auto& [id, r] : ra) ids.insert(id);
    for (const auto& [id, r] : rb) ids.insert(id);
    for (const auto& [id, e] : m.entries()) ids.insert(id);
    for (VarId id : ids) {
      ExponentRange x = ra.count(id) ? ra.at(id) : ExponentRange{};
      ExponentRange y = rb.count(id) ? rb.at(id) : ExponentRange{};
      std::int32_t e = m.twice_exponent(id);
      if (e < x.lo - y.lo || e > x.hi - y.hi) return false;
    }
    return true;
  };

  Monomial lead_b = leading_monomial(b);
  Rational lead_cb = b.coefficient(lead_b);
  LaurentPoly remainder = a;
  LaurentPoly quotient;
  while (!remainder.is_zero()) {
    Monomial lead_r = leading_monomial(remainder);
    Monomial t = lead_r * lead_b.inverse();
    if (!inside_box(t)) throw Error(ErrorCode::InexactDivision, b.to_string() + " does not divide " + a.to_string());
    Rational c = remainder.coefficient(lead_r) / lead_cb;
    LaurentPoly step = LaurentPoly::term(c, t);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace whitlocal
