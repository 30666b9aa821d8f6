#include "whitlocal/localrep.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <thread>

#include "whitlocal/error.hpp"
#include "whitlocal/symfunc.hpp"

namespace whitlocal {

bool is_prime_power(long p) {
  if (p < 2) return false;
  long f = 2;
  while (f * f <= p && p % f != 0) ++f;
  if (p % f != 0) return true;  // p itself is prime
  while (p % f == 0) p /= f;
  return p == 1;
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

void check_conductor(int conductor) {
  if (conductor < 0) throw Error(ErrorCode::InvalidArgument, "conductor must be non-negative");
}

}  // namespace

LocalField LocalField::symbolic(int conductor) {
  check_conductor(conductor);
  LocalField f;
  f.conductor_ = conductor;
  return f;
}

LocalField LocalField::numeric(long p, int conductor) {
  check_conductor(conductor);
  if (!is_prime_power(p))
    throw Error(ErrorCode::InvalidArgument, "residue cardinality " + std::to_string(p) + " is not a prime power");
  LocalField f;
  f.p_ = p;
  f.conductor_ = conductor;
  return f;
}

LaurentPoly LocalField::residue() const {
  if (p_) return LaurentPoly(*p_);
  return LaurentPoly::variable(kResidueVariable);
}

LaurentPoly LocalField::residue_power(int k) const {
  if (!p_) return LaurentPoly::variable(kResidueVariable, k);
  Rational r;
  mpz_class base(*p_), pw;
  mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::abs(k)));
  r = k >= 0 ? Rational(pw) : Rational(1, 1) / Rational(pw);
  return LaurentPoly(r);
}

std::string LocalField::to_string() const {
  std::string out = p_ ? "p=" + std::to_string(*p_) : std::string("p=q");
  if (conductor_ != 0) out += ",d=" + std::to_string(conductor_);
  return out;
}

UnramifiedRep::UnramifiedRep(std::vector<LaurentPoly> satake, bool trivial_central)
    : satake_(std::move(satake)), trivial_central_(trivial_central) {
  if (satake_.empty()) throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
  for (const auto& a : satake_) {
    if (!a.is_zero() && !a.single_term())
      throw Error(ErrorCode::InvalidArgument, "Satake parameter " + a.to_string() + " is not a single term");
    if (a.mentions(residue_variable()))
      throw Error(ErrorCode::SymbolCollision, "Satake parameters may not use the residue symbol q");
  }
  if (trivial_central_ && is_numeric() && central_value() != LaurentPoly(1))
    throw Error(ErrorCode::InvalidArgument,
                "trivial central character needs product 1, got " + central_value().to_string());
}

UnramifiedRep UnramifiedRep::symbolic(const std::string& prefix, int rank, bool trivial_central) {
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
  return UnramifiedRep(symbol_list(prefix, rank), trivial_central);
}

UnramifiedRep UnramifiedRep::numeric(const std::vector<Rational>& satake, bool trivial_central) {
  std::vector<LaurentPoly> values(satake.begin(), satake.end());
  return UnramifiedRep(std::move(values), trivial_central);
}

bool UnramifiedRep::is_numeric() const {
  return std::all_of(satake_.begin(), satake_.end(), [](const LaurentPoly& a) { return a.constant_value().has_value(); });
}

LaurentPoly UnramifiedRep::central_value() const {
  LaurentPoly out(1);
  for (const auto& a : satake_) out *= a;
  return out;
}

std::set<std::string> UnramifiedRep::symbols() const {
  std::set<std::string> out;
  for (const auto& a : satake_) {
    auto v = a.variables();
    out.insert(v.begin(), v.end());
  }
  return out;
}

LaurentPoly UnramifiedRep::apply_trivial_central(const LaurentPoly& expr) const {
  const auto& last = satake_.back();
  if (last.constant_value()) return expr;
  auto t = last.single_term();
  auto entries = t->second.entries();
  if (entries.size() != 1 || std::abs(entries[0].second) != 2)
    throw Error(ErrorCode::InvalidArgument, "last Satake parameter must be a plain symbol or its inverse");
  LaurentPoly rest(t->first);
  for (std::size_t i = 0; i + 1 < satake_.size(); ++i) {
    if (satake_[i].is_zero()) throw Error(ErrorCode::ZeroSatakeParameter, "cannot impose a trivial central character");
    rest *= satake_[i];
  }
  // c * x^e * rest' = 1, so x = (c * rest')^(-e).
  int e = entries[0].second / 2;
  return expr.substitute(variable_name(entries[0].first), rest.pow(-e));
}

nlohmann::json UnramifiedRep::to_json() const {
  nlohmann::json satake = nlohmann::json::array();
  for (const auto& a : satake_) satake.push_back(a.to_string());
  return {{"rank", rank()}, {"satake", satake}, {"trivialCentral", trivial_central_}};
}

UnramifiedRep UnramifiedRep::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("satake") || !j["satake"].is_array())
    throw Error(ErrorCode::ParseError, "representation JSON needs a 'satake' array");
  std::vector<LaurentPoly> satake;
  for (const auto& s : j["satake"]) {
    if (!s.is_string()) throw Error(ErrorCode::ParseError, "Satake parameters must be strings");
    satake.push_back(LaurentPoly::parse(s.get<std::string>()));
  }
  if (j.contains("rank") && (!j["rank"].is_number_integer() || j["rank"].get<long>() != static_cast<long>(satake.size())))
    throw Error(ErrorCode::RankMismatch, "'rank' disagrees with the number of Satake parameters");
  bool trivial = j.contains("trivialCentral") && j["trivialCentral"].get<bool>();
  return UnramifiedRep(std::move(satake), trivial);
}

LaurentPoly hecke_eigenvalue(const UnramifiedRep& rep, int k, HeckeNormalization norm) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "Hecke index must be non-negative");
  LaurentPoly h = complete_homogeneous(k, rep.satake());
  if (norm == HeckeNormalization::Classical)
    h *= LaurentPoly::variable(kResidueVariable, Rational(k * (rep.rank() - 1), 2));
  return h;
}

UnramifiedRep contragredient(const UnramifiedRep& rep) {
  std::vector<LaurentPoly> inv;
  inv.reserve(rep.satake().size());
  for (auto it = rep.satake().rbegin(); it != rep.satake().rend(); ++it) {
    if (it->is_zero()) throw Error(ErrorCode::ZeroSatakeParameter, "zero Satake parameter has no inverse");
    inv.push_back(it->inverse());
  }
  return UnramifiedRep(std::move(inv), rep.trivial_central());
}

namespace {

void check_index_args(int n, int m) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "rank must be at least 2");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "level must be non-negative");
}

BigInt ipow(long base, long exp) {
  BigInt out;
  BigInt b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

BigInt congruence_index(int n, long p, int m) {
  check_index_args(n, m);
  if (!is_prime_power(p)) throw Error(ErrorCode::InvalidArgument, "p must be a prime power");
  if (m == 0) return 1;
  BigInt geometric = (ipow(p, n) - 1) / (p - 1);
  return ipow(p, static_cast<long>(n - 1) * (m - 1)) * geometric;
}

LaurentPoly congruence_index_symbolic(int n, int m) {
  check_index_args(n, m);
  if (m == 0) return LaurentPoly(1);
  LaurentPoly geometric;
  for (int i = 0; i < n; ++i) geometric += LaurentPoly::variable(kResidueVariable, i);
  return LaurentPoly::variable(kResidueVariable, (n - 1) * (m - 1)) * geometric;
}

namespace {

// Determinant modulo `mod` by cofactor expansion along the first row; n <= 4
// under the enumeration bound, so this stays cheap.
long det_mod(const std::vector<long>& a, int n, long mod, std::vector<int>& cols, int row) {
  if (row == n) return 1;
  long total = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    int c = cols[k];
    long entry = a[static_cast<std::size_t>(row * n + c)];
    if (entry != 0) {
      cols.erase(cols.begin() + static_cast<long>(k));
      long minor = det_mod(a, n, mod, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      total = (total + sign * (entry * minor % mod)) % mod;
    }
    sign = -sign;
  }
  return (total + mod) % mod;
}

struct Counts {
  BigInt group = 0;
  BigInt subgroup = 0;
};

Counts count_range(int n, long p, long mod, std::uint64_t begin, std::uint64_t end) {
  std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<long> a(cells);
  std::vector<int> cols(static_cast<std::size_t>(n));
  unsigned long group = 0, subgroup = 0;
  for (std::uint64_t code = begin; code < end; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < cells; ++i) {
      a[i] = static_cast<long>(c % static_cast<std::uint64_t>(mod));
      c /= static_cast<std::uint64_t>(mod);
    }
    for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i;
    // A matrix over Z/p^m is invertible iff its determinant is a unit, i.e. prime to p.
    if (det_mod(a, n, mod, cols, 0) % p == 0) continue;
    ++group;
    bool in_sub = true;
    for (int i = 0; i + 1 < n && in_sub; ++i) in_sub = a[static_cast<std::size_t>((n - 1) * n + i)] == 0;
    if (in_sub) ++subgroup;
  }
  return {BigInt(group), BigInt(subgroup)};
}

}  // namespace

BigInt congruence_index_bruteforce(int n, long p, int m, int jobs) {
  check_index_args(n, m);
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "the enumeration needs a prime p");
  if (m == 0) return 1;
  BigInt space = ipow(p, static_cast<long>(m) * n * n);
  if (space > BigInt(1L << 24))
    throw Error(ErrorCode::EnumerationTooLarge,
                "p^(m n^2) = " + whitlocal::to_string(space) + " exceeds the bound 2^24");
  long mod = ipow(p, m).get_si();
  std::uint64_t total = space.get_ui();
  jobs = std::max(1, jobs);
  std::vector<Counts> parts(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(jobs);
    std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(jobs);
    if (w + 1 == jobs) {
      parts[static_cast<std::size_t>(w)] = count_range(n, p, mod, lo, hi);
    } else {
      workers.emplace_back([&, w, lo, hi] { parts[static_cast<std::size_t>(w)] = count_range(n, p, mod, lo, hi); });
    }
  }
  for (auto& t : workers) t.join();
  Counts sum;
  for (const auto& c : parts) {
    sum.group += c.group;
    sum.subgroup += c.subgroup;
  }
  if (sum.subgroup == 0 || sum.group % sum.subgroup != 0)
    throw Error(ErrorCode::InvalidArgument, "coset count is not an integer");
  return sum.group / sum.subgroup;
}

BigInt congruence_index_by_cosets(int n, long p, int m) {
  check_index_args(n, m);
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "the enumeration needs a prime p");
  if (m == 0) return 1;
  BigInt space = ipow(p, static_cast<long>(m) * n);
  if (space > BigInt(1L << 24))
    throw Error(ErrorCode::EnumerationTooLarge,
                "p^(m n) = " + whitlocal::to_string(space) + " exceeds the bound 2^24");
  long mod = ipow(p, m).get_si();
  std::uint64_t total = space.get_ui();
  std::vector<long> units;
  for (long u = 1; u < mod; ++u)
    if (u % p != 0) units.push_back(u);
  auto encode = [&](const std::vector<long>& row) {
    std::uint64_t code = 0;
    for (long x : row) code = code * static_cast<std::uint64_t>(mod) + static_cast<std::uint64_t>(x);
    return code;
  };
  std::set<std::uint64_t> reps;
  std::vector<long> row(static_cast<std::size_t>(n)), scaled(row.size());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    bool primitive = false;
    for (int i = n - 1; i >= 0; --i) {
      row[static_cast<std::size_t>(i)] = static_cast<long>(c % static_cast<std::uint64_t>(mod));
      c /= static_cast<std::uint64_t>(mod);
      if (row[static_cast<std::size_t>(i)] % p != 0) primitive = true;
    }
    if (!primitive) continue;
    std::uint64_t best = code;
    for (long u : units) {
      for (std::size_t i = 0; i < row.size(); ++i) scaled[i] = row[i] * u % mod;
      best = std::min(best, encode(scaled));
    }
    reps.insert(best);
  }
  return BigInt(static_cast<unsigned long>(reps.size()));
}

LaurentPoly character_sum(const LocalField& field, int m, const std::vector<int>& valuations) {
  if (field.conductor() != 0)
    throw Error(ErrorCode::UnsupportedConductor, "character sums need an unramified additive character");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "level must be non-negative");
  // Each coordinate contributes p^m when beta -> psi(beta h) is trivial on
  // m^-m / o, which happens iff v(h) >= m, and 0 otherwise.
  for (int v : valuations)
    if (v < m) return LaurentPoly();
  return field.residue_power(static_cast<int>(valuations.size()) * m);
}

std::complex<double> character_sum_numeric(long p, int m, const std::vector<int>& valuations) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "the numeric sum needs a prime p");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "level must be non-negative");
  BigInt space = ipow(p, static_cast<long>(m) * static_cast<long>(valuations.size()));
  if (space > BigInt(1L << 24)) throw Error(ErrorCode::EnumerationTooLarge, "too many terms in the numeric sum");
  long mod = ipow(p, m).get_si();
  std::vector<long> h;
  for (int v : valuations) {
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "valuations must be non-negative");
    long x = 1;
    for (int k = 0; k < v && x != 0; ++k) x = x * p % mod;
    h.push_back(x % mod);
  }
  std::vector<long> b(h.size(), 0);
  std::complex<double> total = 0;
  for (;;) {
    long phase = 0;
    for (std::size_t i = 0; i < h.size(); ++i) phase = (phase + b[i] * h[i]) % mod;
    total += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(mod));
    std::size_t i = 0;
    while (i < b.size() && ++b[i] == mod) b[i++] = 0;
    if (i == b.size()) break;
  }
  return total;
}

LaurentPoly printed_character_constant(const LocalField& field, int n, int m) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "rank must be at least 2");
  return field.residue_power((n - 2) * m);
}

}  // namespace whitlocal
