// One line per acceptance criterion. Exit status 0 iff every criterion passes
// within its time limit.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "whitlocal/localrep.hpp"
#include "whitlocal/reciprocity.hpp"
#include "whitlocal/suites.hpp"
#include "whitlocal/symfunc.hpp"

using namespace whitlocal;

namespace {

using Verdict = std::optional<std::string>;

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 for none
  std::function<Verdict()> body;
};

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

// First failing check of a suite, or nullopt. Only ids starting with one of
// the prefixes count (all ids for an empty list).
Verdict suite_verdict(const std::string& name, const std::vector<std::string>& prefixes = {},
                      SuiteOptions options = {}) {
  auto report = run_suite(name, options);
  std::size_t seen = 0;
  for (const auto& c : report.checks) {
    bool wanted = prefixes.empty();
    for (const auto& p : prefixes) wanted = wanted || c.id.rfind(p, 0) == 0;
    if (!wanted) continue;
    ++seen;
    if (c.status != Status::Pass)
      return name + "/" + c.id + " " + status_name(c.status) + ": " + c.witness.value_or("");
  }
  if (seen == 0) return name + ": no checks ran";
  return std::nullopt;
}

Verdict first_of(std::initializer_list<std::function<Verdict()>> parts) {
  for (const auto& part : parts)
    if (auto v = part()) return v;
  return std::nullopt;
}

Verdict involution() {
  for (int n = 2; n <= 10; ++n) {
    auto sym = ParamPair::symbolic(n);
    if (!(dual_params(dual_params(sym)) == sym)) return "dual is not an involution at n=" + std::to_string(n);
    ParamPair half{LaurentPoly(Rational(1, 2)), LaurentPoly(Rational(1, 2)), n};
    if (!(dual_params(half) == half)) return "(1/2,1/2) moves at n=" + std::to_string(n);
  }
  if (dual_params(ParamPair::symbolic(2)).s != P("1/2 + 1/2*w - 1/2*s")) return "n=2 form differs";
  ParamPair three{LaurentPoly(1), LaurentPoly(1), 3};
  if (!(dual_params(three) == ParamPair{LaurentPoly(Rational(2, 3)), LaurentPoly(Rational(4, 3)), 3}))
    return "n=3 at (1,1) is not (2/3,4/3)";
  return suite_verdict("involution");
}

Verdict exponent_identities() {
  LaurentPoly s = P("s"), w = P("w"), half(Rational(1, 2));
  for (int n = 2; n <= 10; ++n) {
    auto d = dual_params(ParamPair::symbolic(n));
    if (LaurentPoly(n) * (d.s - half) != LaurentPoly(n) * (half - s) + LaurentPoly(n - 1) * (s + w - LaurentPoly(1)))
      return "shift identity fails at n=" + std::to_string(n);
    if (d.s + d.w - LaurentPoly(1) != s + w - LaurentPoly(1)) return "sum identity fails at n=" + std::to_string(n);
  }
  return std::nullopt;
}

// Root-of-unity sums computed coordinate by coordinate: each factor is
// sum_{b mod p^m} exp(2 pi i b p^v / p^m).
std::complex<double> factored_sum(long p, int m, const std::vector<int>& vals) {
  long mod = 1;
  for (int k = 0; k < m; ++k) mod *= p;
  std::complex<double> total = 1;
  for (int v : vals) {
    long h = 1;
    for (int k = 0; k < v; ++k) h = h * p % mod;
    std::complex<double> factor = 0;
    for (long b = 0; b < mod; ++b) {
      double angle = 2 * std::numbers::pi * static_cast<double>(b * h % mod) / static_cast<double>(mod);
      factor += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    total *= factor;
  }
  return total;
}

Verdict character_sums() {
  for (long p : {2L, 3L, 5L}) {
    auto field = LocalField::numeric(p);
    for (int m = 0; m <= 2; ++m)
      for (int r = 1; r <= 3; ++r) {
        std::vector<int> vals(static_cast<std::size_t>(r), 0);
        for (;;) {
          std::complex<double> exact(character_sum(field, m, vals).constant_value()->get_d(), 0);
          if (std::abs(factored_sum(p, m, vals) - exact) > 1e-9 ||
              std::abs(character_sum_numeric(p, m, vals) - exact) > 1e-9) {
            std::string v;
            for (int x : vals) v += (v.empty() ? "" : ",") + std::to_string(x);
            return "p=" + std::to_string(p) + " m=" + std::to_string(m) + " valuations (" + v + ")";
          }
          std::size_t i = 0;
          while (i < vals.size() && ++vals[i] > 3) vals[i++] = 0;
          if (i == vals.size()) break;
        }
      }
  }
  return suite_verdict("charsum");
}

Verdict congruence_indices() {
  if (congruence_index(2, 2, 1) != 3 || congruence_index_bruteforce(2, 2, 1) != 3) return "index for n=2,p=2,m=1 is not 3";
  if (congruence_index(3, 2, 1) != 7 || congruence_index_bruteforce(3, 2, 1) != 7) return "index for n=3,p=2,m=1 is not 7";
  return suite_verdict("index");
}

std::string slurp(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Verdict determinism() {
  const std::string cli = WHITLOCAL_CLI_PATH;
  int s1 = 0, s8 = 0;
  auto one = slurp("'" + cli + "' verify --suite all --jobs 1", s1);
  auto eight = slurp("'" + cli + "' verify --suite all --jobs 8", s8);
  if (s1 != 0 || s8 != 0) return "verify exited with " + std::to_string(s1) + " / " + std::to_string(s8);
  if (one.empty()) return std::string("empty report");
  if (one != eight) return std::string("reports differ between --jobs 1 and --jobs 8");
  return std::nullopt;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "parameter involution, fixed central point, rank-two form", 1.0, involution},
      {2, "exponent identities of the dual parameters", 1.0,
       [] { return first_of({exponent_identities, [] { return suite_verdict("involution"); }}); }},
      {3, "Weyl swap conjugation, swap square, cusp factorization", 1.0, [] { return suite_verdict("weyl"); }},
      {4, "unramified lattice sum equals the L-factor expansion", 60.0,
       [] { return suite_verdict("unramified", {"gl2xgl1", "gl3xgl2", "gl4xgl3"}); }},
      {5, "Cauchy identity for (n,m) in {1,2,3}^2 at order 6", 0.0,
       [] {
         for (int n = 1; n <= 3; ++n)
           for (int m = 1; m <= 3; ++m)
             if (!cauchy_check(n, m, 6).passed()) return Verdict("n=" + std::to_string(n) + " m=" + std::to_string(m));
         return suite_verdict("cauchy");
       }},
      {6, "Jacobi-Trudi vs bialternant, dimension formula, Pieri rule", 0.0, [] { return suite_verdict("schur"); }},
      {7, "unramified weight is 1 for ranks (3,2,1), (4,3,2), (5,4,3)", 0.0,
       [] { return suite_verdict("weight-unramified", {"ranks=3,2,1", "ranks=4,3,2", "ranks=5,4,3"}); }},
      {8, "weight at l: level zero, two paths at n=2 m=1, rationality degree", 0.0,
       [] { return suite_verdict("weight-l"); }},
      {9, "weight at q: vanishing verdict and surviving term 1/index", 0.0, [] { return suite_verdict("weight-q"); }},
      {10, "congruence index closed form vs coset counting", 30.0, congruence_indices},
      {11, "character sums vs root-of-unity oracles to 1e-9", 0.0, character_sums},
      {12, "contragredient: matrix path equals parameter inversion", 0.0,
       [] { return suite_verdict("contragredient", {"rank=2", "rank=3", "rank=4"}); }},
      {13, "verify --suite all is byte-identical for --jobs 1 and --jobs 8", 0.0, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    try {
      verdict = c.body();
    } catch (const std::exception& e) {
      verdict = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!verdict && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", seconds, c.limit_seconds);
      verdict = std::string(buf);
    }
    std::printf("[%s] %2d %s (%.3f s)%s%s\n", verdict ? "FAIL" : "PASS", c.number, c.title.c_str(), seconds,
                verdict ? ": " : "", verdict ? verdict->c_str() : "");
    if (verdict) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
