#include "whitlocal/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>

#include "whitlocal/error.hpp"
#include "whitlocal/parallel.hpp"
#include "whitlocal/reciprocity.hpp"
#include "whitlocal/symfunc.hpp"
#include "whitlocal/whittaker.hpp"
#include "whitlocal/zeta.hpp"

namespace whitlocal {

namespace {

// A unit of work producing one or more checks.
using Task = std::function<std::vector<CheckResult>()>;

std::string fmt(const char* pattern, int a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

Task single(std::string id, std::string desc, std::function<std::optional<std::string>()> body) {
  return [id = std::move(id), desc = std::move(desc), body = std::move(body)] {
    return std::vector<CheckResult>{run_check(id, desc, body)};
  };
}

Task whole(std::function<SuiteReport()> make, std::string prefix = "") {
  return [make = std::move(make), prefix = std::move(prefix)] {
    SuiteReport r{"", {}};
    r.absorb(make(), prefix);
    return r.checks;
  };
}

LocalField field_of(const SuiteOptions& o) { return o.p ? LocalField::numeric(*o.p) : LocalField::symbolic(); }

std::vector<Task> involution_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (int n = 2; n <= o.n_max; ++n)
    tasks.push_back(single(fmt("n=%02d", n), "involution, exponent identities and the fixed central point",
                           [n, d = o.perturbation]() -> std::optional<std::string> {
                             auto r = verify_involution_and_exponents(n, d);
                             for (const auto& c : r.checks)
                               if (c.status != Status::Pass) return c.id + ": " + c.witness.value_or("");
                             return std::nullopt;
                           }));
  return tasks;
}

std::vector<Task> weyl_tasks(const SuiteOptions&) {
  std::vector<Task> tasks;
  for (int n = 2; n <= 6; ++n) tasks.push_back(whole([n] { return weyl_conjugation_identity(n); }));
  for (int n = 2; n <= 4; ++n) tasks.push_back(whole([n] { return cusp_invariance_factorization(n); }, "cusp"));
  return tasks;
}

std::vector<Task> unramified_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (int n = 1; n <= 3; ++n) {
    int order = n == 3 ? std::min(o.order, 5) : o.order;
    tasks.push_back(whole([n, order] { return verify_unramified_identity(n, order); }));
  }
  return tasks;
}

std::vector<Task> cauchy_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) tasks.push_back(whole([n, m, order = o.order] { return cauchy_check(n, m, order); }));
  return tasks;
}

std::vector<std::string> names_a(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

std::vector<Task> schur_tasks(const SuiteOptions&) {
  std::vector<Task> tasks;
  for (int n = 1; n <= 4; ++n) {
    tasks.push_back(single(fmt("jacobi-trudi/n=%d", n), "Jacobi-Trudi equals the bialternant for |lambda| <= 6",
                           [n]() -> std::optional<std::string> {
                             auto vars = names_a(n);
                             for (const auto& l : partitions_up_to(6, n))
                               if (!(schur(l, vars) == schur_bialternant_oracle(l, vars))) return l.to_string();
                             return std::nullopt;
                           }));
    tasks.push_back(single(fmt("dimension/n=%d", n), "s_lambda(1, ..., 1) is the Weyl dimension for |lambda| <= 6",
                           [n]() -> std::optional<std::string> {
                             std::map<std::string, Rational> ones;
                             for (const auto& v : names_a(n)) ones[v] = 1;
                             for (const auto& l : partitions_up_to(6, n)) {
                               auto parts = l.padded(n);
                               Rational dim = 1;
                               for (int i = 0; i < n; ++i)
                                 for (int j = i + 1; j < n; ++j)
                                   dim *= Rational(parts[static_cast<std::size_t>(i)] -
                                                       parts[static_cast<std::size_t>(j)] + j - i,
                                                   j - i);
                               dim.canonicalize();
                               if (schur(l, names_a(n)).evaluate(ones) != dim) return l.to_string();
                             }
                             return std::nullopt;
                           }));
    tasks.push_back(single(fmt("pieri/n=%d", n), "h_1 s_lambda is the sum over one-box extensions for |lambda| <= 4",
                           [n]() -> std::optional<std::string> {
                             auto vars = symbol_list("a", n);
                             auto h1 = complete_homogeneous(1, vars);
                             for (const auto& l : partitions_up_to(4, n)) {
                               LaurentPoly rhs;
                               auto base = l.padded(n);
                               for (int row = 0; row < n; ++row) {
                                 auto next = base;
                                 ++next[static_cast<std::size_t>(row)];
                                 if (std::is_sorted(next.rbegin(), next.rend())) rhs += schur(Partition(next), vars);
                               }
                               if (!(h1 * schur(l, vars) == rhs)) return l.to_string();
                             }
                             return std::nullopt;
                           }));
  }
  return tasks;
}

std::vector<Task> weight_unramified_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (int n = 2; n <= 4; ++n) {
    std::string id = "ranks=" + std::to_string(n + 1) + "," + std::to_string(n) + "," + std::to_string(n - 1);
    tasks.push_back(single(id, "H_v = 1 for symbolic spherical data to order " + std::to_string(o.order),
                           [n, order = o.order]() -> std::optional<std::string> {
                             auto w = weight_unramified(UnramifiedRep::symbolic("A", n + 1),
                                                        UnramifiedRep::symbolic("b", n),
                                                        UnramifiedRep::symbolic("c", n - 1), order);
                             if (w.exact) return std::nullopt;
                             for (const auto& f : w.factors)
                               for (int k = 1; k <= f.order(); ++k)
                                 if (!f[k].is_zero()) return f.var() + "^" + std::to_string(k) + ": " + f[k].to_string();
                             return std::string("weight is not 1");
                           }));
  }
  tasks.push_back(single("numeric", "H_v = 1 for rational Satake parameters with trivial central character",
                         [order = o.order]() -> std::optional<std::string> {
                           auto w = weight_unramified(UnramifiedRep::numeric({2, 3, Rational(1, 6)}, true),
                                                      UnramifiedRep::numeric({Rational(1, 2), 2}, true),
                                                      UnramifiedRep::numeric({1}, true), order);
                           if (w.exact) return std::nullopt;
                           return std::string("weight is not 1");
                         }));
  return tasks;
}

std::optional<std::string> compare_series(const std::string& what, const TruncatedSeries& a, const TruncatedSeries& b) {
  for (int k = 0; k <= std::min(a.order(), b.order()); ++k)
    if (!(a[k] == b[k])) return what + " at degree " + std::to_string(k) + ": " + a[k].to_string() + " vs " + b[k].to_string();
  return std::nullopt;
}

std::vector<Task> weight_l_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  LocalField field = field_of(o);
  for (int n = 2; n <= 3; ++n)
    tasks.push_back(single(fmt("level-zero/n=%d", n), "the weight at l with m = 0 is 1",
                           [n, field, order = o.order]() -> std::optional<std::string> {
                             auto w = weight_at_l(UnramifiedRep::symbolic("a", n), UnramifiedRep::symbolic("g", n - 1),
                                                  0, "Y", order, field);
                             if (w.series->is_one()) return std::nullopt;
                             return "value " + w.series->to_poly().to_string();
                           }));
  auto closed_form = [order = o.order] {
    auto pi = UnramifiedRep::symbolic("a", 2, true);
    LaurentPoly expected = hecke_eigenvalue(pi, 1) * LaurentPoly::parse("g1*Y") - LaurentPoly::parse("a1*a2*g1^2*Y^2");
    return TruncatedSeries::from_poly(expected, "Y", order);
  };
  tasks.push_back(single("n=2,m=1/tail", "lambda(p) g Y - a1 a2 g^2 Y^2 from the tail lattice sum",
                         [field, closed_form, order = o.order]() -> std::optional<std::string> {
                           auto w = weight_at_l(UnramifiedRep::symbolic("a", 2, true), UnramifiedRep::symbolic("g", 1),
                                                1, "Y", order, field);
                           return compare_series("tail", *w.series, closed_form());
                         }));
  tasks.push_back(single("n=2,m=1/complement", "lambda(p) g Y - a1 a2 g^2 Y^2 from 1 - L^-1 (partial sum)",
                         [field, closed_form, order = o.order]() -> std::optional<std::string> {
                           auto w = weight_at_l(UnramifiedRep::symbolic("a", 2, true), UnramifiedRep::symbolic("g", 1),
                                                1, "Y", order, field);
                           return compare_series("complement", *w.complement_series, closed_form());
                         }));
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m) {
      std::string id = "rationality/n=" + std::to_string(n) + ",m=" + std::to_string(m);
      tasks.push_back(single(id, "no coefficient beyond degree n*m to order 8; both paths agree",
                             [n, m, field]() -> std::optional<std::string> {
                               auto w = weight_at_l(UnramifiedRep::symbolic("a", n),
                                                    UnramifiedRep::symbolic("g", n - 1), m, "Y", 8, field);
                               if (auto d = compare_series("paths", *w.series, *w.complement_series)) return d;
                               return weight_at_l_rationality(w, n, m);
                             }));
    }
  return tasks;
}

std::vector<Task> weight_q_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  LocalField field = field_of(o);
  for (int n0 = 0; n0 <= 4; ++n0)
    for (int m = 0; m <= 4; ++m) {
      std::string id = "n0=" + std::to_string(n0) + ",m=" + std::to_string(m);
      tasks.push_back(single(id + "/verdict", n0 > m ? "vanishes" : "does not vanish",
                             [n0, m, field]() -> std::optional<std::string> {
                               auto r = weight_at_q_structural(n0, m, 2, field);
                               if (r.vanishes != (n0 > m) || r.vanishes != r.index_set.empty())
                                 return "index set of size " + std::to_string(r.index_set.size());
                               return std::nullopt;
                             }));
      if (n0 != m) continue;
      for (int n = 2; n <= 3; ++n) {
        auto r = weight_at_q_structural(n0, m, n, field);
        std::string desc = "rank " + std::to_string(n) + ": surviving term " + r.exact->to_string() + ", printed " +
                           r.paper->paper_constant.to_string() + ", ratio " + r.paper->ratio.to_string();
        tasks.push_back(single(id + "/n=" + std::to_string(n), desc, [n0, m, n, field]() -> std::optional<std::string> {
          auto r = weight_at_q_structural(n0, m, n, field);
          if (r.index_set != std::vector<std::array<int, 3>>{{0, m, 0}}) return std::string("unexpected index set");
          LaurentPoly index = field.p() ? LaurentPoly(Rational(congruence_index(n, *field.p(), m)))
                                        : congruence_index_symbolic(n, m);
          if (!(*r.exact * RationalFunction(index) == RationalFunction(1)))
            return "value " + r.exact->to_string() + " is not 1/" + index.to_string();
          return std::nullopt;
        }));
      }
    }
  return tasks;
}

std::vector<Task> index_tasks(const SuiteOptions&) {
  std::vector<Task> tasks;
  for (int n = 2; n <= 3; ++n)
    for (long p : {2L, 3L})
      for (int m = 0; m <= 2; ++m) {
        std::string id = "n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",m=" + std::to_string(m);
        tasks.push_back(single(id + "/cosets", "closed form " + to_string(congruence_index(n, p, m)) +
                                                   " equals the count of bottom rows up to units",
                               [n, p, m]() -> std::optional<std::string> {
                                 auto count = congruence_index_by_cosets(n, p, m);
                                 if (count == congruence_index(n, p, m)) return std::nullopt;
                                 return "enumeration gives " + to_string(count);
                               }));
        BigInt space;
        mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m * n * n));
        if (space > BigInt(1L << 24)) continue;  // too many matrices to enumerate
        tasks.push_back(single(id + "/matrices", "closed form " + to_string(congruence_index(n, p, m)) +
                                                     " equals |GL_n| / |K_0| by matrix enumeration",
                               [n, p, m]() -> std::optional<std::string> {
                                 auto brute = congruence_index_bruteforce(n, p, m);
                                 if (brute == congruence_index(n, p, m)) return std::nullopt;
                                 return "enumeration gives " + to_string(brute);
                               }));
      }
  return tasks;
}

std::vector<Task> charsum_tasks(const SuiteOptions&) {
  std::vector<Task> tasks;
  for (long p : {2L, 3L, 5L})
    for (int m = 0; m <= 2; ++m)
      for (int r = 1; r <= 3; ++r) {
        std::string id = "p=" + std::to_string(p) + ",m=" + std::to_string(m) + ",r=" + std::to_string(r);
        tasks.push_back(single(id, "orthogonality value equals the root-of-unity sum for valuations in [0,3]",
                               [p, m, r]() -> std::optional<std::string> {
                                 std::vector<int> vals(static_cast<std::size_t>(r), 0);
                                 auto field = LocalField::numeric(p);
                                 for (;;) {
                                   double exact = character_sum(field, m, vals).constant_value()->get_d();
                                   auto numeric = character_sum_numeric(p, m, vals);
                                   if (std::abs(numeric - std::complex<double>(exact, 0)) > 1e-9) {
                                     std::string v;
                                     for (int x : vals) v += (v.empty() ? "" : ",") + std::to_string(x);
                                     return "valuations (" + v + ")";
                                   }
                                   std::size_t i = 0;
                                   while (i < vals.size() && ++vals[i] == 4) vals[i++] = 0;
                                   if (i == vals.size()) return std::nullopt;
                                 }
                               }));
      }
  return tasks;
}

std::vector<Task> contragredient_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (int n = 2; n <= 4; ++n)
    tasks.push_back(single(fmt("rank=%d", n), "matrix definition equals inverted parameters on 20 random dominant cocharacters",
                           [n, seed = o.seed]() -> std::optional<std::string> {
                             std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(n));
                             auto rep = UnramifiedRep::symbolic("a", n);
                             auto dual = contragredient(rep);
                             for (int t = 0; t < 20; ++t) {
                               std::vector<int> e(static_cast<std::size_t>(n));
                               for (int& x : e) x = static_cast<int>(rng() % 7) - 3;
                               std::sort(e.rbegin(), e.rend());
                               TorusCocharacter mu(e);
                               if (!(contragredient_value(rep, mu) == spherical_value(dual, mu))) return mu.to_string();
                             }
                             return std::nullopt;
                           }));
  return tasks;
}

using TaskFactory = std::vector<Task> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, TaskFactory>>& factories() {
  static const std::vector<std::pair<std::string, TaskFactory>> table{
      {"involution", involution_tasks},
      {"weyl", weyl_tasks},
      {"unramified", unramified_tasks},
      {"cauchy", cauchy_tasks},
      {"schur", schur_tasks},
      {"weight-unramified", weight_unramified_tasks},
      {"weight-l", weight_l_tasks},
      {"weight-q", weight_q_tasks},
      {"index", index_tasks},
      {"charsum", charsum_tasks},
      {"contragredient", contragredient_tasks},
  };
  return table;
}

// Prefixes the ids produced by a task.
Task prefixed(Task t, const std::string& prefix) {
  return [t = std::move(t), prefix] {
    auto checks = t();
    for (auto& c : checks) c.id = prefix + "/" + c.id;
    return checks;
  };
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : factories()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.n_max < 2) throw Error(ErrorCode::InvalidArgument, "n-max must be at least 2");
  if (options.order < 0) throw Error(ErrorCode::InvalidArgument, "order must be non-negative");
  if (options.jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be at least 1");
  std::vector<Task> tasks;
  for (const auto& [suite, factory] : factories()) {
    if (name == "all") {
      for (auto& t : factory(options)) tasks.push_back(prefixed(std::move(t), suite));
    } else if (name == suite) {
      tasks = factory(options);
    }
  }
  if (tasks.empty()) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  std::vector<std::vector<CheckResult>> results(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), options.jobs, [&](int i) {
    auto& slot = results[static_cast<std::size_t>(i)];
    try {
      slot = tasks[static_cast<std::size_t>(i)]();
    } catch (const std::exception& e) {
      slot = {CheckResult{fmt("task-%03d", i), "task setup", Status::Error, e.what(), 0.0}};
    }
  });
  SuiteReport report{name, {}};
  for (auto& r : results)
    for (auto& c : r) report.checks.push_back(std::move(c));
  report.sort_checks();
  return report;
}

}  // namespace whitlocal
