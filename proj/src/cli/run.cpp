#include "whitlocal/run.hpp"

#include <sstream>

#include "whitlocal/error.hpp"
#include "whitlocal/reciprocity.hpp"
#include "whitlocal/suites.hpp"
#include "whitlocal/whittaker.hpp"
#include "whitlocal/zeta.hpp"

namespace whitlocal {

namespace {

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long v = std::stol(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, "--" + key + " expects an integer, got '" + value + "'");
}

int parse_int(const std::string& key, const std::string& value, long lo, long hi = 1L << 30) {
  long v = parse_long(key, value);
  if (v < lo || v > hi)
    throw Error(ErrorCode::InvalidArgument, "--" + key + " must lie in [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "], got " + value);
  return static_cast<int>(v);
}

std::vector<int> parse_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  if (value.empty()) return out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(key, item, -1000, 1000));
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true") return true;
  if (value == "0" || value == "false") return false;
  throw Error(ErrorCode::InvalidArgument, "--" + key + " expects true or false");
}

}  // namespace

void set_option(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "command") {
    cfg.command = value;
  } else if (key == "n") {
    cfg.n = parse_int(key, value, 1, 64);
  } else if (key == "n-max") {
    cfg.n_max = parse_int(key, value, 2, 64);
  } else if (key == "level") {
    cfg.level = parse_int(key, value, 0, 64);
  } else if (key == "order") {
    cfg.order = parse_int(key, value, 0, 64);
  } else if (key == "p") {
    if (value == "symbolic" || value == "q") {
      cfg.p.reset();
    } else {
      long p = parse_long(key, value);
      if (!is_prime_power(p)) throw Error(ErrorCode::InvalidArgument, "--p must be a prime power or 'symbolic'");
      cfg.p = p;
    }
  } else if (key == "emit") {
    cfg.emit = parse_report_format(value);
  } else if (key == "seed") {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(value, &used);
      if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "--seed expects a non-negative integer");
    }
  } else if (key == "jobs") {
    cfg.jobs = parse_int(key, value, 1, 1024);
  } else if (key == "suite") {
    cfg.suite = value;
  } else if (key == "place") {
    if (value != "unramified" && value != "l" && value != "q")
      throw Error(ErrorCode::InvalidArgument, "--place must be unramified, l or q");
    cfg.place = value;
  } else if (key == "conductor") {
    cfg.conductor = parse_int(key, value, 0, 64);
  } else if (key == "valuations") {
    cfg.valuations = parse_list(key, value);
  } else if (key == "mu") {
    cfg.mu = parse_list(key, value);
  } else if (key == "s") {
    cfg.s = value;
  } else if (key == "w") {
    cfg.w = value;
  } else if (key == "bruteforce") {
    cfg.bruteforce = parse_bool(key, value);
  } else if (key == "timings") {
    cfg.timings = parse_bool(key, value);
  } else if (key == "perturbation") {
    cfg.perturbation = parse_rational(value);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown option '" + key + "'");
  }
}

namespace {

using Json = nlohmann::ordered_json;

// Result of a computation: a JSON document plus a flat table for CSV and text.
struct Output {
  Json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool failed = false;
};

std::string render(const Output& out, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::Json:
      return out.doc.dump(2) + "\n";
    case ReportFormat::Csv: {
      std::string s;
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_field(cells[i]);
        s += "\r\n";
      };
      line(out.header);
      for (const auto& r : out.rows) line(r);
      return s;
    }
    case ReportFormat::Text: {
      std::string s;
      for (const auto& r : out.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "  " : "") + out.header[i] + "=" + r[i];
        s += "\n";
      }
      return s;
    }
  }
  return {};
}

int require_n(const RunConfig& cfg, int fallback, int lo) {
  int n = cfg.n.value_or(fallback);
  if (n < lo) throw Error(ErrorCode::InvalidArgument, "--n must be at least " + std::to_string(lo));
  return n;
}

LocalField field_of(const RunConfig& cfg) { return cfg.p ? LocalField::numeric(*cfg.p) : LocalField::symbolic(); }

Json p_json(const RunConfig& cfg) { return cfg.p ? Json(*cfg.p) : Json("q"); }

void series_rows(Output& out, const TruncatedSeries& s) {
  out.header = {"degree", "coefficient"};
  for (int k = 0; k <= s.order(); ++k) out.rows.push_back({std::to_string(k), s[k].to_string()});
}

Output cmd_lfactor(const RunConfig& cfg) {
  int n = require_n(cfg, 2, 1);
  auto a = UnramifiedRep::symbolic("a", n + 1);
  auto b = UnramifiedRep::symbolic("b", n);
  auto l = local_l_factor(a, b, "X");
  auto series = series_expand(l, "X", cfg.order);
  Output out;
  out.doc["command"] = "lfactor";
  out.doc["ranks"] = {n + 1, n};
  out.doc["closedForm"] = Json(l.to_json());
  out.doc["series"] = Json(series.to_json());
  series_rows(out, series);
  return out;
}

Output cmd_zeta(const RunConfig& cfg) {
  int n = require_n(cfg, 2, 1);
  auto z = local_zeta_unramified(UnramifiedRep::symbolic("a", n + 1), UnramifiedRep::symbolic("b", n), "X", cfg.order,
                                 cfg.jobs);
  auto expansion = series_expand(*z.closed_form, "X", cfg.order);
  Output out;
  out.doc["command"] = "zeta";
  out.doc["ranks"] = {n + 1, n};
  auto zj = z.to_json();
  for (const auto& [k, v] : zj.items()) out.doc[k] = v;
  out.header = {"degree", "lattice_sum", "l_expansion", "match"};
  bool all = true;
  for (int k = 0; k <= cfg.order; ++k) {
    bool match = z.series[k] == expansion[k];
    all = all && match;
    out.rows.push_back({std::to_string(k), z.series[k].to_string(), expansion[k].to_string(), match ? "true" : "false"});
  }
  out.doc["matches"] = all;
  out.failed = !all;
  return out;
}

Output cmd_whittaker(const RunConfig& cfg) {
  int n = require_n(cfg, 2, 1);
  auto rep = UnramifiedRep::symbolic("a", n);
  Output out;
  out.doc["command"] = "whittaker";
  out.doc["rank"] = n;
  out.header = {"quantity", "value"};
  auto add = [&](const std::string& key, const std::string& value) {
    out.doc[key] = value;
    out.rows.push_back({key, value});
  };
  if (cfg.level) {
    std::vector<int> e = cfg.mu.empty() ? std::vector<int>(static_cast<std::size_t>(n - 1), *cfg.level) : cfg.mu;
    TorusCocharacter mu(e);
    out.doc["mu"] = e;
    out.doc["level"] = *cfg.level;
    out.doc["p"] = p_json(cfg);
    add("spherical", spherical_value(rep, mu.extended(0)).to_string());
    add("twisted", twisted_value(rep, mu, *cfg.level, field_of(cfg)).to_string());
    add("twistedPrinted", twisted_value_printed(rep, mu, *cfg.level, field_of(cfg)).to_string());
  } else {
    std::vector<int> e = cfg.mu.empty() ? std::vector<int>(static_cast<std::size_t>(n), 0) : cfg.mu;
    TorusCocharacter mu(e);
    out.doc["mu"] = e;
    out.doc["dominant"] = mu.is_dominant();
    add("spherical", spherical_value(rep, mu).to_string());
    add("contragredient", contragredient_value(rep, mu).to_string());
    add("contragredientParameters", spherical_value(contragredient(rep), mu).to_string());
  }
  return out;
}

Output cmd_weight(const RunConfig& cfg) {
  Output out;
  out.doc["command"] = "weight";
  out.doc["place"] = cfg.place;
  if (cfg.place == "unramified") {
    int n = require_n(cfg, 2, 2);
    auto w = weight_unramified(UnramifiedRep::symbolic("A", n + 1), UnramifiedRep::symbolic("b", n),
                               UnramifiedRep::symbolic("c", n - 1), cfg.order, cfg.jobs);
    out.doc["ranks"] = {n + 1, n, n - 1};
    auto wj = w.to_json();
    for (const auto& [k, v] : wj.items()) out.doc[k] = v;
    out.header = {"quantity", "value"};
    out.rows.push_back({"value", w.exact ? w.exact->to_string() : "not 1"});
    out.failed = !w.exact;
  } else if (cfg.place == "l") {
    int n = require_n(cfg, 2, 2);
    int m = cfg.level.value_or(1);
    auto pi = UnramifiedRep::symbolic("a", n, true);
    auto pi1 = UnramifiedRep::symbolic("g", n - 1);
    auto w = weight_at_l(pi, pi1, m, "Y", cfg.order, field_of(cfg), cfg.jobs);
    out.doc["rank"] = n;
    out.doc["level"] = m;
    out.doc["p"] = p_json(cfg);
    out.doc["heckeEigenvalue"] = hecke_eigenvalue(pi, 1).to_string();
    out.doc["value"] = w.series->to_poly().to_string();
    out.doc["valueTrivialCentral"] = pi.apply_trivial_central(w.series->to_poly()).to_string();
    bool paths = series_equal(*w.series, *w.complement_series);
    auto rational = weight_at_l_rationality(w, n, m);
    out.doc["pathsAgree"] = paths;
    out.doc["degreeBound"] = n * m;
    out.doc["withinDegreeBound"] = !rational.has_value();
    auto wj = w.to_json();
    for (const auto& [k, v] : wj.items())
      if (k != "value") out.doc[k] = v;
    series_rows(out, *w.series);
    out.failed = !paths || rational.has_value();
  } else {
    int n = require_n(cfg, 2, 2);
    int m = cfg.level.value_or(1);
    int n0 = cfg.conductor.value_or(m);
    auto w = weight_at_q_structural(n0, m, n, field_of(cfg));
    out.doc["rank"] = n;
    out.doc["conductor"] = n0;
    out.doc["level"] = m;
    out.doc["p"] = p_json(cfg);
    auto wj = w.to_json();
    for (const auto& [k, v] : wj.items()) out.doc[k] = v;
    out.header = {"a1", "a2", "j"};
    for (const auto& t : w.index_set)
      out.rows.push_back({std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])});
  }
  return out;
}

Output cmd_index(const RunConfig& cfg) {
  int n = require_n(cfg, 2, 2);
  int m = cfg.level.value_or(1);
  Output out;
  out.doc["command"] = "index";
  out.doc["n"] = n;
  out.doc["p"] = p_json(cfg);
  out.doc["level"] = m;
  out.header = {"method", "index"};
  std::string closed = cfg.p ? to_string(congruence_index(n, *cfg.p, m)) : congruence_index_symbolic(n, m).to_string();
  out.doc["index"] = closed;
  out.rows.push_back({"closed_form", closed});
  if (cfg.bruteforce) {
    if (!cfg.p) throw Error(ErrorCode::InvalidArgument, "--bruteforce needs a numeric --p");
    std::string cosets = to_string(congruence_index_by_cosets(n, *cfg.p, m));
    std::string brute = to_string(congruence_index_bruteforce(n, *cfg.p, m, cfg.jobs));
    out.doc["cosets"] = cosets;
    out.doc["bruteforce"] = brute;
    out.doc["matches"] = brute == closed && cosets == closed;
    out.rows.push_back({"cosets", cosets});
    out.rows.push_back({"bruteforce", brute});
    out.failed = brute != closed || cosets != closed;
  }
  return out;
}

Output cmd_charsum(const RunConfig& cfg) {
  int m = cfg.level.value_or(1);
  auto field = field_of(cfg);
  auto value = character_sum(field, m, cfg.valuations);
  // The printed constant belongs to a sum over n - 1 = r coordinates.
  int n = static_cast<int>(cfg.valuations.size()) + 1;
  LaurentPoly printed = printed_character_constant(field, std::max(n, 2), m);
  bool constrained = true;
  for (int v : cfg.valuations) constrained = constrained && v >= m;
  if (!constrained) printed = LaurentPoly();
  Output out;
  out.doc["command"] = "charsum";
  out.doc["p"] = p_json(cfg);
  out.doc["level"] = m;
  out.doc["valuations"] = cfg.valuations;
  out.doc["value"] = value.to_string();
  out.doc["printed"] = printed.to_string();
  out.header = {"quantity", "value"};
  out.rows.push_back({"value", value.to_string()});
  out.rows.push_back({"printed", printed.to_string()});
  return out;
}

Output cmd_params(const RunConfig& cfg) {
  int n = require_n(cfg, 2, 2);
  ParamPair p{LaurentPoly::parse(cfg.s), LaurentPoly::parse(cfg.w), n};
  for (const auto& v : p.s.variables())
    if (v != "s" && v != "w") throw Error(ErrorCode::InvalidArgument, "parameters may only use the symbols s and w");
  for (const auto& v : p.w.variables())
    if (v != "s" && v != "w") throw Error(ErrorCode::InvalidArgument, "parameters may only use the symbols s and w");
  auto d = dual_params(p);
  bool involution = dual_params(d) == p;
  Output out;
  out.doc["command"] = "params";
  out.doc["input"] = p.to_json();
  out.doc["dual"] = d.to_json();
  out.doc["involution"] = involution;
  out.header = {"quantity", "value"};
  out.rows = {{"s", p.s.to_string()}, {"w", p.w.to_string()}, {"s'", d.s.to_string()}, {"w'", d.w.to_string()}};
  out.failed = !involution;
  return out;
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
  RunResult result;
  try {
    if (cfg.order < 0) throw Error(ErrorCode::InvalidArgument, "--order must be non-negative");
    if (cfg.jobs < 1) throw Error(ErrorCode::InvalidArgument, "--jobs must be at least 1");
    if (cfg.command == "verify") {
      SuiteOptions opts{cfg.n_max, cfg.order, cfg.p, cfg.seed, cfg.jobs, cfg.perturbation};
      auto report = run_suite(cfg.suite, opts);
      result.output = emit_report(report, cfg.emit, cfg.timings);
      result.exit_code = report.passed() ? 0 : 1;
      return result;
    }
    Output out;
    if (cfg.command == "lfactor") {
      out = cmd_lfactor(cfg);
    } else if (cfg.command == "zeta") {
      out = cmd_zeta(cfg);
    } else if (cfg.command == "whittaker") {
      out = cmd_whittaker(cfg);
    } else if (cfg.command == "weight") {
      out = cmd_weight(cfg);
    } else if (cfg.command == "index") {
      out = cmd_index(cfg);
    } else if (cfg.command == "charsum") {
      out = cmd_charsum(cfg);
    } else if (cfg.command == "params") {
      out = cmd_params(cfg);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");
    }
    result.output = render(out, cfg.emit);
    result.exit_code = out.failed ? 1 : 0;
  } catch (const Error& e) {
    result = RunResult{2, "", e.what()};
  } catch (const std::exception& e) {
    result = RunResult{2, "", std::string("internal error: ") + e.what()};
  }
  return result;
}

}  // namespace whitlocal
