// Command-line front end. Talks to the library only through the C interface.

#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "whitlocal/whitlocal.h"

namespace {

constexpr int kInvalidInput = 2;

struct Flag {
  const char* names;
  const char* key;
  const char* help;
};

const Flag kFlags[] = {
    {"--n", "n", "rank parameter"},
    {"--n-max", "n-max", "largest rank checked by the involution suite"},
    {"-m,--level", "level", "level exponent m"},
    {"-N,--order", "order", "series truncation order"},
    {"--p", "p", "residue cardinality: a prime power or 'symbolic'"},
    {"--emit", "emit", "output format: json, csv or text"},
    {"--seed", "seed", "seed for randomized checks"},
    {"--jobs", "jobs", "worker threads (default: WHITLOCAL_JOBS or 1)"},
    {"--suite", "suite", "verification suite name or 'all'"},
    {"--place", "place", "weight place: unramified, l or q"},
    {"--conductor", "conductor", "conductor exponent n0 at q"},
    {"--valuations", "valuations", "comma separated valuations"},
    {"--mu", "mu", "comma separated cocharacter"},
    {"--s", "s", "spectral parameter s (rational or expression in s, w)"},
    {"--w", "w", "spectral parameter w (rational or expression in s, w)"},
    {"--perturbation", "perturbation", "offset added to s' in the involution checks (checker self-test)"},
};

struct Command {
  const char* name;
  const char* help;
  std::vector<std::string> keys;
};

const Command kCommands[] = {
    {"lfactor", "Rankin-Selberg L-factor of GL(n+1) x GL(n) and its expansion", {"n", "order", "emit", "jobs"}},
    {"whittaker", "spherical, contragredient and twisted Whittaker values", {"n", "mu", "level", "p", "emit", "jobs"}},
    {"zeta", "lattice-sum zeta integral against the L-factor", {"n", "order", "emit", "jobs"}},
    {"weight", "local weight at an unramified place, at l or at q",
     {"place", "n", "level", "conductor", "order", "p", "emit", "jobs"}},
    {"index", "congruence subgroup index", {"n", "p", "level", "emit", "jobs"}},
    {"charsum", "additive character sum", {"p", "level", "valuations", "emit", "jobs"}},
    {"params", "dual spectral parameters", {"n", "s", "w", "emit", "jobs"}},
    {"verify", "run a verification suite", {"suite", "n-max", "order", "p", "seed", "emit", "jobs", "perturbation"}},
};

const Flag* find_flag(const std::string& key) {
  for (const auto& f : kFlags)
    if (key == f.key) return &f;
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact local computations for unramified GL(n) Whittaker functions and zeta integrals"};
  app.require_subcommand(1);
  std::map<std::string, std::string> values;
  bool bruteforce = false;
  bool timings = false;
  for (const auto& cmd : kCommands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    for (const auto& key : cmd.keys) {
      const Flag* f = find_flag(key);
      sub->add_option(f->names, values[std::string(cmd.name) + ":" + key], f->help);
    }
    if (std::string(cmd.name) == "index") sub->add_flag("--bruteforce", bruteforce, "also count cosets by enumeration");
    if (std::string(cmd.name) == "verify") sub->add_flag("--timings", timings, "include per-check milliseconds");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalidInput;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  whitlocal_config* raw = nullptr;
  if (whitlocal_config_new(name.c_str(), &raw) != WHITLOCAL_OK) {
    std::fprintf(stderr, "error: %s\n", whitlocal_last_error());
    return kInvalidInput;
  }
  std::unique_ptr<whitlocal_config, decltype(&whitlocal_config_free)> cfg(raw, whitlocal_config_free);

  auto set = [&](const std::string& key, const std::string& value) {
    if (whitlocal_config_set(cfg.get(), key.c_str(), value.c_str()) != WHITLOCAL_OK) {
      std::fprintf(stderr, "error: %s\n", whitlocal_last_error());
      return false;
    }
    return true;
  };
  for (const auto& cmd : kCommands) {
    if (name != cmd.name) continue;
    for (const auto& key : cmd.keys) {
      const Flag* f = find_flag(key);
      auto* opt = chosen->get_option_no_throw(std::string(f->names).substr(std::string(f->names).rfind(',') + 1));
      if (opt && opt->count() > 0 && !set(key, values[name + ":" + key])) return kInvalidInput;
    }
  }
  if (bruteforce && !set("bruteforce", "true")) return kInvalidInput;
  if (timings && !set("timings", "true")) return kInvalidInput;

  char* output = nullptr;
  int exit_code = kInvalidInput;
  if (whitlocal_run(cfg.get(), &output, &exit_code) != WHITLOCAL_OK) {
    std::fprintf(stderr, "error: %s\n", whitlocal_last_error());
    return kInvalidInput;
  }
  std::fputs(output, stdout);
  whitlocal_string_free(output);
  if (exit_code == kInvalidInput) std::fprintf(stderr, "error: %s\n", whitlocal_last_error());
  return exit_code;
}
