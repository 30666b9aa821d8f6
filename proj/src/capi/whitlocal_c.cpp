#include "whitlocal/whitlocal.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

#include "whitlocal/error.hpp"
#include "whitlocal/laurent.hpp"
#include "whitlocal/parallel.hpp"
#include "whitlocal/run.hpp"
#include "whitlocal/suites.hpp"

struct whitlocal_poly {
  whitlocal::LaurentPoly value;
};

struct whitlocal_config {
  whitlocal::RunConfig value;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

whitlocal_status fail(whitlocal_status code, const std::string& message) {
  last_error = message;
  return code;
}

// Runs body, translating exceptions into status codes.
template <class Body>
whitlocal_status guarded(Body body) {
  try {
    last_error.clear();
    body();
    return WHITLOCAL_OK;
  } catch (const whitlocal::Error& e) {
    return fail(static_cast<whitlocal_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::exception& e) {
    return fail(WHITLOCAL_INTERNAL, e.what());
  }
}

whitlocal_status null_argument() { return fail(WHITLOCAL_INVALID_ARGUMENT, "null argument"); }

template <class Op>
whitlocal_status binary(const whitlocal_poly* a, const whitlocal_poly* b, whitlocal_poly** out, Op op) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = new whitlocal_poly{op(a->value, b->value)}; });
}

}  // namespace

extern "C" {

const char* whitlocal_version(void) { return "0.1.0"; }

const char* whitlocal_last_error(void) { return last_error.c_str(); }

void whitlocal_string_free(char* s) { std::free(s); }

whitlocal_status whitlocal_poly_parse(const char* text, whitlocal_poly** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new whitlocal_poly{whitlocal::LaurentPoly::parse(text)}; });
}

void whitlocal_poly_free(whitlocal_poly* p) { delete p; }

whitlocal_status whitlocal_poly_add(const whitlocal_poly* a, const whitlocal_poly* b, whitlocal_poly** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x + y; });
}

whitlocal_status whitlocal_poly_sub(const whitlocal_poly* a, const whitlocal_poly* b, whitlocal_poly** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x - y; });
}

whitlocal_status whitlocal_poly_mul(const whitlocal_poly* a, const whitlocal_poly* b, whitlocal_poly** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x * y; });
}

whitlocal_status whitlocal_poly_equal(const whitlocal_poly* a, const whitlocal_poly* b, int* out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = a->value == b->value ? 1 : 0; });
}

whitlocal_status whitlocal_poly_to_string(const whitlocal_poly* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { *out = copy_out(p->value.to_string()); });
}

whitlocal_status whitlocal_poly_to_json(const whitlocal_poly* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { *out = copy_out(p->value.to_json().dump()); });
}

whitlocal_status whitlocal_poly_evaluate(const whitlocal_poly* p, const char* const* names, const char* const* values,
                                         size_t count, char** out) {
  if (!p || !out || (count > 0 && (!names || !values))) return null_argument();
  return guarded([&] {
    std::map<std::string, whitlocal::Rational> bindings;
    for (size_t i = 0; i < count; ++i) {
      if (!names[i] || !values[i]) throw whitlocal::Error(whitlocal::ErrorCode::InvalidArgument, "null binding");
      bindings[names[i]] = whitlocal::parse_rational(values[i]);
    }
    *out = copy_out(whitlocal::to_string(p->value.evaluate(bindings)));
  });
}

whitlocal_status whitlocal_config_new(const char* command, whitlocal_config** out) {
  if (!command || !out) return null_argument();
  return guarded([&] {
    auto cfg = new whitlocal_config{};
    cfg->value.command = command;
    cfg->value.jobs = whitlocal::default_jobs();
    *out = cfg;
  });
}

whitlocal_status whitlocal_config_set(whitlocal_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return null_argument();
  return guarded([&] { whitlocal::set_option(cfg->value, key, value); });
}

void whitlocal_config_free(whitlocal_config* cfg) { delete cfg; }

whitlocal_status whitlocal_run(const whitlocal_config* cfg, char** output, int* exit_code) {
  if (!cfg || !output || !exit_code) return null_argument();
  return guarded([&] {
    auto result = whitlocal::run_command(cfg->value);
    *output = copy_out(result.output);
    *exit_code = result.exit_code;
    last_error = result.diagnostic;
  });
}

whitlocal_status whitlocal_suite_names(char** out) {
  if (!out) return null_argument();
  return guarded([&] {
    std::string s;
    for (const auto& n : whitlocal::suite_names()) s += n + "\n";
    *out = copy_out(s);
  });
}

int whitlocal_default_jobs(void) { return whitlocal::default_jobs(); }

}  // extern "C"
