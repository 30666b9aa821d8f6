/* Exercises the C interface from C. */
#include <stdio.h>
#include <string.h>

#include "whitlocal/whitlocal.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_polys(void) {
  whitlocal_poly *a = NULL, *b = NULL, *sum = NULL, *prod = NULL, *diff = NULL;
  char* text = NULL;
  int eq = 0;
  EXPECT(whitlocal_poly_parse("x + 1", &a) == WHITLOCAL_OK);
  EXPECT(whitlocal_poly_parse("x - 1", &b) == WHITLOCAL_OK);
  EXPECT(whitlocal_poly_mul(a, b, &prod) == WHITLOCAL_OK);
  EXPECT(whitlocal_poly_to_string(prod, &text) == WHITLOCAL_OK);
  EXPECT(strcmp(text, "x^2 - 1") == 0);
  whitlocal_string_free(text);
  EXPECT(whitlocal_poly_add(a, b, &sum) == WHITLOCAL_OK);
  EXPECT(whitlocal_poly_to_string(sum, &text) == WHITLOCAL_OK);
  EXPECT(strcmp(text, "2*x") == 0);
  whitlocal_string_free(text);
  EXPECT(whitlocal_poly_sub(a, b, &diff) == WHITLOCAL_OK);
  EXPECT(whitlocal_poly_to_json(diff, &text) == WHITLOCAL_OK);
  EXPECT(strcmp(text, "[{\"coeff\":\"2\",\"exps\":{}}]") == 0);
  whitlocal_string_free(text);
  EXPECT(whitlocal_poly_equal(a, a, &eq) == WHITLOCAL_OK && eq == 1);
  EXPECT(whitlocal_poly_equal(a, b, &eq) == WHITLOCAL_OK && eq == 0);

  {
    const char* names[] = {"x"};
    const char* values[] = {"1/2"};
    EXPECT(whitlocal_poly_evaluate(prod, names, values, 1, &text) == WHITLOCAL_OK);
    EXPECT(strcmp(text, "-3/4") == 0);
    whitlocal_string_free(text);
    EXPECT(whitlocal_poly_evaluate(prod, NULL, NULL, 0, &text) == WHITLOCAL_UNBOUND_VARIABLE);
    EXPECT(strstr(whitlocal_last_error(), "x") != NULL);
  }
  {
    whitlocal_poly* h = NULL;
    const char* names[] = {"q"};
    const char* values[] = {"2"};
    EXPECT(whitlocal_poly_parse("q^(1/2)", &h) == WHITLOCAL_OK);
    EXPECT(whitlocal_poly_evaluate(h, names, values, 1, &text) == WHITLOCAL_INVALID_ARGUMENT);
    whitlocal_poly_free(h);
  }

  EXPECT(whitlocal_poly_parse("1 +", &sum) == WHITLOCAL_PARSE_ERROR);
  EXPECT(strlen(whitlocal_last_error()) > 0);
  EXPECT(whitlocal_poly_parse(NULL, &sum) == WHITLOCAL_INVALID_ARGUMENT);
  whitlocal_poly_free(a);
  whitlocal_poly_free(b);
  whitlocal_poly_free(sum);
  whitlocal_poly_free(prod);
  whitlocal_poly_free(diff);
}

static void test_run(void) {
  whitlocal_config* cfg = NULL;
  char* out = NULL;
  int code = -1;
  EXPECT(whitlocal_config_new("verify", &cfg) == WHITLOCAL_OK);
  EXPECT(whitlocal_config_set(cfg, "suite", "involution") == WHITLOCAL_OK);
  EXPECT(whitlocal_config_set(cfg, "emit", "csv") == WHITLOCAL_OK);
  EXPECT(whitlocal_run(cfg, &out, &code) == WHITLOCAL_OK);
  EXPECT(code == 0);
  EXPECT(strncmp(out, "suite,id,status,description,witness\r\n", 37) == 0);
  whitlocal_string_free(out);
  EXPECT(whitlocal_config_set(cfg, "emit", "yaml") == WHITLOCAL_INVALID_ARGUMENT);
  EXPECT(whitlocal_config_set(cfg, "suite", "missing") == WHITLOCAL_OK);
  EXPECT(whitlocal_run(cfg, &out, &code) == WHITLOCAL_OK);
  EXPECT(code == 2);
  EXPECT(strstr(whitlocal_last_error(), "missing") != NULL);
  whitlocal_string_free(out);
  whitlocal_config_free(cfg);

  EXPECT(whitlocal_suite_names(&out) == WHITLOCAL_OK);
  EXPECT(strstr(out, "involution\n") != NULL);
  EXPECT(strstr(out, "all\n") != NULL);
  whitlocal_string_free(out);
  EXPECT(whitlocal_default_jobs() >= 1);
  EXPECT(strlen(whitlocal_version()) > 0);
}

int main(void) {
  test_polys();
  test_run();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("C interface: all checks passed\n");
  return 0;
}
