/* Exercises the C interface from C. */

#include <pthread.h>
#include <stdio.h>
#include <string.h>

#include "leibniz/leibniz.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static lbz_algebra* family(const char* id, long long param, size_t n_params, uint32_t p) {
  lbz_algebra* a = NULL;
  lbz_status s = lbz_algebra_from_family(id, &param, n_params, p, &a);
  EXPECT(s == LBZ_OK);
  return a;
}

static void test_spec_round_trip(void) {
  lbz_algebra* a = NULL;
  EXPECT(lbz_algebra_from_spec("{\"name\":\"c\",\"field\":{\"type\":\"prime\",\"p\":3},\"dim\":2,"
                               "\"brackets\":[[0,0,1,\"1\"]]}",
                               &a) == LBZ_OK);
  size_t dim = 0;
  EXPECT(lbz_algebra_dim(a, &dim) == LBZ_OK && dim == 2);
  uint32_t x[2] = {1, 0}, y[2] = {1, 0}, out[2] = {9, 9};
  EXPECT(lbz_algebra_bracket(a, x, y, out) == LBZ_OK);
  EXPECT(out[0] == 0 && out[1] == 1);
  uint32_t bad[2] = {3, 0};
  EXPECT(lbz_algebra_bracket(a, bad, y, out) == LBZ_ERR_INPUT);

  char* spec = NULL;
  EXPECT(lbz_algebra_emit_spec(a, &spec) == LBZ_OK);
  lbz_algebra* b = NULL;
  EXPECT(lbz_algebra_from_spec(spec, &b) == LBZ_OK);
  char* spec2 = NULL;
  EXPECT(lbz_algebra_emit_spec(b, &spec2) == LBZ_OK);
  EXPECT(strcmp(spec, spec2) == 0);
  lbz_string_free(spec);
  lbz_string_free(spec2);
  lbz_algebra_free(a);
  lbz_algebra_free(b);
}

static void test_errors(void) {
  lbz_algebra* a = NULL;
  EXPECT(lbz_algebra_from_spec("{\"name\":\"bad\",\"field\":{\"type\":\"prime\",\"p\":3},\"dim\":2,"
                               "\"brackets\":[[0,0,1,\"1\"],[1,0,1,\"1\"],[0,1,0,\"1\"]]}",
                               &a) == LBZ_ERR_NOT_LEIBNIZ);
  size_t t[3] = {9, 9, 9};
  EXPECT(lbz_last_violation(t) == LBZ_OK);
  EXPECT(t[0] == 0 && t[1] == 0 && t[2] == 0);
  EXPECT(strstr(lbz_last_error(), "basis triple") != NULL);

  EXPECT(lbz_algebra_from_spec("{", &a) == LBZ_ERR_INPUT);
  EXPECT(lbz_last_violation(t) == LBZ_ERR_INPUT);
  EXPECT(lbz_algebra_from_spec(NULL, &a) == LBZ_ERR_NULL_ARGUMENT);
  EXPECT(lbz_algebra_dim(NULL, NULL) == LBZ_ERR_NULL_ARGUMENT);

  long long one = 1;
  EXPECT(lbz_algebra_from_family("cyclic_solvable", &one, 1, 3, &a) == LBZ_ERR_NOT_LEIBNIZ);
  EXPECT(lbz_algebra_from_family("nope", &one, 1, 3, &a) == LBZ_ERR_INPUT);
  EXPECT(lbz_algebra_from_family("abelian", &one, 1, 4, &a) == LBZ_ERR_INPUT);

  lbz_algebra* q = family("symmetric_iv", 1, 1, 0);
  lbz_lattice* l = NULL;
  EXPECT(lbz_lattice_build(q, NULL, &l) == LBZ_ERR_UNSUPPORTED_FIELD);
  char* text = NULL;
  EXPECT(lbz_algebra_analyze(q, NULL, 1, &text) == LBZ_OK);
  EXPECT(strstr(text, "\"phi\": null") != NULL);
  lbz_string_free(text);
  uint32_t ch = 7;
  EXPECT(lbz_algebra_characteristic(q, &ch) == LBZ_OK && ch == 0);
  lbz_algebra_free(q);

  lbz_algebra* ab = family("abelian", 3, 1, 2);
  lbz_budget b;
  lbz_budget_default(&b);
  b.max_nodes = 4;
  EXPECT(lbz_lattice_build(ab, &b, &l) == LBZ_ERR_BUDGET);
  lbz_algebra_free(ab);

  uint32_t p = 0;
  EXPECT(lbz_parse_field("F_5", &p) == LBZ_OK && p == 5);
  EXPECT(lbz_parse_field("p=9", &p) == LBZ_ERR_INPUT);
  lbz_algebra_free(NULL);
  lbz_lattice_free(NULL);
  lbz_suite_free(NULL);
}

static void test_lattices(void) {
  lbz_algebra* h = family("heisenberg_lie", 0, 0, 2);
  lbz_lattice* l = NULL;
  EXPECT(lbz_lattice_build(h, NULL, &l) == LBZ_OK);
  lbz_lattice_verdicts v;
  EXPECT(lbz_lattice_verdicts_get(l, &v) == LBZ_OK);
  EXPECT(!v.modular && !v.upper_semimodular && !v.all_wqi);
  size_t edges = 0;
  EXPECT(lbz_lattice_edge_count(l, &edges) == LBZ_OK);
  char* dot = NULL;
  EXPECT(lbz_lattice_dot(l, &dot) == LBZ_OK);
  size_t arrows = 0;
  for (const char* c = dot; (c = strstr(c, "->")) != NULL; c += 2) ++arrows;
  EXPECT(arrows == edges);
  lbz_string_free(dot);
  lbz_lattice_free(l);
  lbz_algebra_free(h);

  lbz_algebra* cs = family("cyclic_solvable", 3, 1, 3);
  EXPECT(lbz_lattice_build(cs, NULL, &l) == LBZ_OK);
  EXPECT(lbz_lattice_verdicts_get(l, &v) == LBZ_OK);
  EXPECT(v.modular && v.upper_semimodular && v.lower_semimodular && v.all_wqi);
  lbz_lattice_free(l);

  lbz_identity_verdicts iv;
  EXPECT(lbz_algebra_identities(cs, &iv) == LBZ_OK);
  EXPECT(iv.right_leibniz == 1 && iv.left_leibniz == 0 && iv.lie == 0);
  lbz_algebra_free(cs);
}

static void test_checks(void) {
  long long params[2] = {2, 2};
  lbz_algebra* sq = NULL;
  EXPECT(lbz_algebra_from_family("family_sqrt", params, 2, 3, &sq) == LBZ_OK);
  char* report = NULL;
  EXPECT(lbz_run_check(sq, "thm-ideal", NULL, &report) == LBZ_OK);
  EXPECT(strstr(report, "\"status\": \"pass\"") != NULL);
  lbz_string_free(report);
  EXPECT(lbz_run_check(sq, "nope", NULL, &report) == LBZ_ERR_INPUT);

  lbz_suite* s = NULL;
  EXPECT(lbz_suite_run_algebra(sq, NULL, NULL, &s) == LBZ_OK);
  size_t fails = 9;
  EXPECT(lbz_suite_failures(s, &fails) == LBZ_OK && fails == 0);
  char* table = NULL;
  EXPECT(lbz_suite_table(s, &table) == LBZ_OK);
  EXPECT(strstr(table, "thm-sqrt-suff") != NULL);
  lbz_string_free(table);
  lbz_suite_free(s);
  lbz_algebra_free(sq);

  EXPECT(lbz_suite_run_corpus(7, "lem-qi,rem-equiv", NULL, &s) == LBZ_OK);
  EXPECT(lbz_suite_failures(s, &fails) == LBZ_OK && fails == 0);
  char* a = NULL;
  char* b = NULL;
  EXPECT(lbz_suite_json(s, -1, &a) == LBZ_OK);
  lbz_suite_free(s);
  EXPECT(lbz_suite_run_corpus(7, "lem-qi,rem-equiv", NULL, &s) == LBZ_OK);
  EXPECT(lbz_suite_json(s, -1, &b) == LBZ_OK);
  EXPECT(strcmp(a, b) == 0);
  EXPECT(strncmp(a, "{", 1) == 0);
  lbz_string_free(a);
  lbz_string_free(b);
  lbz_suite_free(s);

  char* ids = NULL;
  EXPECT(lbz_check_ids(&ids) == LBZ_OK);
  EXPECT(strncmp(ids, "thm-abalab,", 11) == 0);
  lbz_string_free(ids);
  char* list = NULL;
  EXPECT(lbz_catalog_list(&list) == LBZ_OK);
  EXPECT(strstr(list, "family_nonlie_ii") != NULL);
  lbz_string_free(list);
}

static void* failing_thread(void* arg) {
  lbz_algebra* a = NULL;
  (void)arg;
  lbz_algebra_from_spec("[]", &a);
  return NULL;
}

static void test_thread_local_errors(void) {
  lbz_algebra* a = NULL;
  EXPECT(lbz_algebra_from_spec("{", &a) == LBZ_ERR_INPUT);
  const char* before = lbz_last_error();
  char saved[256];
  strncpy(saved, before, sizeof saved - 1);
  saved[sizeof saved - 1] = '\0';
  pthread_t t;
  pthread_create(&t, NULL, failing_thread, NULL);
  pthread_join(t, NULL);
  EXPECT(strcmp(saved, lbz_last_error()) == 0);
}

int main(void) {
  EXPECT(strlen(lbz_version()) > 0);
  test_spec_round_trip();
  test_errors();
  test_lattices();
  test_checks();
  test_thread_local_errors();
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API: all expectations met\n");
  return 0;
}
