/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "pdectl/pdectl.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

static pdectl_problem* load(const char* text) {
  pdectl_problem* p = NULL;
  pdectl_status s = pdectl_problem_from_string(text, &p);
  EXPECT(s == PDECTL_OK);
  return p;
}

int main(void) {
  pdectl_problem* p;
  pdectl_report* r;
  pdectl_space sp;
  pdectl_status s;

  EXPECT(strcmp(pdectl_version(), "0.1.0") == 0);

  EXPECT(pdectl_space_from_name("Sprime", &sp) == PDECTL_OK && sp == PDECTL_SPACE_SPRIME);
  EXPECT(pdectl_space_from_name("Lp", &sp) == PDECTL_ERR_INVALID_ARGUMENT);
  EXPECT(contains(pdectl_last_error(), "Lp"));

  p = load("ring n=3 vars=d1,d2,d3\nmatrix 1 3\nd1, d2, d3\nspace=Dprime\n");
  EXPECT(pdectl_problem_space(p) == PDECTL_SPACE_DPRIME);
  EXPECT(pdectl_analyze(p, PDECTL_SPACE_DPRIME, &r) == PDECTL_OK);
  EXPECT(contains(pdectl_report_text(r), "verdict: CONTROLLABLE"));
  EXPECT(contains(pdectl_report_json(r), "\"kind\": \"analysis\""));
  pdectl_report_free(r);
  EXPECT(pdectl_potential(p, PDECTL_SPACE_DPRIME, &r) == PDECTL_OK);
  EXPECT(contains(pdectl_report_json(r), "\"kind\": \"potential\""));
  pdectl_report_free(r);
  EXPECT(pdectl_decompose(p, &r) == PDECTL_OK);
  EXPECT(contains(pdectl_report_json(r), "\"kind\": \"decomposition\""));
  pdectl_report_free(r);
  EXPECT(pdectl_eliminate(p, PDECTL_SPACE_DPRIME, 4, &r) == PDECTL_ERR_INVALID_ARGUMENT);
  EXPECT(r == NULL);
  pdectl_problem_free(p);

  p = load("ring n=2 vars=dx,dy\nmatrix 2 2\ndx, -dy\ndy, dx\n");
  EXPECT(pdectl_problem_space(p) == -1);
  EXPECT(pdectl_eliminate(p, PDECTL_SPACE_DPRIME, 1, &r) == PDECTL_OK);
  EXPECT(contains(pdectl_report_text(r), "dx^2 + dy^2"));
  pdectl_report_free(r);
  pdectl_problem_free(p);

  /* The S' closure of x^4 - 1 mixes tempered and growing modes. */
  p = load("ring n=1 vars=t\nmatrix 1 1\nt^4 - 1\n");
  s = pdectl_closure(p, PDECTL_SPACE_SPRIME, &r);
  EXPECT(s == PDECTL_UNDECIDABLE);
  EXPECT(r != NULL);
  EXPECT(contains(pdectl_report_json(r), "\"decided\": false"));
  pdectl_report_free(r);
  s = pdectl_analyze(p, PDECTL_SPACE_SPRIME, &r);
  EXPECT(s == PDECTL_UNDECIDABLE);
  EXPECT(contains(pdectl_report_text(r), "UNDECIDABLE"));
  pdectl_report_free(r);
  EXPECT(pdectl_closure(p, PDECTL_SPACE_D, &r) == PDECTL_OK);
  pdectl_report_free(r);
  pdectl_problem_free(p);

  p = NULL;
  EXPECT(pdectl_problem_from_string("ring n=2 vars=a,b\nmatrix 2 2\na, b\na\n", &p) == PDECTL_ERR_PARSE);
  EXPECT(p == NULL);
  EXPECT(contains(pdectl_last_error(), "row 2 has 1 entries, expected 2"));
  EXPECT(pdectl_problem_from_file("/nonexistent.sys", &p) == PDECTL_ERR_INVALID_ARGUMENT);
  EXPECT(pdectl_problem_from_string(NULL, &p) == PDECTL_ERR_INVALID_ARGUMENT);
  EXPECT(pdectl_analyze(NULL, PDECTL_SPACE_DPRIME, &r) == PDECTL_ERR_INVALID_ARGUMENT);

  EXPECT(pdectl_pbh("[[0,1],[0,0]]", "[[0],[1]]", &r) == PDECTL_OK);
  EXPECT(contains(pdectl_report_text(r), "verdict: CONTROLLABLE"));
  pdectl_report_free(r);
  EXPECT(pdectl_pbh("[[1,0],[0,1]]", "[[1],[0]]", &r) == PDECTL_OK);
  EXPECT(contains(pdectl_report_text(r), "NOT CONTROLLABLE"));
  pdectl_report_free(r);
  EXPECT(pdectl_pbh("[[1,0],[0,1]]", "[[1]]", &r) == PDECTL_ERR_INVALID_ARGUMENT);

  {
    pdectl_generic_spec g;
    pdectl_report* r2;
    pdectl_generic_spec_default(&g);
    EXPECT(g.rows == 1 && g.cols == 2 && g.trials == 50 && g.pool_min == -5 && g.pool_max == 5);
    g.trials = 8;
    g.threads = 1;
    EXPECT(pdectl_generic(&g, &r) == PDECTL_OK);
    g.threads = 3;
    EXPECT(pdectl_generic(&g, &r2) == PDECTL_OK);
    EXPECT(contains(pdectl_report_json(r), "\"kind\": \"genericity\""));
    /* Same counts regardless of the thread count. */
    {
      const char* a = strstr(pdectl_report_json(r), "\"counts\"");
      const char* b = strstr(pdectl_report_json(r2), "\"counts\"");
      const char* ea = strstr(a, "}");
      const char* eb = strstr(b, "}");
      EXPECT(ea - a == eb - b && strncmp(a, b, (size_t)(ea - a)) == 0);
    }
    pdectl_report_free(r);
    pdectl_report_free(r2);
    g.trials = 0;
    EXPECT(pdectl_generic(&g, &r) == PDECTL_ERR_INVALID_ARGUMENT);
  }

  EXPECT(pdectl_demo_derham(&r) == PDECTL_OK);
  EXPECT(contains(pdectl_report_json(r), "\"exact\": true"));
  pdectl_report_free(r);

  pdectl_report_free(NULL);
  pdectl_problem_free(NULL);

  if (failures) fprintf(stderr, "%d C API expectations failed\n", failures);
  else printf("C API: all expectations met\n");
  return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}
