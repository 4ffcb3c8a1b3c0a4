#ifndef PDECTL_H
#define PDECTL_H

/* C interface to the pdectl workbench. Every call returns a status; on
 * failure pdectl_last_error() describes the problem (per thread). Handles
 * are owned by the caller and released with the matching _free function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PDECTL_API __declspec(dllexport)
#else
#define PDECTL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdectl_status {
  PDECTL_OK = 0,
  PDECTL_ERR_PARSE = 1,
  PDECTL_ERR_INVALID_ARGUMENT = 2,
  PDECTL_ERR_UNSUPPORTED = 3,
  /* The report is still produced; the S' closure lies outside the decided fragment. */
  PDECTL_UNDECIDABLE = 4,
  PDECTL_ERR_INTERNAL = 5
} pdectl_status;

typedef enum pdectl_space {
  PDECTL_SPACE_DPRIME = 0,
  PDECTL_SPACE_CINF = 1,
  PDECTL_SPACE_SPRIME = 2,
  PDECTL_SPACE_S = 3,
  PDECTL_SPACE_EPRIME = 4,
  PDECTL_SPACE_D = 5
} pdectl_space;

typedef struct pdectl_problem pdectl_problem;
typedef struct pdectl_report pdectl_report;

typedef struct pdectl_generic_spec {
  size_t rows;
  size_t cols;
  size_t nvars;
  int degree;
  size_t trials;
  long pool_min;
  long pool_max;
  uint64_t seed;
  size_t threads; /* 0: hardware concurrency */
} pdectl_generic_spec;

PDECTL_API const char* pdectl_version(void);
PDECTL_API const char* pdectl_last_error(void);

PDECTL_API pdectl_status pdectl_space_from_name(const char* name, pdectl_space* out);

PDECTL_API pdectl_status pdectl_problem_from_string(const char* text, pdectl_problem** out);
PDECTL_API pdectl_status pdectl_problem_from_file(const char* path, pdectl_problem** out);
/* The space named in the file, or -1 when absent. */
PDECTL_API int pdectl_problem_space(const pdectl_problem* problem);
PDECTL_API void pdectl_problem_free(pdectl_problem* problem);

PDECTL_API pdectl_status pdectl_analyze(const pdectl_problem* problem, pdectl_space space, pdectl_report** out);
PDECTL_API pdectl_status pdectl_potential(const pdectl_problem* problem, pdectl_space space, pdectl_report** out);
PDECTL_API pdectl_status pdectl_decompose(const pdectl_problem* problem, pdectl_report** out);
PDECTL_API pdectl_status pdectl_closure(const pdectl_problem* problem, pdectl_space space, pdectl_report** out);
/* Projects onto the last `keep` coordinates. */
PDECTL_API pdectl_status pdectl_eliminate(const pdectl_problem* problem, pdectl_space space, size_t keep,
                                          pdectl_report** out);
/* X and U as JSON arrays of rows, entries integers or "p/q" strings. */
PDECTL_API pdectl_status pdectl_pbh(const char* x_json, const char* u_json, pdectl_report** out);

PDECTL_API void pdectl_generic_spec_default(pdectl_generic_spec* spec);
PDECTL_API pdectl_status pdectl_generic(const pdectl_generic_spec* spec, pdectl_report** out);

PDECTL_API pdectl_status pdectl_demo_derham(pdectl_report** out);

PDECTL_API const char* pdectl_report_text(const pdectl_report* report);
PDECTL_API const char* pdectl_report_json(const pdectl_report* report);
PDECTL_API void pdectl_report_free(pdectl_report* report);

#ifdef __cplusplus
}
#endif

#endif
