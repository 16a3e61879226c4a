#ifndef SEXTIC_SEXTIC_H
#define SEXTIC_SEXTIC_H

/*
 * C interface to the sextic analysis core.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a sextic_status; on failure the message is available
 * from sextic_last_error() on the calling thread until its next call.
 * Strings returned through char** are owned by the caller and released
 * with sextic_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SEXTIC_API __declspec(dllexport)
#else
#define SEXTIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sextic_status {
  SEXTIC_OK = 0,
  /* Malformed polynomial, bad argument value or unreadable JSON. */
  SEXTIC_ERR_INPUT = 2,
  /* A search finished within budget without a certificate. */
  SEXTIC_INCONCLUSIVE = 3,
  /* A configured budget (memory, range) would be exceeded. */
  SEXTIC_ERR_BUDGET = 4,
  /* The polynomial does not meet the operation's precondition. */
  SEXTIC_ERR_PRECONDITION = 5,
  /* A verified identity failed; indicates a defect in the core. */
  SEXTIC_ERR_INTERNAL = 6,
  /* Null handle or output pointer. */
  SEXTIC_ERR_ARGUMENT = 7
} sextic_status;

typedef enum sextic_format {
  SEXTIC_FORMAT_JSON = 0,
  SEXTIC_FORMAT_CSV = 1,
  SEXTIC_FORMAT_TEXT = 2
} sextic_format;

typedef enum sextic_witness_kind {
  SEXTIC_WITNESS_NEGATIVE_VALUE = 0,
  SEXTIC_WITNESS_SMALL_CORE_SEQUENCE = 1,
  SEXTIC_WITNESS_DEARTH_DIAGNOSTIC = 2,
  SEXTIC_WITNESS_INCONCLUSIVE = 3
} sextic_witness_kind;

typedef struct sextic_poly sextic_poly;
typedef struct sextic_report sextic_report;
typedef struct sextic_witness sextic_witness;

/* Search budgets; sextic_budget_default fills the documented defaults. */
typedef struct sextic_budget {
  int convergents;
  int64_t tmax;
  int64_t xmax;
  int64_t box;
  int family;
  int workers;
  /* Engines keep searching after the first negative value until F <= target. */
  int64_t target;
} sextic_budget;

typedef struct sextic_density_options {
  int workers;
  uint64_t memory_bits;
  /* 0 selects the certified or best-effort box automatically. */
  int64_t box;
  /* 0: presence bitmap, 1: sorted unique list. */
  int method;
} sextic_density_options;

SEXTIC_API const char* sextic_version(void);
SEXTIC_API const char* sextic_last_error(void);
SEXTIC_API void sextic_string_free(char* s);

/* Polynomials: infix text such as "(y^2-x^3-x)^2 - y + 10", or the JSON
 * term format {"terms": [[i, j, "coeff"], ...]}. */
SEXTIC_API sextic_status sextic_poly_parse(const char* text, sextic_poly** out);
SEXTIC_API sextic_status sextic_poly_from_json(const char* json, sextic_poly** out);
SEXTIC_API sextic_status sextic_poly_to_string(const sextic_poly* p, char** out);
SEXTIC_API sextic_status sextic_poly_to_json(const sextic_poly* p, char** out);
SEXTIC_API sextic_status sextic_poly_eval(const sextic_poly* p, const char* x, const char* y,
                                          char** out);
SEXTIC_API void sextic_poly_free(sextic_poly* p);

/* Classification. */
SEXTIC_API sextic_status sextic_classify(const sextic_poly* p, sextic_report** out);
SEXTIC_API sextic_status sextic_report_route(const sextic_report* r, char** out);
SEXTIC_API sextic_status sextic_report_json(const sextic_report* r, char** out);
SEXTIC_API void sextic_report_free(sextic_report* r);

/* Witness search on the route of a classification report. */
SEXTIC_API void sextic_budget_default(sextic_budget* b);
SEXTIC_API sextic_status sextic_witness_find(const sextic_poly* p, const sextic_report* r,
                                             const sextic_budget* b, sextic_witness** out);
/* Empirical min of F / max(|x|,|y|)^(1+delta) over the box; not a proof. */
SEXTIC_API sextic_status sextic_witness_growth(const sextic_poly* p, const char* delta,
                                               int64_t box, sextic_witness** out);
SEXTIC_API sextic_status sextic_witness_kind_of(const sextic_witness* w, sextic_witness_kind* out);
SEXTIC_API sextic_status sextic_witness_json(const sextic_witness* w, char** out);
/* Sets *ok to 1 when every recorded value re-evaluates exactly. */
SEXTIC_API sextic_status sextic_witness_verify(const sextic_poly* p, const sextic_witness* w,
                                               int* ok);
SEXTIC_API void sextic_witness_free(sextic_witness* w);

/* Density reports (JSON schema "1"; stanley also as CSV). */
SEXTIC_API void sextic_density_options_default(sextic_density_options* o);
SEXTIC_API sextic_status sextic_density_count(const sextic_poly* p, int64_t n,
                                              const sextic_density_options* o, char** out);
SEXTIC_API sextic_status sextic_density_growth(const sextic_poly* p, const int64_t* ns,
                                               size_t count, int workers, char** out);
SEXTIC_API sextic_status sextic_density_landau(int64_t n_max, uint64_t memory_bits, char** out);
SEXTIC_API sextic_status sextic_density_stanley(const sextic_poly* p, const int64_t* ns,
                                                size_t count, const sextic_density_options* o,
                                                sextic_format format, char** out);

/* Curve families. Integers are decimal strings so they are not limited to
 * 64 bits. */
SEXTIC_API sextic_status sextic_curve_rouse(const char* b1, const char* b0, int64_t r_from,
                                            int64_t r_to, sextic_format format, char** out);
SEXTIC_API sextic_status sextic_curve_danilov(int count, sextic_format format, char** out);
SEXTIC_API sextic_status sextic_curve_hall(const char* xmax, const char* threshold, int workers,
                                           sextic_format format, char** out);
SEXTIC_API sextic_status sextic_curve_pell(const char* d, const char* c, int count,
                                           sextic_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SEXTIC_SEXTIC_H */
