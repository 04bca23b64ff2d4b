#ifndef CONDLAB_H
#define CONDLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CL_API __declspec(dllexport)
#else
#define CL_API __attribute__((visibility("default")))
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_PARSE = 1,
  CL_ERR_CONTEXT = 2,
  CL_ERR_PRECONDITION = 3,
  CL_ERR_LIMIT = 4,       /* degree, exponent or iteration cap */
  CL_ERR_CERTIFICATE = 5, /* nodality or genericity certificate failed */
  CL_ERR_RETRY = 6,       /* retry budget exhausted */
  CL_ERR_INTERNAL = 7,
  CL_ERR_ARGUMENT = 8,    /* null handle or bad argument */
  CL_ERR_IO = 9
} cl_status;

typedef struct cl_ring cl_ring;
typedef struct cl_ideal cl_ideal;
typedef struct cl_curve cl_curve;
typedef struct cl_reports cl_reports;

typedef struct cl_options {
  uint64_t seed;     /* 0 means 1 */
  uint32_t prime;    /* 0 means 32003 */
  int degree_cap;    /* 0: default for the ring, chosen per statement in verify */
  int lines;         /* 0: statement default */
  int degree;        /* 0: statement default */
  int m;             /* 0: statement default */
} cl_options;

CL_API const char* cl_version(void);
/* Message of the last failed call on this thread ("" if none). */
CL_API const char* cl_last_error(void);
CL_API const char* cl_status_name(cl_status status);
/* Frees any string returned through a char** out-parameter. */
CL_API void cl_string_free(char* s);

/* --- rings --- */
CL_API cl_status cl_ring_parse(const char* header, int degree_cap, cl_ring** out);
CL_API cl_status cl_ring_standard(int num_vars, uint32_t prime, int degree_cap, cl_ring** out);
CL_API uint32_t cl_ring_prime(const cl_ring* ring);
CL_API int cl_ring_num_vars(const cl_ring* ring);
CL_API void cl_ring_free(cl_ring* ring);

/* --- ideals --- */
CL_API cl_status cl_ideal_create(const cl_ring* ring, const char* const* generators, size_t count, cl_ideal** out);
/* Ring header plus `generator:` lines, or a curve fixture (principal ideal of its form). */
CL_API cl_status cl_ideal_parse(const char* text, int degree_cap, cl_ideal** out);
CL_API cl_status cl_ideal_load(const char* path, int degree_cap, cl_ideal** out);
/* Same generators with coefficients reinterpreted modulo another prime. */
CL_API cl_status cl_ideal_with_prime(const cl_ideal* ideal, uint32_t prime, cl_ideal** out);
CL_API void cl_ideal_free(cl_ideal* ideal);
CL_API size_t cl_ideal_num_generators(const cl_ideal* ideal);
CL_API cl_status cl_ideal_generator(const cl_ideal* ideal, size_t index, char** out);
CL_API cl_status cl_ideal_contains(const cl_ideal* ideal, const char* polynomial, int* out);
CL_API cl_status cl_ideal_equal(const cl_ideal* a, const cl_ideal* b, int* out);
CL_API cl_status cl_ideal_sum(const cl_ideal* a, const cl_ideal* b, cl_ideal** out);
CL_API cl_status cl_ideal_product(const cl_ideal* a, const cl_ideal* b, cl_ideal** out);
CL_API cl_status cl_ideal_intersect(const cl_ideal* a, const cl_ideal* b, cl_ideal** out);
CL_API cl_status cl_ideal_quotient(const cl_ideal* a, const cl_ideal* b, cl_ideal** out);
/* Saturation with respect to the irrelevant ideal. */
CL_API cl_status cl_ideal_saturate(const cl_ideal* ideal, cl_ideal** out);
CL_API cl_status cl_ideal_codimension(const cl_ideal* ideal, int* out);

/* Reduced Gröbner basis, one element per line; `trace` appends the S-pair log. */
CL_API cl_status cl_ideal_groebner(const cl_ideal* ideal, int trace, int json, char** out);
/* Minimal free resolution of S/I with its differentials. */
CL_API cl_status cl_ideal_resolve(const cl_ideal* ideal, int json, char** out);
/* Graded Betti table of I (not S/I) and reg I. */
CL_API cl_status cl_ideal_betti(const cl_ideal* ideal, int json, char** out);
CL_API cl_status cl_ideal_hilbert(const cl_ideal* ideal, int max_degree, int json, char** out);

/* --- curves --- */
CL_API cl_status cl_curve_parse(const char* text, const char* name, int degree_cap, cl_curve** out);
CL_API cl_status cl_curve_load(const char* path, int degree_cap, cl_curve** out);
/* Same curve with coefficients reinterpreted modulo another prime. */
CL_API cl_status cl_curve_with_prime(const cl_curve* curve, uint32_t prime, cl_curve** out);
CL_API void cl_curve_free(cl_curve* curve);
CL_API int cl_curve_degree(const cl_curve* curve);
CL_API int cl_curve_num_components(const cl_curve* curve);
CL_API cl_status cl_curve_conductor(const cl_curve* curve, uint64_t seed, int json, char** out);

/* --- verification --- */
CL_API size_t cl_statement_count(void);
CL_API const char* cl_statement_id(size_t index);
CL_API cl_status cl_verify_statement(const char* id, const cl_options* options, cl_reports** out);
CL_API cl_status cl_verify_all(const cl_options* options, cl_reports** out);
CL_API cl_status cl_verify_curve(const cl_curve* curve, uint64_t seed, cl_reports** out);

CL_API cl_status cl_reports_create(cl_reports** out);
/* Moves every report of `src` to the end of `dst`; `src` is left empty. */
CL_API cl_status cl_reports_append(cl_reports* dst, cl_reports* src);
/* Adds `note` to every report in the set. */
CL_API cl_status cl_reports_annotate(cl_reports* reports, const char* note);
CL_API void cl_reports_free(cl_reports* reports);
CL_API size_t cl_reports_count(const cl_reports* reports);
CL_API int cl_reports_all_pass(const cl_reports* reports);
CL_API const char* cl_report_statement(const cl_reports* reports, size_t index);
CL_API int cl_report_pass(const cl_reports* reports, size_t index);
CL_API uint32_t cl_report_prime(const cl_reports* reports, size_t index);
CL_API cl_status cl_report_text(const cl_reports* reports, size_t index, char** out);
/* Versioned document {"schema": 1, "reports": [...]}. */
CL_API cl_status cl_reports_json(const cl_reports* reports, char** out);

#ifdef __cplusplus
}
#endif

#endif
