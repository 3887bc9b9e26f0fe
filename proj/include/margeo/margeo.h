#ifndef MARGEO_MARGEO_H
#define MARGEO_MARGEO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef MARGEO_BUILDING_LIBRARY
#    define MARGEO_API __declspec(dllexport)
#  else
#    define MARGEO_API __declspec(dllimport)
#  endif
#else
#  define MARGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum margeo_status {
  MARGEO_OK = 0,
  MARGEO_ERR_PARSE = 1,
  MARGEO_ERR_INVALID_ARGUMENT = 2,
  MARGEO_ERR_PRECONDITION = 3,
  MARGEO_ERR_LIMIT = 4,
  MARGEO_ERR_IO = 5,
  MARGEO_ERR_INTERNAL = 6,
  MARGEO_ERR_NULL_ARGUMENT = 7
} margeo_status;

typedef struct margeo_complex margeo_complex;
typedef struct margeo_job margeo_job;
typedef struct margeo_report margeo_report;

/* Library version, e.g. "1.0.0". Static storage. */
MARGEO_API const char* margeo_version(void);

/* Message of the last failing call on this thread; "" if none. Valid until
   the next call on the same thread. */
MARGEO_API const char* margeo_last_error(void);

/* Frees strings returned through char** out-parameters. */
MARGEO_API void margeo_string_free(char* s);

MARGEO_API const char* margeo_status_name(margeo_status status);

/* Complexes: bracket notation ("[12][23]", "{1234}[12][23]") or a named
   shorthand such as "K4", "C5", "boundary-4". */
MARGEO_API margeo_status margeo_complex_parse(const char* text, margeo_complex** out);
MARGEO_API void margeo_complex_free(margeo_complex* complex);
MARGEO_API size_t margeo_complex_num_facets(const margeo_complex* complex);
MARGEO_API size_t margeo_complex_num_vertices(const margeo_complex* complex);
/* {"ground_set": [...], "facets": [[...], ...]} */
MARGEO_API margeo_status margeo_complex_to_json(const margeo_complex* complex, char** out);
/* Bracket notation of the normalized complex. */
MARGEO_API margeo_status margeo_complex_to_string(const margeo_complex* complex, char** out);

/* Jobs. Commands: matrix, facets, codegree, normality, gorenstein, wmlt,
   holes, decompose, fiber-check, scan, reproduce. */
MARGEO_API margeo_status margeo_job_new(const char* command, margeo_job** out);
MARGEO_API void margeo_job_free(margeo_job* job);
MARGEO_API margeo_status margeo_job_set_complex(margeo_job* job, const char* text);
/* State counts aligned with the ground set; count 0 restores the all-binary default. */
MARGEO_API margeo_status margeo_job_set_d(margeo_job* job, const int32_t* counts, size_t count);
/* Keys: k, m_max, lattice, method, max_degree, short_circuit, threads, cache,
   only, golden, n, dim, suite, d_value, timing. */
MARGEO_API margeo_status margeo_job_set_option(margeo_job* job, const char* key, const char* value);
MARGEO_API margeo_status margeo_job_run(const margeo_job* job, margeo_report** out);

MARGEO_API void margeo_report_free(margeo_report* report);
MARGEO_API margeo_status margeo_report_json(const margeo_report* report, char** out);
/* format: "json", "table", "both" or "csv" (matrix only). */
MARGEO_API margeo_status margeo_report_render(const margeo_report* report, const char* format, char** out);
/* 1 when the verdict is negative (not Gorenstein, not normal, drift, ...), 0 otherwise. */
MARGEO_API int margeo_report_negative(const margeo_report* report);
/* One-line verdict summary. */
MARGEO_API margeo_status margeo_report_verdict(const margeo_report* report, char** out);

#ifdef __cplusplus
}
#endif

#endif
