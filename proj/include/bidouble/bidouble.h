/* C interface to the bidouble library.
 *
 * Every function returning bd_status reports failures through the code and
 * leaves a human-readable message in bd_last_error() for the calling thread.
 * Objects handed out through pointer-to-pointer arguments are owned by the
 * caller and released with the matching *_free / *_close function.
 */
#ifndef BIDOUBLE_H
#define BIDOUBLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BIDOUBLE_BUILDING_LIBRARY)
#    define BD_API __declspec(dllexport)
#  else
#    define BD_API __declspec(dllimport)
#  endif
#else
#  define BD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bd_status {
  BD_OK = 0,
  BD_E_CONSTRAINT_VIOLATION = 1,
  BD_E_OUT_OF_RANGE = 2,
  BD_E_OVERFLOW = 3,
  BD_E_NOT_COMPARABLE = 4,
  BD_E_INVALID_MEMBER = 5,
  BD_E_NOT_CATANESE = 6,
  BD_E_MULT_TOO_SMALL = 7,
  BD_E_NEGATIVE_NODES = 8,
  BD_E_BOUND_TOO_LARGE = 9,
  BD_E_INVALID_ARGUMENT = 10,
  BD_E_IO = 11,
  BD_E_SCHEMA_MISMATCH = 12,
  BD_E_BASELINE_MISMATCH = 13, /* reference example drifted from its baseline */
  BD_E_INTERNAL = 99
} bd_status;

typedef enum bd_format { BD_FORMAT_JSON = 0, BD_FORMAT_CSV = 1 } bd_format;

typedef enum bd_diffeo_verdict {
  BD_NOT_DIFFEOMORPHIC = 0,
  BD_INCONCLUSIVE = 1
} bd_diffeo_verdict;

typedef struct bd_cover_type {
  int64_t a;
  int64_t b;
  int64_t m2;
  int64_t n2;
} bd_cover_type;

typedef struct bd_surface_invariants {
  int64_t u, v, w, z;
  int64_t kk;
  int64_t chi;
  int64_t euler;
  int64_t sigma;
  int64_t b2;
  int64_t b_plus;
  int64_t b_minus;
  int64_t p_g;
  int64_t r;
} bd_surface_invariants;

typedef struct bd_search_config {
  int64_t bound;
  int64_t k;
  size_t max_results; /* 0 means no limit */
  size_t shard_count;
} bd_search_config;

typedef struct bd_document bd_document;
typedef struct bd_search bd_search;
typedef struct bd_catalog bd_catalog;

BD_API const char* bd_status_name(bd_status status);
BD_API const char* bd_last_error(void);
BD_API const char* bd_version(void);

/* Scalar queries. Types are validated against the default field cap. */
BD_API bd_status bd_validate_type(const bd_cover_type* type, bd_cover_type* canonical_out);
BD_API bd_status bd_compute_invariants(const bd_cover_type* type, bd_surface_invariants* out);
BD_API bd_status bd_are_homeomorphic(const bd_cover_type* lhs, const bd_cover_type* rhs,
                                     int* out);
BD_API bd_status bd_diffeo_obstruction(const bd_cover_type* lhs, const bd_cover_type* rhs,
                                       bd_diffeo_verdict* out);

/* Documents carry rendered output (JSON or CSV) and the catalog records the
 * result maps to. On a domain error *out still receives a document: the
 * error payload, or for bd_check_tuple_document the failing verdict. */
BD_API bd_status bd_invariants_document(const bd_cover_type* type, bd_format format,
                                        bd_document** out);
BD_API bd_status bd_check_pair_document(const bd_cover_type* lhs, const bd_cover_type* rhs,
                                        bd_format format, bd_document** out);
BD_API bd_status bd_check_tuple_document(const bd_cover_type* types, size_t count,
                                         bd_format format, bd_document** out);
BD_API bd_status bd_discriminant_document(const bd_cover_type* type, const int64_t* mults,
                                          size_t mult_count, bd_format format,
                                          bd_document** out);
BD_API bd_status bd_certify_document(const bd_cover_type* types, size_t count,
                                     const int64_t* mults, size_t mult_count,
                                     bd_format format, bd_document** out);
BD_API bd_status bd_verify_paper_example_document(const int64_t* mults, size_t mult_count,
                                                  bd_format format, bd_document** out);

BD_API const char* bd_document_text(const bd_document* doc);
BD_API size_t bd_document_record_count(const bd_document* doc);
BD_API void bd_document_free(bd_document* doc);

/* Catanese tuple search. */
BD_API bd_status bd_search_run(const bd_search_config* config, bd_search** out);
BD_API size_t bd_search_tuple_count(const bd_search* search);
/* Copies up to `capacity` members of tuple `index`; returns the tuple size. */
BD_API size_t bd_search_tuple_members(const bd_search* search, size_t index,
                                      bd_cover_type* members, int64_t* indices,
                                      size_t capacity);
BD_API int bd_search_truncated(const bd_search* search);
BD_API bd_status bd_search_document(const bd_search* search, bd_format format,
                                    bd_document** out);
BD_API void bd_search_free(bd_search* search);

/* JSONL catalog. One writer per path; a second open on a held path fails
 * with BD_E_IO. */
BD_API bd_status bd_catalog_open(const char* path, int with_timestamp, bd_catalog** out);
BD_API bd_status bd_catalog_append(bd_catalog* catalog, const bd_document* doc);
BD_API void bd_catalog_close(bd_catalog* catalog);
/* Reads a catalog back as a JSON array of records. */
BD_API bd_status bd_catalog_read(const char* path, bd_document** out);

#ifdef __cplusplus
}
#endif

#endif /* BIDOUBLE_H */
