/*
 * C interface to the goodsets library.
 *
 * Instances are opaque handles created from instance-file JSON and released
 * with gs_instance_free(). Every call returns a gs_status; on failure the
 * message for the calling thread is available from gs_last_error() until
 * the next call on that thread. Strings returned through out-parameters are
 * owned by the caller and released with gs_string_free().
 */
#ifndef GOODSETS_GOODSETS_H
#define GOODSETS_GOODSETS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GOODSETS_BUILDING)
#    define GS_API __declspec(dllexport)
#  else
#    define GS_API __declspec(dllimport)
#  endif
#else
#  define GS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gs_instance gs_instance;

/* Values double as CLI exit codes. */
typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_USAGE = 1,         /* null pointer or bad argument to the C API */
  GS_ERR_PRECONDITION = 2,  /* operation not applicable to the instance */
  GS_ERR_PARSE = 3,         /* malformed instance file or option */
  GS_ERR_INTERNAL = 4,      /* a self-check failed; always a bug */
  GS_ERR_IO = 5
} gs_status;

GS_API const char* gs_version(void);
GS_API const char* gs_last_error(void);
GS_API const char* gs_status_name(gs_status status);

GS_API gs_status gs_instance_parse(const char* json_text, gs_instance** out);
GS_API gs_status gs_instance_load(const char* path, gs_instance** out);
GS_API void gs_instance_free(gs_instance* instance);

GS_API gs_status gs_instance_point_count(const gs_instance* instance, size_t* out);
GS_API gs_status gs_instance_arity(const gs_instance* instance, size_t* out);
/* Canonical instance JSON (round-trips through gs_instance_parse). */
GS_API gs_status gs_instance_to_json(const gs_instance* instance, char** out);

/* Direct queries on the instance's point set. */
GS_API gs_status gs_is_good(const gs_instance* instance, int* good);
GS_API gs_status gs_is_full(const gs_instance* instance, int* full);
GS_API gs_status gs_deficiency(const gs_instance* instance, long* out);

/*
 * Runs a command (check-good, find-loop, is-full, fullify, split,
 * maximalize, components, geodesic, boundary, solve, simplicial, stats)
 * and returns its JSON report. options_json may be NULL or an object with
 * any of: "from", "to" (point indices), "method" (string), "pins" (string
 * "axis:value=rational,..."), "timing" (bool), "verify" (bool).
 */
GS_API gs_status gs_run(const gs_instance* instance, const char* command, const char* options_json,
                        char** report_json);

/* Writes the bundled example instances as <name>.json into dir. */
GS_API gs_status gs_emit_examples(const char* dir, size_t* count);

GS_API void gs_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GOODSETS_GOODSETS_H */
