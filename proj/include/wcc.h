#ifndef WCC_H
#define WCC_H

#include <stddef.h>

#if defined(_WIN32)
#define WCC_API __declspec(dllexport)
#else
#define WCC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wcc_session wcc_session;

/* Values double as CLI exit codes. */
typedef enum wcc_status {
  WCC_OK = 0,
  WCC_ERR_USAGE = 1,        /* bad arguments or unparsable input */
  WCC_ERR_PRECONDITION = 2, /* input violates an operation's precondition */
  WCC_ERR_INTEGRITY = 3     /* an internal consistency check failed */
} wcc_status;

typedef enum wcc_format { WCC_FORMAT_TEXT = 0, WCC_FORMAT_STRUCTURED = 1 } wcc_format;

WCC_API wcc_session* wcc_session_new(void);
WCC_API void wcc_session_free(wcc_session* s);
/* Message of the last failed call on this session, or "". */
WCC_API const char* wcc_last_error(const wcc_session* s);
WCC_API void wcc_string_free(char* p);

/* Use this file instead of the bundled worked-example fixture. */
WCC_API wcc_status wcc_set_fixture_file(wcc_session* s, const char* path);
/* Add named curves, sections and arrangements from a file. */
WCC_API wcc_status wcc_add_input(wcc_session* s, const char* path);

/* A null or empty quartic means the worked-example quartic phiQ. */
/* Every command stores a report in *out (release with wcc_string_free).
   On failure *out is NULL, except for verify_example, which reports the
   failed checks and returns WCC_ERR_INTEGRITY. */
WCC_API wcc_status wcc_verify_example(wcc_session* s, wcc_format f, char** out);
WCC_API wcc_status wcc_fibers(wcc_session* s, const char* quartic, wcc_format f, char** out);
WCC_API wcc_status wcc_height(wcc_session* s, const char* const* sections, size_t n, const char* quartic,
                              wcc_format f, char** out);
WCC_API wcc_status wcc_group_op(wcc_session* s, const char* op, const char* const* args, size_t n,
                                const char* quartic, wcc_format f, char** out);
/* type 0 lists every type. */
WCC_API wcc_status wcc_enumerate(wcc_session* s, const char* case_id, int type, wcc_format f, char** out);
WCC_API wcc_status wcc_main_theorem(wcc_session* s, wcc_format f, char** out);
WCC_API wcc_status wcc_weak_contact(wcc_session* s, const char* quartic, const char* conic, wcc_format f,
                                    char** out);
/* n is 0 (bundled triangle) or 3. */
WCC_API wcc_status wcc_cremona(wcc_session* s, const char* curve, const char* const* triangle, size_t n,
                               wcc_format f, char** out);
/* pair is an id such as "B11-B21", or "all". */
WCC_API wcc_status wcc_zariski(wcc_session* s, const char* pair, wcc_format f, char** out);
/* One arrangement name, or a list of curves. */
WCC_API wcc_status wcc_fingerprint(wcc_session* s, const char* const* components, size_t n, wcc_format f,
                                   char** out);

#ifdef __cplusplus
}
#endif

#endif
