/* C interface to the towers engine. All strings are UTF-8 and owned by the
 * library unless stated otherwise. */
#ifndef TOWERS_TOWERS_H
#define TOWERS_TOWERS_H

#include <stddef.h>

#if defined(TOWERS_BUILDING_LIBRARY)
#define TOWERS_API __attribute__((visibility("default")))
#else
#define TOWERS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tw_status {
  TW_OK = 0,
  TW_ERR_ARGUMENT = 1,    /* unknown name, malformed value */
  TW_ERR_DEGREE_CAP = 2,  /* degree above the tower or route cap */
  TW_ERR_COMPUTATION = 3, /* inconsistent data or failed self-check */
  TW_ERR_IO = 4,
  TW_ERR_INTERNAL = 5
} tw_status;

typedef struct tw_report tw_report;

typedef struct tw_check_request {
  const char* tower; /* "sym", "hecke0", "z2" */
  const char* check; /* "cond12", "cond3", "cond5", "cond5prime", "bialgebra",
                        "duality", "antipode", "pairing" */
  const char* group; /* "g0" or "k0"; NULL means g0 */
  const char* route; /* "auto", "character", "module", "combinatorial"; NULL means auto */
  int max_degree;
  int negative_control;
  int timing; /* nonzero fills elapsed_ms; otherwise it is 0 */
} tw_check_request;

typedef struct tw_table_request {
  const char* tower;
  const char* op; /* "product", "coproduct", "antipode", "pairing", "characters", "module-bases" */
  const char* group;
  const char* route;
  const int* degrees;
  size_t degree_count;
  const char* composition; /* "2,1" for module-bases; may be NULL */
} tw_table_request;

TOWERS_API const char* tw_version(void);

/* Message of the last failed call on this thread, "" if none. */
TOWERS_API const char* tw_last_error(void);

TOWERS_API tw_status tw_check(const tw_check_request* req, tw_report** out);
TOWERS_API tw_status tw_table(const tw_table_request* req, tw_report** out);

/* 1 when every cell holds (tables always pass). */
TOWERS_API int tw_report_passed(const tw_report* r);
/* Canonical text; valid until tw_report_free. */
TOWERS_API const char* tw_report_json(const tw_report* r);
TOWERS_API const char* tw_report_csv(const tw_report* r);
/* Writes the JSON or CSV text ("json" or "csv") to path. */
TOWERS_API tw_status tw_report_write(const tw_report* r, const char* format, const char* path);
TOWERS_API void tw_report_free(tw_report* r);

#ifdef __cplusplus
}
#endif

#endif
