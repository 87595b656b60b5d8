#ifndef HOPFGS_H
#define HOPFGS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a call.
typedef enum HopfgsStatus {
  HOPFGS_STATUS_OK = 0,
  // The computation ran and produced a report, but a check failed.
  HOPFGS_STATUS_CHECK_FAILED = 1,
  HOPFGS_STATUS_NULL_ARGUMENT = 2,
  HOPFGS_STATUS_INVALID_UTF8 = 3,
  // Bad arguments, malformed input or an unsupported parameter.
  HOPFGS_STATUS_INVALID_INPUT = 4,
  HOPFGS_STATUS_BUDGET_EXCEEDED = 5,
  // Any other computation error.
  HOPFGS_STATUS_COMPUTATION = 6,
  HOPFGS_STATUS_PANIC = 7,
} HopfgsStatus;

// Run options shared by every call on one engine.
typedef struct HopfgsEngine HopfgsEngine;

// A finite-dimensional measured algebra parsed from JSON.
typedef struct HopfgsMeasured HopfgsMeasured;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates an engine with seed 1 and JSON output. Free with
// [`hopfgs_engine_free`].
struct HopfgsEngine *hopfgs_engine_new(void);

// # Safety
// `engine` must come from [`hopfgs_engine_new`] and not be used afterwards.
void hopfgs_engine_free(struct HopfgsEngine *engine);

// Seed for randomized checks, used unless the arguments pass `--seed`.
//
// # Safety
// `engine` must be a live engine or null.
enum HopfgsStatus hopfgs_engine_set_seed(struct HopfgsEngine *engine, uint64_t seed);

// Selects the flat table rendering instead of JSON (nonzero = table).
//
// # Safety
// `engine` must be a live engine or null.
enum HopfgsStatus hopfgs_engine_set_table_format(struct HopfgsEngine *engine, int32_t table);

// Runs one command, given as the argument list of the command-line tool
// without the program name, e.g. `{"cohomology", "psl2", "--q", "2"}`.
//
// On [`HopfgsStatus::Ok`] and [`HopfgsStatus::CheckFailed`], `*out`
// receives the report. Otherwise `*out` is set to null.
//
// # Safety
// `engine` must be a live engine, `argv` must point to `argc` valid C
// strings and `out` must be writable.
enum HopfgsStatus hopfgs_run(const struct HopfgsEngine *engine,
                             const char *const *argv,
                             size_t argc,
                             char **out);

// Parses a measured algebra from the JSON input format
// (`{"dim", "mult", "unit", "phi"}`).
//
// # Safety
// `json` and `name` must be valid C strings and `out` writable.
enum HopfgsStatus hopfgs_measured_from_json(const char *name,
                                            const char *json,
                                            struct HopfgsMeasured **out);

// # Safety
// `algebra` must come from [`hopfgs_measured_from_json`] and not be used
// afterwards.
void hopfgs_measured_free(struct HopfgsMeasured *algebra);

// Dimension of the algebra, 0 for null.
//
// # Safety
// `algebra` must be live or null.
size_t hopfgs_measured_dim(const struct HopfgsMeasured *algebra);

// Normalizability report as JSON. Returns [`HopfgsStatus::CheckFailed`]
// (with the report) when the snake identities fail.
//
// # Safety
// `algebra` must be live and `out` writable.
enum HopfgsStatus hopfgs_measured_normalizability(const struct HopfgsMeasured *algebra, char **out);

// Message of the last failed call on this thread, or null. The pointer
// stays valid until the next call on the same thread; do not free it.
const char *hopfgs_last_error(void);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void hopfgs_string_free(char *s);

// Library version, a static string.
const char *hopfgs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFGS_H */
