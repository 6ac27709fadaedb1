#ifndef SFK_SFK_H
#define SFK_SFK_H

/* C interface of libsfk. Every function returns an sfk_status; on failure
   sfk_last_error() gives the message for the calling thread. Strings handed
   out by the library are released with sfk_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SFK_API __declspec(dllexport)
#else
#define SFK_API __attribute__((visibility("default")))
#endif

typedef enum sfk_status {
  SFK_OK = 0,
  SFK_INVALID_ARGUMENT = 1,
  SFK_DIMENSION_MISMATCH = 2,
  SFK_PRECONDITION = 3,
  SFK_PARSE = 4,
  SFK_IO = 5,
  SFK_CHECK_FAILED = 6,
  SFK_INTERNAL = 7
} sfk_status;

typedef struct sfk_config sfk_config;
typedef struct sfk_report sfk_report;
typedef struct sfk_model sfk_model;
typedef struct sfk_class sfk_class;

SFK_API const char* sfk_version(void);
SFK_API const char* sfk_last_error(void);
SFK_API const char* sfk_status_name(sfk_status status);
SFK_API void sfk_string_free(char* s);

/* configuration */
SFK_API sfk_status sfk_config_new(sfk_config** out);
SFK_API sfk_status sfk_config_parse(const char* text, sfk_config** out);
SFK_API sfk_status sfk_config_load(const char* path, sfk_config** out);
/* key is "section.name" */
SFK_API sfk_status sfk_config_set(sfk_config* cfg, const char* key, const char* value);
SFK_API sfk_status sfk_config_ini(const sfk_config* cfg, char** out);
SFK_API void sfk_config_free(sfk_config* cfg);

/* pipeline; a run whose checks fail still returns SFK_OK with exit code 1 */
SFK_API size_t sfk_subcommand_count(void);
SFK_API const char* sfk_subcommand_name(size_t index);
SFK_API sfk_status sfk_run(const char* subcommand, const sfk_config* cfg, sfk_report** out);
SFK_API int sfk_report_exit_code(const sfk_report* report);
/* NULL when every check passed */
SFK_API const char* sfk_report_failed_check(const sfk_report* report);
SFK_API sfk_status sfk_report_json(const sfk_report* report, int indent, char** out);
SFK_API sfk_status sfk_report_write(const sfk_report* report, const char* path);
SFK_API void sfk_report_free(sfk_report* report);

/* surfaces and classes; rationals cross the boundary as "p/q" strings */
SFK_API sfk_status sfk_model_new(int genus, int degree, int blowups, sfk_model** out);
SFK_API int sfk_model_signature(const sfk_model* model);
SFK_API int sfk_model_euler_characteristic(const sfk_model* model);
SFK_API int sfk_model_c1_squared(const sfk_model* model);
SFK_API void sfk_model_free(sfk_model* model);

/* weights is a comma separated list; b may be NULL for the admissible value */
SFK_API sfk_status sfk_class_new(const sfk_model* model, const char* fiber_area, const char* b, const char* weights,
                                 sfk_class** out);
SFK_API sfk_status sfk_class_b(const sfk_class* cls, char** out);
SFK_API sfk_status sfk_class_admissible(const sfk_model* model, const sfk_class* cls, int* admissible);
SFK_API void sfk_class_free(sfk_class* cls);

SFK_API sfk_status sfk_futaki_via_weights(const sfk_model* model, const sfk_class* cls, char** out);
SFK_API sfk_status sfk_futaki_via_boundary(const sfk_model* model, const sfk_class* cls, char** out);
/* 1 when an admissible Futaki-zero class exists for (k, m) */
SFK_API sfk_status sfk_futaki_zero_class_exists(const sfk_model* model, int* exists);
SFK_API sfk_status sfk_quasi_stable(int degree, const char* weights, const char* alpha, int* stable);

#ifdef __cplusplus
}
#endif

#endif
