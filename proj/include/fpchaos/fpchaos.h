#ifndef FPCHAOS_H
#define FPCHAOS_H

#include <stddef.h>
#include <stdint.h>

#if defined(FPCHAOS_BUILDING_LIBRARY)
#define FPC_API __attribute__((visibility("default")))
#else
#define FPC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fpc_kernel fpc_kernel;

typedef enum fpc_status {
  FPC_OK = 0,
  FPC_INVALID_ARGUMENT = 1,
  FPC_SIZE_LIMIT = 2,
  FPC_DOMAIN = 3,
  FPC_GRID_MISMATCH = 4,
  FPC_NOT_MIRROR_SYMMETRIC = 5,
  FPC_PARSE = 6,
  FPC_IO = 7,
  FPC_INTERNAL = 8
} fpc_status;

typedef enum fpc_format { FPC_FORMAT_TEXT = 0, FPC_FORMAT_JSON = 1, FPC_FORMAT_CSV = 2 } fpc_format;
typedef enum fpc_measure { FPC_MEASURE_POISSON = 0, FPC_MEASURE_WIGNER = 1 } fpc_measure;
typedef enum fpc_method { FPC_METHOD_PRODUCT = 0, FPC_METHOD_DIAGRAM = 1, FPC_METHOD_TRACE = 2 } fpc_method;
typedef enum fpc_family_kind {
  FPC_FAMILY_INDICATOR = 0,
  FPC_FAMILY_PERTURBED_INDICATOR = 1,
  FPC_FAMILY_HYPERDIAGONAL = 2
} fpc_family_kind;

typedef struct fpc_family_params {
  fpc_family_kind kind;
  int q;
  int bins;
  double cell_width;
  double lambda; /* hyperdiagonal target norm */
  double eps0;   /* perturbed indicator amplitude */
  double rho;    /* perturbed indicator decay */
  uint64_t seed;
} fpc_family_params;

FPC_API const char* fpc_version(void);
FPC_API const char* fpc_status_name(fpc_status status);
/* Message of the last failure on the calling thread; "" if none. */
FPC_API const char* fpc_last_error(void);
/* Releases strings returned through char** out-parameters. */
FPC_API void fpc_string_free(char* s);

FPC_API void fpc_family_params_init(fpc_family_params* params);

/* Kernels. Handles are owned by the caller and released with fpc_kernel_free. */
FPC_API fpc_status fpc_kernel_load(const char* path, fpc_kernel** out);
FPC_API fpc_status fpc_kernel_parse(const char* json, fpc_kernel** out);
/* scale * indicator of the whole grid. */
FPC_API fpc_status fpc_kernel_indicator(int q, int bins, double cell_width, double scale, fpc_kernel** out);
/* Seeded real mirror-symmetric noise with entries in [-1, 1]. */
FPC_API fpc_status fpc_kernel_random(int q, int bins, double cell_width, uint64_t seed, fpc_kernel** out);
FPC_API fpc_status fpc_kernel_family_member(const fpc_family_params* params, int n, fpc_kernel** out);
FPC_API void fpc_kernel_free(fpc_kernel* kernel);
FPC_API fpc_status fpc_kernel_info(const fpc_kernel* kernel, int* q, int* bins, double* cell_width);
FPC_API fpc_status fpc_kernel_norm2(const fpc_kernel* kernel, double* out);
FPC_API fpc_status fpc_kernel_is_mirror_symmetric(const fpc_kernel* kernel, int* out);
FPC_API fpc_status fpc_kernel_to_json(const fpc_kernel* kernel, char** out);

/* Counts and closed forms. */
FPC_API fpc_status fpc_nc_count(int n, uint64_t* out);
FPC_API fpc_status fpc_nc0_counts(int m, int q, uint64_t* pairings, uint64_t* large_blocks, uint64_t* at_least_two);
/* counts[j] = R_{m,j} for j < len; total may be NULL. */
FPC_API fpc_status fpc_riordan_counts(int m, uint64_t* counts, size_t len, uint64_t* total);
FPC_API fpc_status fpc_free_poisson_moment(double lambda, int m, double* out);
FPC_API fpc_status fpc_semicircular_moment(double lambda, int m, double* out);

/* Moments and statistics. */
FPC_API fpc_status fpc_moment(const fpc_kernel* kernel, int m, fpc_method method, fpc_measure measure,
                              double* re, double* im);
FPC_API fpc_status fpc_fourth_moment_statistic(const fpc_kernel* kernel, fpc_measure measure, double* out);
FPC_API fpc_status fpc_identity_check(const fpc_kernel* kernel, double tol, double* lhs, double* rhs, int* holds);

/* Reports, rendered in the requested format into *out. */
FPC_API fpc_status fpc_report_nc(int n, int with_listing, fpc_format format, char** out);
FPC_API fpc_status fpc_report_nc0(int m, int q, int with_listing, fpc_format format, char** out);
FPC_API fpc_status fpc_report_riordan(int m, fpc_format format, char** out);
FPC_API fpc_status fpc_report_moments(const fpc_kernel* kernel, int m, const fpc_method* methods, size_t n_methods,
                                      fpc_measure measure, fpc_format format, char** out);
FPC_API fpc_status fpc_report_identity(const fpc_kernel* kernel, double tol, fpc_format format, char** out);
FPC_API fpc_status fpc_report_indicator(const fpc_kernel* kernel, int max_m, double tol, fpc_format format,
                                        char** out);
FPC_API fpc_status fpc_report_converge(const fpc_family_params* params, int steps, int M, double tol,
                                       fpc_format format, char** out);
FPC_API fpc_status fpc_report_transfer(const fpc_kernel* kernel, int M, double tol, fpc_format format, char** out);
/* Members 1..steps of the family, diagrams of order m. */
FPC_API fpc_status fpc_report_tamedness(const fpc_family_params* params, int steps, int m, double threshold,
                                        fpc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
