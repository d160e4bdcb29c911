/* C API of the monopole-spectra library: opaque handles, integer status
 * codes, and a full command-level entry point used by the CLI. All functions
 * are thread-safe; handles are independent and must be freed by the caller.
 */
#ifndef MONOPOLE_SPECTRA_H
#define MONOPOLE_SPECTRA_H

#include <stddef.h>

#if defined(_WIN32)
#define MS_API __declspec(dllexport)
#else
#define MS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ms_status {
  MS_OK = 0,
  MS_ERR_INVALID_ARGUMENT = 1, /* bad inputs / preconditions */
  MS_ERR_DOMAIN = 2,           /* singular point, invalid params domain */
  MS_ERR_NO_BOUND_STATE = 3,   /* quantization condition has no solution */
  MS_ERR_UNKNOWN_PRESET = 4,
  MS_ERR_INTERNAL = 5
} ms_status;

/* Model parameters (the eight couplings), opaque. */
typedef struct ms_params ms_params;

/* couplings order: a, b, c0, c1, c2, c3, c4, d */
MS_API ms_status ms_params_create(const double couplings[8], ms_params** out);
MS_API ms_status ms_params_preset(const char* name, ms_params** out);
MS_API void ms_params_destroy(ms_params* p);
MS_API ms_status ms_params_get(const ms_params* p, double couplings[8]);
MS_API ms_status ms_params_set(ms_params* p, const char* key, double value);
/* valid: 1/0; message receives the first violated condition on failure. */
MS_API ms_status ms_params_validate(const ms_params* p, int* valid,
                                    char* message, size_t message_size);

MS_API ms_status ms_metric_f(const ms_params* p, double r, double* out);
MS_API ms_status ms_metric_g(const ms_params* p, double r, double* out);
MS_API ms_status ms_gauge_potential(double x, double y, double z,
                                    double out[3]);

/* sector output order: delta1, delta2, m1, m2, q1, q2 */
MS_API ms_status ms_sector(const ms_params* p, double nu1, double nu2,
                           double out[6]);

typedef struct ms_level {
  double energy;
  double t;       /* sqrt(c4 - 2bE + d nu2^2) */
  double epsilon; /* 2t spherical, t parabolic */
  double level_number;
} ms_level;

MS_API ms_status ms_solve_parabolic(const ms_params* p, double nu1, double nu2,
                                    int n1, int n2, ms_level* out);
MS_API ms_status ms_solve_spherical(const ms_params* p, double nu1, double nu2,
                                    int n, int l, ms_level* out);
MS_API ms_status ms_solve_parabolic_bisect(const ms_params* p, double nu1,
                                           double nu2, int n1, int n2,
                                           ms_level* out);

/* Algebraic (Set-1/Set-2) energies; set in {1,2}, eps1/eps2 in {-1,+1}. */
MS_API ms_status ms_solve_algebraic(const ms_params* p, double nu1, double nu2,
                                    int p_level, int eps1, int eps2, int set,
                                    double* energy, double* u);

/* Finite-difference oracle: lowest n_eigen eigenvalues, ascending. */
MS_API ms_status ms_radial_eigen(const ms_params* p, double nu1, double nu2,
                                 double k1, int grid_n, double r_max,
                                 int n_eigen, double* eigenvalues);
MS_API ms_status ms_angular_eigen(const ms_params* p, double nu1, double nu2,
                                  int grid_n, int n_eigen, double* eigenvalues);

/* Runs a full CLI command (argv excludes the program name). Returns the
 * process-style exit code (0 pass, 1 verification failure, 2 usage error).
 * *out_text / *err_text receive malloc'd report and diagnostics strings
 * (either may come back NULL); free them with ms_string_free. */
MS_API int ms_run(int argc, const char* const* argv, char** out_text,
                  char** err_text);
MS_API void ms_string_free(char* s);

MS_API const char* ms_version(void);
MS_API const char* ms_status_name(ms_status s);

#ifdef __cplusplus
}
#endif

#endif /* MONOPOLE_SPECTRA_H */
