/* C interface to the liewave spectral wave solver.
 *
 * Every call returns an lw_status. On failure, lw_last_error() returns a
 * message for the calling thread, valid until that thread's next call.
 * Strings handed out through char** parameters are owned by the caller and
 * released with lw_string_free. Handles are opaque and released with their
 * matching *_free function; passing NULL to a *_free function is a no-op.
 */
#ifndef LIEWAVE_H
#define LIEWAVE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LIEWAVE_BUILDING_LIBRARY)
#define LW_API __declspec(dllexport)
#else
#define LW_API __declspec(dllimport)
#endif
#else
#define LW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lw_status {
  LW_OK = 0,
  LW_INVALID_ARGUMENT = 1,
  LW_DOMAIN = 2,         /* parameter outside an admissible range */
  LW_STABILITY = 3,      /* time step violates the explicit guard */
  LW_CONFIG = 4,         /* config validation; message starts with a JSON pointer */
  LW_IO = 5,
  LW_VERIFICATION = 6,   /* a numerical oracle disagreed */
  LW_INTERNAL = 99
} lw_status;

typedef struct lw_symbol lw_symbol;
typedef struct lw_profile lw_profile;

LW_API const char* lw_version(void);
LW_API const char* lw_last_error(void);
LW_API void lw_string_free(char* s);

/* Representation theory ------------------------------------------------- */

/* Wigner matrix of spin two_ell/2 at z-y-z Euler angles, theta in [0, pi]. `out` receives
 * (two_ell+1)^2 complex entries, row-major, as interleaved re, im pairs;
 * `len` is the number of doubles available. */
LW_API lw_status lw_wigner_matrix(int two_ell, double phi, double theta, double psi, double* out, size_t len);

/* Symbols ---------------------------------------------------------------- */

/* op: "laplacian" or "sublaplacian"; spins 2*ell <= two_lmax. */
LW_API lw_status lw_symbol_create_su2(const char* op, int two_lmax, lw_symbol** out);
/* Laplacian on the torus of dimension `dim`, characters with max|k_i| <= kmax. */
LW_API lw_status lw_symbol_create_torus(int kmax, int dim, lw_symbol** out);
LW_API void lw_symbol_free(lw_symbol* s);
LW_API lw_status lw_symbol_hormander_order(const lw_symbol* s, int* r);
/* nu_j^2 for the SU(2) spin two_ell/2; `len` must be at least two_ell + 1. */
LW_API lw_status lw_symbol_nu_squared(const lw_symbol* s, int two_ell, double* out, size_t len);

/* Oracle comparison (sub-Laplacian) plus Hormander bounds of order r
 * (r <= 0 uses the operator's own order). *report is a JSON document. */
LW_API lw_status lw_verify_symbol(const char* op, int two_lmax, int r, uint64_t seed, char** report, int* pass);

/* Speed profiles --------------------------------------------------------- */

/* key: constant, two_plus_sin, one_plus_holder, t_squared, sin4,
 * holder_degenerate. T <= 0 selects the profile's default horizon. */
LW_API lw_status lw_profile_create(const char* key, double alpha, double T, double shift, int smoothness,
                                   lw_profile** out);
LW_API void lw_profile_free(lw_profile* p);
LW_API lw_status lw_profile_eval(const lw_profile* p, double t, double* a);
LW_API lw_status lw_profile_info(const lw_profile* p, int* case_tag, double* T, double* sup_a);

/* Scalar modes ----------------------------------------------------------- */

/* v'' + a(t) nu^2 v = 0 to time T with RK4 step <= dt. v0, v1, v_out and
 * vt_out are complex numbers as {re, im}. */
LW_API lw_status lw_integrate_mode(const lw_profile* p, double nu, const double v0[2], const double v1[2], double T,
                                   double dt, double v_out[2], double vt_out[2]);
/* Propagator Phi(t) on V = (i nu v, v'), 2x2 complex row-major, 8 doubles. */
LW_API lw_status lw_mode_propagator(const lw_profile* p, double nu, double t, double dt, double out[8]);

/* Experiments ------------------------------------------------------------ */

/* Runs a JSON config. Files are written to out_dir when it is non-NULL;
 * *report (optional) receives report.json. seed < 0 keeps the config seed. */
LW_API lw_status lw_run_config(const char* config_json, const char* out_dir, int64_t seed, int workers,
                               char** report);
/* Validates a config without running it; *normalized gets the filled-in
 * config, *hash its SHA-256. Either pointer may be NULL. */
LW_API lw_status lw_check_config(const char* config_json, char** normalized, char** hash);

/* name: symbol, plancherel, hormander, embedding, torus, case1 .. case4. */
LW_API lw_status lw_run_battery(const char* name, uint64_t seed, int workers, char** report, int* pass);

/* Gevrey propagation run for a Case 2-4 profile. Fails with LW_DOMAIN when
 * s is outside the admissible interval of the profile's case. */
LW_API lw_status lw_gevrey_experiment(const lw_profile* p, double s, double data_A, int two_lmax, uint64_t seed,
                                      int workers, char** report, int* pass);

#ifdef __cplusplus
}
#endif

#endif
