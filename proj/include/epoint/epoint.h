/* C interface to the epoint library: opaque model handles, status codes,
 * and text reports for the analysis commands. */
#ifndef EPOINT_H
#define EPOINT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EPOINT_BUILDING)
#    define EPOINT_API __declspec(dllexport)
#  else
#    define EPOINT_API __declspec(dllimport)
#  endif
#else
#  define EPOINT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum epoint_status {
    EPOINT_OK = 0,
    EPOINT_E_INVALID_ARGUMENT = 1,
    EPOINT_E_CONFIG = 2,
    EPOINT_E_DEGENERATE_MODEL = 3,
    EPOINT_E_PRECONDITION = 4,
    EPOINT_E_DISAGREEMENT = 5,
    EPOINT_E_PATH_DEGENERACY = 6,
    EPOINT_E_TRACKING_FAILURE = 7,
    EPOINT_E_INTERNAL = 99
} epoint_status;

typedef struct epoint_complex {
    double re;
    double im;
} epoint_complex;

typedef struct epoint_params {
    double eps1, eps2;
    double omega1, omega2;
    double phi0, tau0;
    double phi1, tau1;
} epoint_params;

/* Branch selector: +1 or -1. */
typedef int epoint_branch;

typedef struct epoint_ep {
    epoint_complex lambda_c;
    epoint_complex e_c;
    epoint_complex vec_upper; /* coalesced eigenvector, lower component real */
    epoint_complex vec_lower;
} epoint_ep;

typedef struct epoint_model epoint_model;
typedef struct epoint_report epoint_report;

/* Message for the most recent failure on the calling thread. */
EPOINT_API const char* epoint_last_error(void);
EPOINT_API const char* epoint_version(void);

EPOINT_API epoint_status epoint_model_create(const epoint_params* params, epoint_model** out);
EPOINT_API epoint_status epoint_model_from_json(const char* json, epoint_model** out);
EPOINT_API void epoint_model_destroy(epoint_model* model);
/* Canonicalized parameters (angles in [-pi, pi)). */
EPOINT_API epoint_status epoint_model_params(const epoint_model* model, epoint_params* out);

/* Row-major 2x2: out[0]=h11, out[1]=h12, out[2]=h21, out[3]=h22. */
EPOINT_API epoint_status epoint_hamiltonian(const epoint_model* model, epoint_complex lambda,
                                            epoint_complex out[4]);
EPOINT_API epoint_status epoint_unitary(double phi, double tau, epoint_complex out[4]);

/* Eigenvalues of H(lambda) in lexicographic order. */
EPOINT_API epoint_status epoint_eigenvalues(const epoint_model* model, epoint_complex lambda,
                                            epoint_complex out[2]);

/* Both EPs from the general closed form, plus branch first. */
EPOINT_API epoint_status epoint_find_eps(const epoint_model* model, epoint_ep out[2]);

EPOINT_API epoint_status epoint_phases(const epoint_model* model, double* gamma, double* beta,
                                       double* xi);

/* Stokes-style reading of a Jones vector: axial ratio in [0,1], handedness
 * +1 / -1 / 0 (linear). */
EPOINT_API epoint_status epoint_polarization(epoint_complex upper, epoint_complex lower,
                                             double* axial_ratio, int* handedness);

/* Branch permutation after one loop: 0 identity, 1 swap. */
EPOINT_API epoint_status epoint_encircle(const epoint_model* model, epoint_complex center,
                                         double radius, int steps, int* permutation,
                                         double* min_gap);

/* Runs "find-ep", "vector", "sweep" or "encircle" on a JSON config.
 * `seed` overrides the config seed when `has_seed` is nonzero. A report is
 * produced (and must be destroyed) whenever *out is non-null on return, even
 * for failing statuses; it then carries the diagnostic message. */
EPOINT_API epoint_status epoint_run(const char* command, const char* config_json, int has_seed,
                                    uint64_t seed, epoint_report** out);
EPOINT_API const char* epoint_report_primary(const epoint_report* report);
EPOINT_API const char* epoint_report_secondary(const epoint_report* report);
EPOINT_API const char* epoint_report_message(const epoint_report* report);
EPOINT_API void epoint_report_destroy(epoint_report* report);

#ifdef __cplusplus
}
#endif

#endif /* EPOINT_H */
