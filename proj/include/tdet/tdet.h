/*
 * tdet — sharp Toeplitz-determinant bounds for subordination classes on
 * p-ball domains in C^n.
 *
 * C interface over the C++ core: opaque handles, status-code returns, plain
 * structs for results.  Every function returns TDET_OK on success; on any
 * failure the out-parameters are left untouched and tdet_last_error() gives
 * a human-readable message for the calling thread.
 */
#ifndef TDET_H
#define TDET_H

#include <stdint.h>

#if defined(_WIN32)
#define TDET_API __declspec(dllexport)
#else
#define TDET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tdet_status {
    TDET_OK = 0,
    TDET_ERR_INVALID_ARGUMENT = 1,
    TDET_ERR_CONDITION_NOT_MET = 2,
    TDET_ERR_SINGULAR_JACOBIAN = 3,
    TDET_ERR_BOUND_VIOLATION = 4,
    TDET_ERR_INTERNAL = 5
} tdet_status;

typedef struct tdet_complex {
    double re;
    double im;
} tdet_complex;

/* Generator handle: derivative data d1 = phi'(0), d2 = phi''(0) plus the
 * Taylor series driving the subordination machinery. */
typedef struct tdet_phi tdet_phi;

TDET_API const char* tdet_status_name(tdet_status status);
TDET_API const char* tdet_last_error(void);

/* ---- generators ------------------------------------------------------- */

TDET_API tdet_status tdet_phi_halfplane(tdet_phi** out);
TDET_API tdet_status tdet_phi_order_alpha(double alpha, tdet_phi** out);
TDET_API tdet_status tdet_phi_strong_beta(double beta, tdet_phi** out);
/* Series coefficients c_0..c_{n_coeffs-1} with claimed d1, d2; the call
 * cross-validates d1 = c_1 and d2 = 2 c_2 to 1e-10.  n_coeffs >= 4. */
TDET_API tdet_status tdet_phi_custom(const tdet_complex* coeffs, int n_coeffs, double d1,
                                     double d2, tdet_phi** out);
TDET_API void tdet_phi_free(tdet_phi* phi);

TDET_API tdet_status tdet_phi_d1(const tdet_phi* phi, double* out);
TDET_API tdet_status tdet_phi_d2(const tdet_phi* phi, double* out);
/* Hypotheses of the 2x2 / 3x3 determinant bounds; 1 = holds. */
TDET_API tdet_status tdet_phi_condition_thm1(const tdet_phi* phi, int* out);
TDET_API tdet_status tdet_phi_condition_thm2(const tdet_phi* phi, int* out);

/* ---- determinants and closed-form bounds ------------------------------ */

TDET_API tdet_status tdet_det_t22(tdet_complex b2, tdet_complex b3, tdet_complex* out);
TDET_API tdet_status tdet_det_t31(tdet_complex b2, tdet_complex b3, tdet_complex* out);

/* force = 0: fail with TDET_ERR_CONDITION_NOT_MET outside the theorem's
 * hypothesis.  force != 0: evaluate the formula anyway (caller owns the
 * interpretation). */
TDET_API tdet_status tdet_bound_t22(const tdet_phi* phi, int force, double* out);
TDET_API tdet_status tdet_bound_t31(const tdet_phi* phi, int force, double* out);
TDET_API tdet_status tdet_bound_b2(const tdet_phi* phi, double* out);
/* Fekete-Szego bound, valid for every complex lambda. */
TDET_API tdet_status tdet_fs_bound(const tdet_phi* phi, tdet_complex lambda, double* out);

/* ---- p-ball domains ---------------------------------------------------- */

TDET_API tdet_status tdet_rho(int n, double p, const tdet_complex* z, double* out);
/* out must hold n entries. */
TDET_API tdet_status tdet_grad_rho(int n, double p, const tdet_complex* z, tdet_complex* out);

typedef struct tdet_lemma1_report {
    double max_euler;    /* 2 (d rho/d z) . z = rho */
    double max_boundary; /* normalization on the unit sphere */
    double max_scaling;  /* invariance under positive scaling */
    double max_rotation; /* e^{-i theta} covariance under rotation */
    int n_points;
} tdet_lemma1_report;

/* Worst residuals of the gradient identities over n_points seeded random
 * points in the domain. */
TDET_API tdet_status tdet_domain_check(int n, double p, int n_points, uint64_t seed,
                                       tdet_lemma1_report* out);

/* ---- extremal mapping verification ------------------------------------ */

typedef struct tdet_extremal_report {
    tdet_complex b2; /* directional coefficient; sharpness demands i d1 */
    tdet_complex b3; /* likewise -(d2 + 2 d1^2)/4 */
    double det22;    /* |2x2 determinant| at (b2, b3) */
    double det31;    /* |3x3 determinant| at (b2, b3) */
    double bound22;  /* closed-form bound values (formulas, unchecked) */
    double bound31;
    int thm1_ok;
    int thm2_ok;
} tdet_extremal_report;

/* Builds the bound-attaining mapping on the (n, p) ball and extracts its
 * directional coefficients along e_1.  order <= 0 selects the default 24. */
TDET_API tdet_status tdet_verify_extremal(const tdet_phi* phi, int n, double p, int order,
                                          tdet_extremal_report* out);

/* ---- slice-reduction check --------------------------------------------- */

typedef struct tdet_slice_report {
    double max_coeff_residual;   /* extractor vs direct slice coefficients */
    double max_pairing_residual; /* gradient pairing vs conjugate pairing (p = 2 only,
                                    0 otherwise) */
    int n_pairs;
} tdet_slice_report;

/* Random (member, direction) pairs on the (n, p) ball: the n-dimensional
 * coefficient extractor must reproduce each slice's series coefficients. */
TDET_API tdet_status tdet_slice_check(const tdet_phi* phi, int n, double p, int n_pairs,
                                      int max_zeros, uint64_t seed, int order,
                                      tdet_slice_report* out);

/* ---- search over the one-variable class -------------------------------- */

typedef enum tdet_functional {
    TDET_FUNCTIONAL_T22 = 0,
    TDET_FUNCTIONAL_T31 = 1
} tdet_functional;

#define TDET_MAX_ZEROS 8

typedef struct tdet_schwarz_params {
    double theta;
    int n_zeros; /* <= TDET_MAX_ZEROS */
    tdet_complex zeros[TDET_MAX_ZEROS];
} tdet_schwarz_params;

typedef struct tdet_search_result {
    double best_value;
    double bound;     /* closed-form value (meaningful iff bound_valid) */
    int bound_valid;  /* condition flag of the matching theorem */
    double gap;       /* bound - best_value */
    int64_t n_samples;
    uint64_t seed;
    tdet_schwarz_params best_params;
} tdet_search_result;

/* force = 0: a sample beyond bound + 1e-9 returns TDET_ERR_BOUND_VIOLATION
 * (it never should); force != 0 skips that assertion, for exploring
 * generators outside the theorem ranges. */
TDET_API tdet_status tdet_search_rotation(const tdet_phi* phi, tdet_functional functional,
                                          int n_theta, int order, int force,
                                          tdet_search_result* out);
TDET_API tdet_status tdet_search_random(const tdet_phi* phi, tdet_functional functional,
                                        int64_t n_samples, int max_zeros, uint64_t seed,
                                        int order, int force, tdet_search_result* out);
TDET_API tdet_status tdet_search_refine(const tdet_phi* phi, tdet_functional functional,
                                        const tdet_schwarz_params* start, int iters, int order,
                                        int force, tdet_search_result* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TDET_H */
