// Copyright 2026 The gtso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the gtso library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a gtso_status; on failure gtso_last_error()
 * describes the cause for the calling thread. 4x4 matrices are row-major in
 * the mode basis (q1, p1, q2, p2). */

#ifndef GTSO_GTSO_H_
#define GTSO_GTSO_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GTSO_API __declspec(dllexport)
#else
#define GTSO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  GTSO_OK = 0,
  GTSO_ERR_INVALID_ARGUMENT = 1,
  GTSO_ERR_DETERMINANT = 2,
  GTSO_ERR_NONPOSITIVE_DIAGONAL = 3,
  GTSO_ERR_EMPTY_SEQUENCE = 4,
  GTSO_ERR_LOG_DOMAIN = 5,
  GTSO_ERR_NOT_HERMITIAN = 6,
  GTSO_ERR_ZERO_STATE = 7,
  GTSO_ERR_INVALID_CONFIG = 8,
  GTSO_ERR_WORK_CUTOFF = 9,
  GTSO_ERR_INTERNAL = 10
} gtso_status;

typedef enum { GTSO_FORM_OPTICAL = 0, GTSO_FORM_SU11 = 1 } gtso_form;

typedef enum {
  GTSO_FORMS_OPTICAL = 0,
  GTSO_FORMS_SU11 = 1,
  GTSO_FORMS_BOTH = 2
} gtso_form_selection;

typedef struct {
  double a, b, c, d;
} gtso_abcd;

typedef struct {
  int n_max;
  int margin;
  double tol;
  /* Working cutoff per collective mode; 0 selects it automatically. */
  int work_cutoff;
} gtso_truncation;

/* Fidelity deficit, phase deviation (rad) and amplitude-ratio deviation. */
typedef struct {
  double deficit;
  double phase;
  double ratio;
} gtso_comparison;

typedef struct gtso_sequence gtso_sequence;
typedef struct gtso_state gtso_state;
typedef struct gtso_report gtso_report;
typedef struct gtso_sweep gtso_sweep;

GTSO_API const char *gtso_status_string(gtso_status status);
GTSO_API const char *gtso_last_error(void);

GTSO_API gtso_truncation gtso_truncation_default(void);
GTSO_API gtso_status gtso_truncation_validate(const gtso_truncation *t);

/* Exact phase-space layer. */
GTSO_API gtso_status gtso_abcd_validate(double a, double b, double c,
                                        double d, gtso_abcd *out);
GTSO_API gtso_status gtso_random_abcd(uint64_t seed, double log_range,
                                      size_t count, gtso_abcd *out);
GTSO_API gtso_status gtso_target_symplectic(const gtso_abcd *p,
                                            double out[16]);
GTSO_API gtso_status gtso_symplectic_residual(const double s[16],
                                              double *out);
GTSO_API gtso_status gtso_log_identity_residual(const gtso_abcd *p,
                                                double *out);

GTSO_API gtso_status gtso_decompose(const gtso_abcd *p, gtso_form form,
                                    gtso_sequence **out);
GTSO_API void gtso_sequence_free(gtso_sequence *seq);
GTSO_API size_t gtso_sequence_size(const gtso_sequence *seq);
/* `kind` points to a static string. */
GTSO_API gtso_status gtso_sequence_factor(const gtso_sequence *seq, size_t i,
                                          const char **kind, double *value);
GTSO_API gtso_status gtso_sequence_factor_symplectic(const gtso_sequence *seq,
                                                     size_t i, double out[16]);
GTSO_API gtso_status gtso_sequence_compose(const gtso_sequence *seq,
                                           double out[16]);

/* Truncated Fock layer. Residual arrays are ordered q+, p+, p-, q-. */
GTSO_API gtso_status gtso_heisenberg_residual(const gtso_abcd *p,
                                              gtso_form form,
                                              const gtso_truncation *t,
                                              double out[4]);
GTSO_API gtso_status gtso_s2_heisenberg_residual(double lambda,
                                                 const gtso_truncation *t,
                                                 double out[4]);
GTSO_API gtso_status gtso_schmidt_residual(double lambda,
                                           const gtso_truncation *t,
                                           double *out);
/* [K+,K-] - 2K0, [K0,K+] - K+, [K0,K-] + K-, then [K+,K-] - K0 and the
 * largest unprojected residual (both informational). */
GTSO_API gtso_status gtso_su11_residuals(const gtso_truncation *t,
                                         double out[5]);
GTSO_API gtso_status gtso_form_equivalence_residual(const gtso_abcd *p,
                                                    const gtso_truncation *t,
                                                    double *out);
GTSO_API gtso_status gtso_full_form_residual(const gtso_abcd *p,
                                             const gtso_truncation *t,
                                             double *out);
GTSO_API gtso_status gtso_covariance_residual(const gtso_abcd *p,
                                              gtso_form form,
                                              const gtso_truncation *t,
                                              double *out);

/* Entangled-state layer. Complex labels are passed as (re, im). */
GTSO_API gtso_status gtso_f2_action_fidelity(double eta_re, double eta_im,
                                             const gtso_abcd *p,
                                             const gtso_truncation *t,
                                             gtso_comparison *out);
GTSO_API gtso_status gtso_s2_scaling_fidelity(double lambda, double eta_re,
                                              double eta_im,
                                              const gtso_truncation *t,
                                              gtso_comparison *out);
GTSO_API gtso_status gtso_dilation_fidelity(double a_scale, double xi_re,
                                            double xi_im,
                                            const gtso_truncation *t,
                                            gtso_comparison *out);
GTSO_API gtso_status gtso_overlap_residual(double xi_re, double xi_im,
                                           double eta_re, double eta_im,
                                           const gtso_truncation *t,
                                           double *out);
GTSO_API gtso_status gtso_kernel_residual(double xi_re, double xi_im,
                                          double eta_re, double eta_im,
                                          const gtso_abcd *p,
                                          const gtso_truncation *t,
                                          double *out);

/* States on the retained square n1, n2 <= n_max. */
GTSO_API gtso_status gtso_state_vacuum_image(const gtso_abcd *p,
                                             gtso_form form,
                                             const gtso_truncation *t,
                                             gtso_state **out);
GTSO_API gtso_status gtso_state_eta(double re, double im,
                                    const gtso_truncation *t,
                                    gtso_state **out);
GTSO_API gtso_status gtso_state_xi(double re, double im,
                                   const gtso_truncation *t, gtso_state **out);
GTSO_API gtso_status gtso_state_eta_db(double re, double im,
                                       const gtso_abcd *p,
                                       const gtso_truncation *t,
                                       gtso_state **out);
GTSO_API void gtso_state_free(gtso_state *s);
GTSO_API int gtso_state_cutoff(const gtso_state *s);
GTSO_API gtso_status gtso_state_amplitude(const gtso_state *s, int n1, int n2,
                                          double *re, double *im);
/* Covariance of the retained state, which is normalized first. For a vacuum
 * image it is computed on the full working triangle. */
GTSO_API gtso_status gtso_state_covariance(const gtso_state *s,
                                           double out[16]);
/* Nonzero when the label lies inside the documented accuracy envelope. */
GTSO_API int gtso_label_within_envelope(double re, double im);

/* Verification reports. */
typedef struct {
  int has_eta;
  double eta_re, eta_im;
  int has_xi;
  double xi_re, xi_im;
  int has_lambda;
  double lambda;
  uint64_t seed;
  int random_draws;
} gtso_verify_options;

GTSO_API gtso_verify_options gtso_verify_options_default(void);
GTSO_API gtso_status gtso_verify(const gtso_abcd *p, gtso_form_selection forms,
                                 const gtso_truncation *t,
                                 const gtso_verify_options *options,
                                 gtso_report **out);
GTSO_API void gtso_report_free(gtso_report *r);
GTSO_API size_t gtso_report_size(const gtso_report *r);
/* `threshold` is NaN for informational entries. Strings live as long as the
 * report. */
GTSO_API gtso_status gtso_report_entry(const gtso_report *r, size_t i,
                                       const char **name, double *value,
                                       double *threshold);
GTSO_API size_t gtso_report_warning_count(const gtso_report *r);
GTSO_API const char *gtso_report_warning(const gtso_report *r, size_t i);
GTSO_API int gtso_report_passed(const gtso_report *r);
GTSO_API int gtso_is_truncation_limited(const char *name);

/* Truncation sweeps: margin scales with n_max at the base margin fraction. */
GTSO_API gtso_status gtso_sweep_truncation(const gtso_truncation *base,
                                           int n_max, gtso_truncation *out);
GTSO_API gtso_status gtso_sweep_run(const gtso_abcd *p,
                                    gtso_form_selection forms,
                                    const gtso_truncation *base,
                                    const gtso_verify_options *options,
                                    const int *nmax_list, size_t count,
                                    gtso_sweep **out);
GTSO_API void gtso_sweep_free(gtso_sweep *s);
GTSO_API size_t gtso_sweep_rows(const gtso_sweep *s);
/* Borrowed; valid while the sweep lives. */
GTSO_API const gtso_report *gtso_sweep_row(const gtso_sweep *s, size_t i);
GTSO_API size_t gtso_sweep_violation_count(const gtso_sweep *s);
GTSO_API const char *gtso_sweep_violation(const gtso_sweep *s, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* GTSO_GTSO_H_ */
