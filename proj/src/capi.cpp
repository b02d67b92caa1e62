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


#include "gtso/gtso.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "report.hpp"

struct gtso_sequence {
  gtso::FactorSequence factors;
};

struct gtso_state {
  gtso::FockState retained;
  // Vacuum images keep the full working triangle for moments.
  std::optional<gtso::FockState> full;
};

struct gtso_report {
  gtso::Report report;
};

struct gtso_sweep {
  std::vector<gtso_report> rows;
  std::vector<std::string> violations;
};

namespace {

thread_local std::string g_last_error;

gtso_status status_of(gtso::ErrorCode code) {
  using gtso::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return GTSO_ERR_INVALID_ARGUMENT;
    case ErrorCode::DeterminantViolation: return GTSO_ERR_DETERMINANT;
    case ErrorCode::NonpositiveDiagonal: return GTSO_ERR_NONPOSITIVE_DIAGONAL;
    case ErrorCode::EmptySequence: return GTSO_ERR_EMPTY_SEQUENCE;
    case ErrorCode::LogDomain: return GTSO_ERR_LOG_DOMAIN;
    case ErrorCode::NotHermitian: return GTSO_ERR_NOT_HERMITIAN;
    case ErrorCode::ZeroState: return GTSO_ERR_ZERO_STATE;
    case ErrorCode::InvalidConfig: return GTSO_ERR_INVALID_CONFIG;
    case ErrorCode::WorkCutoffExceeded: return GTSO_ERR_WORK_CUTOFF;
  }
  return GTSO_ERR_INTERNAL;
}

gtso_status fail(gtso_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
gtso_status guarded(F &&body) {
  try {
    body();
    g_last_error.clear();
    return GTSO_OK;
  } catch (const gtso::Error &e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(GTSO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(GTSO_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char *what) {
  if (!ok) throw gtso::Error(gtso::ErrorCode::InvalidArgument, what);
}

gtso::AbcdParams params_of(const gtso_abcd *p) {
  require(p != nullptr, "null parameter pointer");
  return gtso::AbcdParams::validate(p->a, p->b, p->c, p->d);
}

gtso::TruncationConfig config_of(const gtso_truncation *t) {
  require(t != nullptr, "null truncation pointer");
  gtso::TruncationConfig cfg{t->n_max, t->margin, t->tol, t->work_cutoff};
  cfg.validate();
  return cfg;
}

gtso_truncation truncation_of(const gtso::TruncationConfig &c) {
  return {c.n_max, c.margin, c.tol, c.work_cutoff};
}

gtso::Form form_of(gtso_form f) {
  require(f == GTSO_FORM_OPTICAL || f == GTSO_FORM_SU11, "unknown form");
  return f == GTSO_FORM_OPTICAL ? gtso::Form::Optical : gtso::Form::Su11;
}

gtso::FormSelection selection_of(gtso_form_selection f) {
  switch (f) {
    case GTSO_FORMS_OPTICAL: return gtso::FormSelection::Optical;
    case GTSO_FORMS_SU11: return gtso::FormSelection::Su11;
    case GTSO_FORMS_BOTH: return gtso::FormSelection::Both;
  }
  throw gtso::Error(gtso::ErrorCode::InvalidArgument, "unknown form selection");
}

gtso::Complex label_of(double re, double im) {
  require(std::isfinite(re) && std::isfinite(im), "label must be finite");
  return {re, im};
}

void store(const gtso::Mat4 &m, double out[16]) {
  require(out != nullptr, "null output pointer");
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[4 * i + j] = m(i, j);
  }
}

void store(const gtso::HeisenbergResiduals &h, double out[4]) {
  require(out != nullptr, "null output pointer");
  out[0] = h.q_plus;
  out[1] = h.p_plus;
  out[2] = h.p_minus;
  out[3] = h.q_minus;
}

template <class T>
T &deref(T *p) {
  require(p != nullptr, "null output pointer");
  return *p;
}

gtso_comparison comparison_of(const gtso::StateComparison &c) {
  return {c.deficit, c.phase, c.ratio_deviation};
}

gtso::VerifyOptions verify_options_of(const gtso_abcd *p,
                                      gtso_form_selection forms,
                                      const gtso_truncation *t,
                                      const gtso_verify_options *o) {
  gtso::VerifyOptions v;
  v.params = params_of(p);
  v.forms = selection_of(forms);
  v.config = config_of(t);
  const gtso_verify_options d = gtso_verify_options_default();
  const gtso_verify_options &opt = o ? *o : d;
  if (opt.has_eta) v.eta = label_of(opt.eta_re, opt.eta_im);
  if (opt.has_xi) v.xi = label_of(opt.xi_re, opt.xi_im);
  if (opt.has_lambda) {
    require(std::isfinite(opt.lambda), "lambda must be finite");
    v.lambda = opt.lambda;
  }
  require(opt.random_draws >= 0, "random draw count must be >= 0");
  v.seed = opt.seed;
  v.random_draws = opt.random_draws;
  return v;
}

}  // namespace

extern "C" {

const char *gtso_status_string(gtso_status status) {
  switch (status) {
    case GTSO_OK: return "ok";
    case GTSO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GTSO_ERR_DETERMINANT: return "determinant violation";
    case GTSO_ERR_NONPOSITIVE_DIAGONAL: return "nonpositive diagonal";
    case GTSO_ERR_EMPTY_SEQUENCE: return "empty sequence";
    case GTSO_ERR_LOG_DOMAIN: return "logarithm domain error";
    case GTSO_ERR_NOT_HERMITIAN: return "generator not Hermitian";
    case GTSO_ERR_ZERO_STATE: return "zero state";
    case GTSO_ERR_INVALID_CONFIG: return "invalid truncation config";
    case GTSO_ERR_WORK_CUTOFF: return "working cutoff exceeded";
    case GTSO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char *gtso_last_error(void) { return g_last_error.c_str(); }

gtso_truncation gtso_truncation_default(void) {
  return truncation_of(gtso::TruncationConfig{});
}

gtso_status gtso_truncation_validate(const gtso_truncation *t) {
  return guarded([&] { config_of(t); });
}

gtso_status gtso_abcd_validate(double a, double b, double c, double d,
                               gtso_abcd *out) {
  return guarded([&] {
    const gtso::AbcdParams p = gtso::AbcdParams::validate(a, b, c, d);
    deref(out) = {p.a, p.b, p.c, p.d};
  });
}

gtso_status gtso_random_abcd(uint64_t seed, double log_range, size_t count,
                             gtso_abcd *out) {
  return guarded([&] {
    require(std::isfinite(log_range) && log_range >= 0.0,
            "log range must be finite and >= 0");
    require(count == 0 || out != nullptr, "null output pointer");
    gtso::ParamSampler sampler(seed, log_range);
    for (size_t i = 0; i < count; ++i) {
      const gtso::AbcdParams p = sampler.next();
      out[i] = {p.a, p.b, p.c, p.d};
    }
  });
}

gtso_status gtso_target_symplectic(const gtso_abcd *p, double out[16]) {
  return guarded([&] { store(gtso::target_symplectic(params_of(p)), out); });
}

gtso_status gtso_symplectic_residual(const double s[16], double *out) {
  return guarded([&] {
    require(s != nullptr, "null matrix pointer");
    gtso::Mat4 m;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) m(i, j) = s[4 * i + j];
    }
    deref(out) = gtso::symplectic_residual(m);
  });
}

gtso_status gtso_log_identity_residual(const gtso_abcd *p, double *out) {
  return guarded(
      [&] { deref(out) = gtso::log_identity_residual(params_of(p)); });
}

gtso_status gtso_decompose(const gtso_abcd *p, gtso_form form,
                           gtso_sequence **out) {
  return guarded([&] {
    auto seq = std::make_unique<gtso_sequence>();
    seq->factors = gtso::decompose(params_of(p), form_of(form));
    deref(out) = seq.release();
  });
}

void gtso_sequence_free(gtso_sequence *seq) { delete seq; }

size_t gtso_sequence_size(const gtso_sequence *seq) {
  return seq ? seq->factors.size() : 0;
}

gtso_status gtso_sequence_factor(const gtso_sequence *seq, size_t i,
                                 const char **kind, double *value) {
  return guarded([&] {
    require(seq != nullptr && i < seq->factors.size(),
            "factor index out of range");
    deref(kind) = gtso::factor_kind_name(seq->factors[i].kind);
    deref(value) = seq->factors[i].value;
  });
}

gtso_status gtso_sequence_factor_symplectic(const gtso_sequence *seq,
                                            size_t i, double out[16]) {
  return guarded([&] {
    require(seq != nullptr && i < seq->factors.size(),
            "factor index out of range");
    store(gtso::factor_symplectic(seq->factors[i]), out);
  });
}

gtso_status gtso_sequence_compose(const gtso_sequence *seq, double out[16]) {
  return guarded([&] {
    require(seq != nullptr, "null sequence");
    store(gtso::compose(seq->factors), out);
  });
}

gtso_status gtso_heisenberg_residual(const gtso_abcd *p, gtso_form form,
                                     const gtso_truncation *t,
                                     double out[4]) {
  return guarded([&] {
    const gtso::AbcdParams params = params_of(p);
    const gtso::TruncationConfig cfg = config_of(t);
    const gtso::GaussianUnitary u =
        gtso::realize_gtso(params, form_of(form), cfg);
    store(gtso::heisenberg_residual(u, params, cfg), out);
  });
}

gtso_status gtso_s2_heisenberg_residual(double lambda,
                                        const gtso_truncation *t,
                                        double out[4]) {
  return guarded([&] {
    require(std::isfinite(lambda), "lambda must be finite");
    const gtso::TruncationConfig cfg = config_of(t);
    const gtso::SqueezeParam sp{lambda};
    store(gtso::heisenberg_residual(gtso::realize_s2(sp, cfg),
                                    sp.heisenberg_params(), cfg),
          out);
  });
}

gtso_status gtso_schmidt_residual(double lambda, const gtso_truncation *t,
                                  double *out) {
  return guarded([&] {
    require(std::isfinite(lambda), "lambda must be finite");
    deref(out) = gtso::schmidt_residual({lambda}, config_of(t));
  });
}

gtso_status gtso_su11_residuals(const gtso_truncation *t, double out[5]) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const gtso::Su11Residuals r = gtso::su11_residuals(config_of(t));
    out[0] = r.k_plus_k_minus;
    out[1] = r.k0_k_plus;
    out[2] = r.k0_k_minus;
    out[3] = r.printed_k_plus_k_minus;
    out[4] = r.unprojected_max;
  });
}

gtso_status gtso_form_equivalence_residual(const gtso_abcd *p,
                                           const gtso_truncation *t,
                                           double *out) {
  return guarded([&] {
    deref(out) = gtso::form_equivalence_residual(params_of(p), config_of(t));
  });
}

gtso_status gtso_full_form_residual(const gtso_abcd *p,
                                    const gtso_truncation *t, double *out) {
  return guarded([&] {
    deref(out) = gtso::gtso_form_residual(params_of(p), config_of(t));
  });
}

gtso_status gtso_covariance_residual(const gtso_abcd *p, gtso_form form,
                                     const gtso_truncation *t, double *out) {
  return guarded([&] {
    const gtso::AbcdParams params = params_of(p);
    const gtso::GaussianUnitary u =
        gtso::realize_gtso(params, form_of(form), config_of(t));
    deref(out) = gtso::covariance_residual(gtso::vacuum_covariance(u),
                                           gtso::target_symplectic(params));
  });
}

gtso_status gtso_f2_action_fidelity(double eta_re, double eta_im,
                                    const gtso_abcd *p,
                                    const gtso_truncation *t,
                                    gtso_comparison *out) {
  return guarded([&] {
    deref(out) = comparison_of(gtso::f2_action_fidelity(
        label_of(eta_re, eta_im), params_of(p), config_of(t)));
  });
}

gtso_status gtso_s2_scaling_fidelity(double lambda, double eta_re,
                                     double eta_im, const gtso_truncation *t,
                                     gtso_comparison *out) {
  return guarded([&] {
    require(std::isfinite(lambda), "lambda must be finite");
    deref(out) = comparison_of(gtso::s2_scaling_fidelity(
        {lambda}, label_of(eta_re, eta_im), config_of(t)));
  });
}

gtso_status gtso_dilation_fidelity(double a_scale, double xi_re, double xi_im,
                                   const gtso_truncation *t,
                                   gtso_comparison *out) {
  return guarded([&] {
    deref(out) = comparison_of(gtso::dilation_fidelity(
        a_scale, label_of(xi_re, xi_im), config_of(t)));
  });
}

gtso_status gtso_overlap_residual(double xi_re, double xi_im, double eta_re,
                                  double eta_im, const gtso_truncation *t,
                                  double *out) {
  return guarded([&] {
    deref(out) = gtso::overlap_residual(
        label_of(xi_re, xi_im), label_of(eta_re, eta_im), config_of(t));
  });
}

gtso_status gtso_kernel_residual(double xi_re, double xi_im, double eta_re,
                                 double eta_im, const gtso_abcd *p,
                                 const gtso_truncation *t, double *out) {
  return guarded([&] {
    deref(out) = gtso::kernel_residual(label_of(xi_re, xi_im),
                                       label_of(eta_re, eta_im), params_of(p),
                                       config_of(t));
  });
}

gtso_status gtso_state_vacuum_image(const gtso_abcd *p, gtso_form form,
                                    const gtso_truncation *t,
                                    gtso_state **out) {
  return guarded([&] {
    const gtso::TruncationConfig cfg = config_of(t);
    const gtso::GaussianUnitary u =
        gtso::realize_gtso(params_of(p), form_of(form), cfg);
    gtso::FockState full = gtso::vacuum_image(u);
    auto s = std::make_unique<gtso_state>();
    s->retained = gtso::restrict_state(full, cfg.n_max);
    s->full = std::move(full);
    deref(out) = s.release();
  });
}

gtso_status gtso_state_eta(double re, double im, const gtso_truncation *t,
                           gtso_state **out) {
  return guarded([&] {
    auto s = std::make_unique<gtso_state>();
    s->retained = gtso::eta_state(label_of(re, im), config_of(t));
    deref(out) = s.release();
  });
}

gtso_status gtso_state_xi(double re, double im, const gtso_truncation *t,
                          gtso_state **out) {
  return guarded([&] {
    auto s = std::make_unique<gtso_state>();
    s->retained = gtso::xi_state(label_of(re, im), config_of(t));
    deref(out) = s.release();
  });
}

gtso_status gtso_state_eta_db(double re, double im, const gtso_abcd *p,
                              const gtso_truncation *t, gtso_state **out) {
  return guarded([&] {
    auto s = std::make_unique<gtso_state>();
    s->retained =
        gtso::eta_db_state(label_of(re, im), params_of(p), config_of(t));
    deref(out) = s.release();
  });
}

void gtso_state_free(gtso_state *s) { delete s; }

int gtso_state_cutoff(const gtso_state *s) {
  return s ? s->retained.cutoff : -1;
}

gtso_status gtso_state_amplitude(const gtso_state *s, int n1, int n2,
                                 double *re, double *im) {
  return guarded([&] {
    require(s != nullptr, "null state");
    const int n = s->retained.cutoff;
    require(n1 >= 0 && n2 >= 0 && n1 <= n && n2 <= n,
            "level outside the retained space");
    const gtso::Complex z = s->retained(n1, n2);
    deref(re) = z.real();
    deref(im) = z.imag();
  });
}

gtso_status gtso_state_covariance(const gtso_state *s, double out[16]) {
  return guarded([&] {
    require(s != nullptr, "null state");
    store(gtso::covariance(s->full ? *s->full : s->retained), out);
  });
}

int gtso_label_within_envelope(double re, double im) {
  return gtso::within_envelope({re, im}) ? 1 : 0;
}

gtso_verify_options gtso_verify_options_default(void) {
  const gtso::VerifyOptions v;
  gtso_verify_options o{};
  o.seed = v.seed;
  o.random_draws = v.random_draws;
  return o;
}

gtso_status gtso_verify(const gtso_abcd *p, gtso_form_selection forms,
                        const gtso_truncation *t,
                        const gtso_verify_options *options,
                        gtso_report **out) {
  return guarded([&] {
    const gtso::VerifyOptions v = verify_options_of(p, forms, t, options);
    auto r = std::make_unique<gtso_report>();
    r->report = gtso::verify(v);
    deref(out) = r.release();
  });
}

void gtso_report_free(gtso_report *r) { delete r; }

size_t gtso_report_size(const gtso_report *r) {
  return r ? r->report.entries.size() : 0;
}

gtso_status gtso_report_entry(const gtso_report *r, size_t i,
                              const char **name, double *value,
                              double *threshold) {
  return guarded([&] {
    require(r != nullptr && i < r->report.entries.size(),
            "entry index out of range");
    const gtso::ReportEntry &e = r->report.entries[i];
    deref(name) = e.name.c_str();
    deref(value) = e.value;
    deref(threshold) = e.threshold;
  });
}

size_t gtso_report_warning_count(const gtso_report *r) {
  return r ? r->report.warnings.size() : 0;
}

const char *gtso_report_warning(const gtso_report *r, size_t i) {
  if (!r || i >= r->report.warnings.size()) return nullptr;
  return r->report.warnings[i].c_str();
}

int gtso_report_passed(const gtso_report *r) {
  return r && r->report.passed() ? 1 : 0;
}

int gtso_is_truncation_limited(const char *name) {
  return name && gtso::is_truncation_limited(name) ? 1 : 0;
}

gtso_status gtso_sweep_truncation(const gtso_truncation *base, int n_max,
                                  gtso_truncation *out) {
  return guarded([&] {
    deref(out) = truncation_of(gtso::sweep_config(config_of(base), n_max));
  });
}

gtso_status gtso_sweep_run(const gtso_abcd *p, gtso_form_selection forms,
                           const gtso_truncation *base,
                           const gtso_verify_options *options,
                           const int *nmax_list, size_t count,
                           gtso_sweep **out) {
  return guarded([&] {
    require(count == 0 || nmax_list != nullptr, "null n_max list");
    const gtso::VerifyOptions v = verify_options_of(p, forms, base, options);
    const std::vector<int> list(nmax_list, nmax_list + count);
    const std::vector<gtso::Report> rows = gtso::sweep(v, list);
    auto s = std::make_unique<gtso_sweep>();
    for (const gtso::Report &r : rows) s->rows.push_back({r});
    s->violations = gtso::monotonicity_violations(rows);
    deref(out) = s.release();
  });
}

void gtso_sweep_free(gtso_sweep *s) { delete s; }

size_t gtso_sweep_rows(const gtso_sweep *s) { return s ? s->rows.size() : 0; }

const gtso_report *gtso_sweep_row(const gtso_sweep *s, size_t i) {
  return s && i < s->rows.size() ? &s->rows[i] : nullptr;
}

size_t gtso_sweep_violation_count(const gtso_sweep *s) {
  return s ? s->violations.size() : 0;
}

const char *gtso_sweep_violation(const gtso_sweep *s, size_t i) {
  return s && i < s->violations.size() ? s->violations[i].c_str() : nullptr;
}

}  // extern "C"
