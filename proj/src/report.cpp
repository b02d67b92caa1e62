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


#include "report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace gtso {

bool is_truncation_limited(std::string_view name) {
  static constexpr std::array<std::string_view, 11> kPrefixes = {
      "heisenberg.", "unitarity.", "form_equivalence.", "covariance.",
      "s2.",         "eigen.eta",  "eigen.xi",          "f2.",
      "dilation.",   "overlap",    "kernel"};
  return std::any_of(kPrefixes.begin(), kPrefixes.end(),
                     [&](std::string_view p) { return name.starts_with(p); });
}

void Report::add(std::string name, double value, double threshold) {
  entries.push_back({std::move(name), value, threshold});
}

void Report::note(std::string name, double value) {
  entries.push_back({std::move(name), value, std::nan("")});
}

bool Report::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ReportEntry &e) { return e.passed(); });
}

namespace {

std::vector<std::pair<Form, std::string>> selected_forms(FormSelection s) {
  std::vector<std::pair<Form, std::string>> out;
  if (s != FormSelection::Su11) out.emplace_back(Form::Optical, "optical");
  if (s != FormSelection::Optical) out.emplace_back(Form::Su11, "su11");
  return out;
}

void warn_envelope(Report &r, const char *what, Complex label) {
  if (within_envelope(label)) return;
  std::ostringstream msg;
  msg << what << " label modulus " << std::abs(label)
      << " exceeds the accuracy envelope " << kLabelEnvelope;
  r.warnings.push_back(msg.str());
}

void add_comparison(Report &r, const std::string &prefix,
                    const StateComparison &c) {
  r.add(prefix + ".deficit", c.deficit, threshold::kDeficit);
  r.add(prefix + ".phase", c.phase, threshold::kPhase);
  r.add(prefix + ".ratio", c.ratio_deviation, threshold::kRatio);
}

void add_eigen(Report &r, const std::string &prefix,
               const EigenResiduals &e) {
  r.add(prefix + ".first", e.first, threshold::kEigen);
  r.add(prefix + ".second", e.second, threshold::kEigen);
}

void exact_layer(Report &r, const VerifyOptions &o) {
  const AbcdParams &p = o.params;
  const Mat4 target = target_symplectic(p);
  r.add("symplectic.target_form", symplectic_residual(target),
        threshold::kSymplecticForm);
  for (const auto &[form, tag] : selected_forms(o.forms)) {
    r.add("symplectic.compose." + tag,
          max_abs(compose(decompose(p, form)) - target), threshold::kCompose);
  }
  if (o.forms == FormSelection::Both) {
    r.add("symplectic.forms_agree",
          max_abs(compose(decompose(p, Form::Optical)) -
                  compose(decompose(p, Form::Su11))),
          threshold::kCompose);
  }
  r.add("symplectic.log_identity", log_identity_residual(p),
        threshold::kLogIdentity);
  if (o.random_draws <= 0) return;
  ParamSampler sampler(o.seed, 0.5);
  double form = 0.0, comp = 0.0, log = 0.0;
  for (int i = 0; i < o.random_draws; ++i) {
    const AbcdParams q = sampler.next();
    const Mat4 t = target_symplectic(q);
    form = std::max(form, symplectic_residual(t));
    for (const auto &f : selected_forms(o.forms)) {
      comp = std::max(comp, max_abs(compose(decompose(q, f.first)) - t));
    }
    log = std::max(log, log_identity_residual(q));
  }
  r.add("symplectic.random.target_form_max", form, threshold::kSymplecticForm);
  r.add("symplectic.random.compose_max", comp, threshold::kCompose);
  r.add("symplectic.random.log_identity_max", log, threshold::kLogIdentity);
}

void operator_layer(Report &r, const VerifyOptions &o) {
  const AbcdParams &p = o.params;
  const TruncationConfig &cfg = o.config;
  r.add("fock.canonical", canonical_residual(cfg), threshold::kCanonical);
  const Mat4 target = target_symplectic(p);
  for (const auto &[form, tag] : selected_forms(o.forms)) {
    const GaussianUnitary u = realize_gtso(p, form, cfg);
    const HeisenbergResiduals h = heisenberg_residual(u, p, cfg);
    const std::string pre = "heisenberg." + tag;
    r.add(pre + ".q_plus", h.q_plus, threshold::kHeisenberg);
    r.add(pre + ".p_plus", h.p_plus, threshold::kHeisenberg);
    r.add(pre + ".p_minus", h.p_minus, threshold::kHeisenberg);
    r.add(pre + ".q_minus", h.q_minus, threshold::kHeisenberg);
    r.add("unitarity." + tag, interior_unitarity(u, cfg), cfg.tol);
    r.add("covariance." + tag,
          covariance_residual(vacuum_covariance(u), target),
          threshold::kCovariance);
  }
  const Su11Residuals su = su11_residuals(cfg);
  r.add("su11.k_plus_k_minus", su.k_plus_k_minus, threshold::kSu11);
  r.add("su11.k0_k_plus", su.k0_k_plus, threshold::kSu11);
  r.add("su11.k0_k_minus", su.k0_k_minus, threshold::kSu11);
  r.note("su11.printed_k_plus_k_minus", su.printed_k_plus_k_minus);
  r.note("su11.unprojected_max", su.unprojected_max);
  r.add("form_equivalence.reduced", form_equivalence_residual(p, cfg),
        threshold::kFormEquivalence);
  if (o.forms == FormSelection::Both) {
    r.add("form_equivalence.full", gtso_form_residual(p, cfg),
          threshold::kFormEquivalence);
  }
}

void squeezer_layer(Report &r, const VerifyOptions &o) {
  const SqueezeParam sp{*o.lambda};
  const TruncationConfig &cfg = o.config;
  const GaussianUnitary u = realize_s2(sp, cfg);
  r.add("s2.heisenberg", heisenberg_residual(u, sp.heisenberg_params(), cfg).max(),
        threshold::kHeisenberg);
  r.add("s2.schmidt", schmidt_residual(sp, cfg), threshold::kSchmidt);
  if (o.eta) {
    warn_envelope(r, "eta/mu", *o.eta / sp.mu());
    add_comparison(r, "s2.scaling", s2_scaling_fidelity(sp, *o.eta, cfg));
  }
}

void state_layer(Report &r, const VerifyOptions &o) {
  const AbcdParams &p = o.params;
  const TruncationConfig &cfg = o.config;
  if (o.eta) {
    const Complex eta = *o.eta;
    warn_envelope(r, "eta", eta);
    add_eigen(r, "eigen.eta",
              eigen_residuals(eta_state(eta, cfg), EigenPair::Eta, eta.real(),
                              eta.imag(), p, cfg));
    add_eigen(r, "eigen.eta_db",
              eigen_residuals(eta_db_state(eta, p, cfg), EigenPair::Db,
                              eta.real(), eta.imag(), p, cfg));
    r.add("eigen.db_commutator", db_pair_commutator(p, cfg),
          threshold::kDbCommutator);
    add_comparison(r, "f2", f2_action_fidelity(eta, p, cfg));
  }
  if (o.xi) {
    const Complex xi = *o.xi;
    warn_envelope(r, "xi", xi);
    warn_envelope(r, "xi/A", xi / p.a);
    add_eigen(r, "eigen.xi",
              eigen_residuals(xi_state(xi, cfg), EigenPair::Xi, xi.real(),
                              xi.imag(), p, cfg));
    add_comparison(r, "dilation", dilation_fidelity(p.a, xi, cfg));
  }
  if (o.eta && o.xi) {
    r.add("overlap", overlap_residual(*o.xi, *o.eta, cfg), threshold::kOverlap);
    r.add("kernel", kernel_residual(*o.xi, *o.eta, p, cfg),
          threshold::kOverlap);
  }
}

}  // namespace

Report verify(const VerifyOptions &options) {
  options.config.validate();
  Report r;
  exact_layer(r, options);
  operator_layer(r, options);
  if (options.lambda) squeezer_layer(r, options);
  state_layer(r, options);
  return r;
}

TruncationConfig sweep_config(const TruncationConfig &base, int n_max) {
  const double fraction = double(base.margin) / double(base.n_max);
  TruncationConfig cfg = base;
  cfg.n_max = n_max;
  cfg.margin = std::max(2, static_cast<int>(std::lround(fraction * n_max)));
  cfg.work_cutoff = 0;
  cfg.validate();
  return cfg;
}

std::vector<Report> sweep(const VerifyOptions &base,
                          const std::vector<int> &nmax_list) {
  if (nmax_list.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "a sweep needs at least two n_max values");
  }
  for (std::size_t i = 1; i < nmax_list.size(); ++i) {
    if (nmax_list[i] <= nmax_list[i - 1]) {
      throw Error(ErrorCode::InvalidArgument,
                  "n_max values must be strictly ascending");
    }
  }
  std::vector<TruncationConfig> configs;
  for (int n : nmax_list) configs.push_back(sweep_config(base.config, n));
  std::vector<Report> rows;
  for (const TruncationConfig &cfg : configs) {
    VerifyOptions o = base;
    o.config = cfg;
    rows.push_back(verify(o));
  }
  return rows;
}

std::vector<std::string> monotonicity_violations(
    const std::vector<Report> &rows) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (const ReportEntry &e : rows[i].entries) {
      if (!is_truncation_limited(e.name)) continue;
      const auto prev = std::find_if(
          rows[i - 1].entries.begin(), rows[i - 1].entries.end(),
          [&](const ReportEntry &x) { return x.name == e.name; });
      if (prev == rows[i - 1].entries.end()) continue;
      if (e.value > 2.0 * std::max(prev->value, kMonotonicityFloor)) {
        std::ostringstream msg;
        msg << e.name << " grows from " << prev->value << " to " << e.value
            << " between rows " << i - 1 << " and " << i;
        out.push_back(msg.str());
      }
    }
  }
  return out;
}

}  // namespace gtso
