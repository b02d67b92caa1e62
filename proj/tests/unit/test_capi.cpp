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


#include <gtso/gtso.h>

#include <catch_amalgamated.hpp>
#include <cmath>
#include <string>

using Catch::Matchers::WithinAbs;

namespace {

gtso_abcd sample() {
  gtso_abcd p{};
  REQUIRE(gtso_abcd_validate(2, 1, 1, 1, &p) == GTSO_OK);
  return p;
}

}  // namespace

TEST_CASE("status reporting", "[capi]") {
  gtso_abcd p{};
  CHECK(gtso_abcd_validate(1, 0, 0, 2, &p) == GTSO_ERR_DETERMINANT);
  CHECK(std::string(gtso_last_error()).find("AD - BC - 1") != std::string::npos);
  CHECK(gtso_abcd_validate(-1, 0, 0, -1, &p) == GTSO_ERR_NONPOSITIVE_DIAGONAL);
  CHECK(gtso_abcd_validate(1, 0, 0, 1, &p) == GTSO_OK);
  CHECK(std::string(gtso_last_error()).empty());
  CHECK(gtso_abcd_validate(1, 0, 0, 1, nullptr) == GTSO_ERR_INVALID_ARGUMENT);
  CHECK(std::string(gtso_status_string(GTSO_ERR_ZERO_STATE)) == "zero state");
  gtso_truncation t = gtso_truncation_default();
  CHECK(t.n_max == 16);
  CHECK(t.margin == 6);
  CHECK(gtso_truncation_validate(&t) == GTSO_OK);
  t.margin = 16;
  CHECK(gtso_truncation_validate(&t) == GTSO_ERR_INVALID_CONFIG);
}

TEST_CASE("decomposition handles", "[capi]") {
  const gtso_abcd p = sample();
  gtso_sequence *seq = nullptr;
  REQUIRE(gtso_decompose(&p, GTSO_FORM_SU11, &seq) == GTSO_OK);
  CHECK(gtso_sequence_size(seq) == 3);
  const char *kind = nullptr;
  double value = 0.0;
  REQUIRE(gtso_sequence_factor(seq, 1, &kind, &value) == GTSO_OK);
  CHECK(std::string(kind) == "Su11Mid");
  CHECK_THAT(value, WithinAbs(std::log(2.0), 1e-15));
  CHECK(gtso_sequence_factor(seq, 3, &kind, &value) ==
        GTSO_ERR_INVALID_ARGUMENT);
  double composed[16], target[16], s[16], r = 1.0;
  REQUIRE(gtso_sequence_compose(seq, composed) == GTSO_OK);
  REQUIRE(gtso_target_symplectic(&p, target) == GTSO_OK);
  for (int i = 0; i < 16; ++i) CHECK_THAT(composed[i], WithinAbs(target[i], 1e-10));
  REQUIRE(gtso_sequence_factor_symplectic(seq, 0, s) == GTSO_OK);
  REQUIRE(gtso_symplectic_residual(s, &r) == GTSO_OK);
  CHECK(r < 1e-14);
  gtso_sequence_free(seq);
  REQUIRE(gtso_decompose(&p, GTSO_FORM_OPTICAL, &seq) == GTSO_OK);
  CHECK(gtso_sequence_size(seq) == 6);
  gtso_sequence_free(seq);
  CHECK(gtso_log_identity_residual(&p, &r) == GTSO_OK);
  CHECK(r <= 1e-12);
  const gtso_abcd bad{1, 0, 0, 2};
  CHECK(gtso_decompose(&bad, GTSO_FORM_OPTICAL, &seq) == GTSO_ERR_DETERMINANT);
}

TEST_CASE("random parameters", "[capi]") {
  gtso_abcd a[5], b[5];
  REQUIRE(gtso_random_abcd(3, 0.5, 5, a) == GTSO_OK);
  REQUIRE(gtso_random_abcd(3, 0.5, 5, b) == GTSO_OK);
  for (int i = 0; i < 5; ++i) {
    CHECK(a[i].a == b[i].a);
    CHECK(std::abs(a[i].a * a[i].d - a[i].b * a[i].c - 1.0) < 1e-12);
  }
}

TEST_CASE("operator residuals", "[capi]") {
  const gtso_abcd p = sample();
  const gtso_truncation t = gtso_truncation_default();
  double h[4];
  REQUIRE(gtso_heisenberg_residual(&p, GTSO_FORM_OPTICAL, &t, h) == GTSO_OK);
  for (double x : h) CHECK(x <= 1e-6);
  double su[5];
  REQUIRE(gtso_su11_residuals(&t, su) == GTSO_OK);
  CHECK(su[0] <= 1e-10);
  CHECK(su[3] > 1.0);
  double r = 1.0;
  REQUIRE(gtso_form_equivalence_residual(&p, &t, &r) == GTSO_OK);
  CHECK(r <= 1e-7);
  const gtso_truncation bad{3, 2, 1e-8, 0};
  CHECK(gtso_heisenberg_residual(&p, GTSO_FORM_OPTICAL, &bad, h) ==
        GTSO_ERR_INVALID_CONFIG);
  CHECK(gtso_heisenberg_residual(&p, static_cast<gtso_form>(7), &t, h) ==
        GTSO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("state handles", "[capi]") {
  const gtso_truncation t{8, 2, 1e-8, 0};
  gtso_state *s = nullptr;
  REQUIRE(gtso_state_eta(0.0, 0.0, &t, &s) == GTSO_OK);
  CHECK(gtso_state_cutoff(s) == 8);
  double re = 0.0, im = 0.0;
  REQUIRE(gtso_state_amplitude(s, 3, 3, &re, &im) == GTSO_OK);
  CHECK(re == 1.0);
  REQUIRE(gtso_state_amplitude(s, 3, 2, &re, &im) == GTSO_OK);
  CHECK(re == 0.0);
  CHECK(gtso_state_amplitude(s, 9, 0, &re, &im) == GTSO_ERR_INVALID_ARGUMENT);
  gtso_state_free(s);

  const gtso_abcd unit{1, 0, 0, 1};
  REQUIRE(gtso_state_vacuum_image(&unit, GTSO_FORM_OPTICAL, &t, &s) == GTSO_OK);
  double cov[16];
  REQUIRE(gtso_state_covariance(s, cov) == GTSO_OK);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK_THAT(cov[4 * i + j], WithinAbs(i == j ? 0.5 : 0.0, 1e-14));
    }
  }
  gtso_state_free(s);
  CHECK(gtso_label_within_envelope(1.0, 0.0) == 1);
  CHECK(gtso_label_within_envelope(2.0, 0.0) == 0);
  CHECK(gtso_state_xi(NAN, 0.0, &t, &s) == GTSO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("fidelities", "[capi]") {
  const gtso_truncation t{20, 8, 1e-8, 0};
  const gtso_abcd p = sample();
  gtso_comparison c{};
  REQUIRE(gtso_f2_action_fidelity(0.0, 0.3, &p, &t, &c) == GTSO_OK);
  CHECK(c.deficit <= 1e-4);
  CHECK(c.phase <= 1e-3);
  REQUIRE(gtso_dilation_fidelity(std::exp(0.3), 0.4, 0.0, &t, &c) == GTSO_OK);
  CHECK(c.deficit <= 1e-4);
  CHECK(gtso_dilation_fidelity(0.0, 0.4, 0.0, &t, &c) ==
        GTSO_ERR_INVALID_ARGUMENT);
  double r = 1.0;
  REQUIRE(gtso_overlap_residual(0.0, 0.3, 0.5, 0.0, &t, &r) == GTSO_OK);
  CHECK(r <= 2e-3);
  REQUIRE(gtso_kernel_residual(0.3, 0.0, 0.0, 0.4, &p, &t, &r) == GTSO_OK);
  CHECK(r <= 2e-3);
}

TEST_CASE("reports and sweeps", "[capi]") {
  const gtso_abcd unit{1, 0, 0, 1};
  const gtso_truncation t{12, 6, 1e-8, 0};
  gtso_verify_options o = gtso_verify_options_default();
  o.random_draws = 10;
  gtso_report *r = nullptr;
  REQUIRE(gtso_verify(&unit, GTSO_FORMS_BOTH, &t, &o, &r) == GTSO_OK);
  CHECK(gtso_report_passed(r) == 1);
  REQUIRE(gtso_report_size(r) > 10);
  bool saw_note = false;
  for (size_t i = 0; i < gtso_report_size(r); ++i) {
    const char *name = nullptr;
    double value = 0.0, threshold = 0.0;
    REQUIRE(gtso_report_entry(r, i, &name, &value, &threshold) == GTSO_OK);
    saw_note = saw_note || std::isnan(threshold);
  }
  CHECK(saw_note);
  gtso_report_free(r);
  CHECK(gtso_is_truncation_limited("heisenberg.optical.q_plus") == 1);
  CHECK(gtso_is_truncation_limited("su11.k0_k_plus") == 0);

  gtso_truncation row{};
  REQUIRE(gtso_sweep_truncation(&t, 18, &row) == GTSO_OK);
  CHECK(row.margin == 9);
  const int list[] = {8, 10};
  gtso_sweep *s = nullptr;
  REQUIRE(gtso_sweep_run(&unit, GTSO_FORMS_OPTICAL, &t, &o, list, 2, &s) ==
          GTSO_OK);
  CHECK(gtso_sweep_rows(s) == 2);
  CHECK(gtso_report_passed(gtso_sweep_row(s, 1)) == 1);
  CHECK(gtso_sweep_violation_count(s) == 0);
  gtso_sweep_free(s);
  const int descending[] = {10, 8};
  CHECK(gtso_sweep_run(&unit, GTSO_FORMS_OPTICAL, &t, &o, descending, 2, &s) ==
        GTSO_ERR_INVALID_ARGUMENT);
}
