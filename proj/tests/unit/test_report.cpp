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


#include <catch_amalgamated.hpp>
#include <cmath>

#include "report.hpp"

using namespace gtso;

namespace {

const ReportEntry *find(const Report &r, const std::string &name) {
  for (const ReportEntry &e : r.entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("truncation-limited classification", "[report]") {
  CHECK(is_truncation_limited("heisenberg.optical.q_plus"));
  CHECK(is_truncation_limited("covariance.su11"));
  CHECK(is_truncation_limited("eigen.eta_db.first"));
  CHECK(is_truncation_limited("overlap"));
  CHECK_FALSE(is_truncation_limited("eigen.db_commutator"));
  CHECK_FALSE(is_truncation_limited("su11.k0_k_plus"));
  CHECK_FALSE(is_truncation_limited("symplectic.log_identity"));
}

TEST_CASE("entries and verdict", "[report]") {
  Report r;
  r.add("a", 1e-9, 1e-8);
  r.note("b", 5.0);
  CHECK(r.passed());
  CHECK_FALSE(r.entries[1].gated());
  r.add("c", 1.0, 0.5);
  CHECK_FALSE(r.passed());
}

TEST_CASE("identity parameters pass", "[report]") {
  VerifyOptions o;
  o.config = {12, 6, 1e-8, 0};
  const Report r = verify(o);
  CHECK(r.passed());
  for (const ReportEntry &e : r.entries) {
    INFO(e.name);
    if (e.gated()) CHECK(e.value <= 1e-10);
  }
  CHECK(find(r, "form_equivalence.full") != nullptr);
  CHECK(find(r, "f2.deficit") == nullptr);
}

TEST_CASE("full suite with labels", "[report]") {
  VerifyOptions o;
  o.params = AbcdParams::validate(2, 1, 1, 1);
  o.eta = Complex(0.5, 0.0);
  o.xi = Complex(0.0, 0.3);
  o.lambda = 0.2;
  o.random_draws = 20;
  const Report r = verify(o);
  for (const ReportEntry &e : r.entries) {
    INFO(e.name << " = " << e.value);
    CHECK(e.passed());
    CHECK(std::isfinite(e.value));
    CHECK(e.value >= 0.0);
  }
  for (const char *name :
       {"heisenberg.optical.q_plus", "heisenberg.su11.q_minus", "covariance.su11",
        "s2.schmidt", "s2.scaling.deficit", "f2.phase", "dilation.ratio",
        "overlap", "kernel", "eigen.xi.second", "su11.printed_k_plus_k_minus"}) {
    INFO(name);
    CHECK(find(r, name) != nullptr);
  }
  CHECK(r.warnings.empty());
  o.eta = Complex(2.0, 0.0);
  o.xi.reset();
  o.lambda.reset();
  CHECK_FALSE(verify(o).warnings.empty());
}

TEST_CASE("a coarse truncation is flagged", "[report]") {
  VerifyOptions o;
  o.params = AbcdParams::validate(2, 1, 1, 1);
  o.config = {6, 2, 1e-8, 14};
  const Report r = verify(o);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(find(r, "heisenberg.optical.q_plus")->passed());
  CHECK(find(r, "su11.k_plus_k_minus")->passed());
}

TEST_CASE("sweep configuration and checks", "[report]") {
  const TruncationConfig base;
  CHECK(sweep_config(base, 10).margin == 4);
  CHECK(sweep_config(base, 22).margin == 8);
  CHECK(sweep_config(TruncationConfig{8, 2, 1e-8, 0}, 4).margin == 2);
  VerifyOptions o;
  CHECK_THROWS_AS(sweep(o, {10}), Error);
  CHECK_THROWS_AS(sweep(o, {14, 10}), Error);

  std::vector<Report> rows(3);
  rows[0].add("heisenberg.x", 1e-4, 1.0);
  rows[1].add("heisenberg.x", 1.9e-4, 1.0);
  rows[2].add("heisenberg.x", 1e-3, 1.0);
  for (Report &r : rows) r.add("su11.k0_k_plus", 1.0, 2.0);
  rows[2].entries[1].value = 100.0;
  const std::vector<std::string> v = monotonicity_violations(rows);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("heisenberg.x") != std::string::npos);
  std::vector<Report> noise(2);
  noise[0].add("overlap", 1e-14, 1.0);
  noise[1].add("overlap", 1.5e-12, 1.0);
  CHECK(monotonicity_violations(noise).empty());
}

TEST_CASE("random suite is seeded", "[report]") {
  VerifyOptions o;
  o.config = {8, 4, 1e-8, 0};
  o.random_draws = 30;
  o.seed = 7;
  const Report a = verify(o);
  const Report b = verify(o);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].value == b.entries[i].value);
  }
}
