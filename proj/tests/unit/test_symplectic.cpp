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

#include "symplectic.hpp"

using namespace gtso;
using Catch::Matchers::WithinAbs;

namespace {

// Parameter rows of the unit operator.
const AbcdParams kUnit = AbcdParams::identity();
const AbcdParams kSample = AbcdParams::validate(2, 1, 1, 1);

}  // namespace

TEST_CASE("parameter validation", "[symplectic]") {
  CHECK(AbcdParams::validate(1, 0, 0, 1).a == 1.0);
  CHECK_NOTHROW(AbcdParams::validate(2, 1, 1, 1));
  try {
    AbcdParams::validate(1, 0, 0, 2);
    FAIL("expected a determinant violation");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::DeterminantViolation);
  }
  try {
    AbcdParams::validate(-1, 0, 0, -1);
    FAIL("expected a diagonal violation");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NonpositiveDiagonal);
  }
  CHECK_THROWS_AS(AbcdParams::validate(NAN, 0, 0, 1), Error);
}

TEST_CASE("target matrix in both bases", "[symplectic]") {
  CHECK(max_abs(target_symplectic(kUnit) - Mat4::Identity()) < 1e-15);
  const Mat4 sc = to_collective(target_symplectic(kSample));
  Mat4 expected_c;
  expected_c << 2, 1, 0, 0,
                1, 1, 0, 0,
                0, 0, 1, -1,
                0, 0, -1, 2;
  CHECK(max_abs(sc - expected_c) < 1e-14);
  // Mode-basis matrix from an independent numpy evaluation of O Sc O^T.
  Mat4 expected;
  expected << 1.5, 0.0, 0.5, 1.0,
              0.0, 1.5, 1.0, -0.5,
              0.5, 1.0, 1.5, 0.0,
              1.0, -0.5, 0.0, 1.5;
  CHECK(max_abs(target_symplectic(kSample) - expected) < 1e-14);
  const double mu = std::exp(0.3);
  const Mat4 sq = to_collective(
      target_symplectic(AbcdParams::validate(mu, 0, 0, 1 / mu)));
  CHECK_THAT(sq(kQPlus, kQPlus), WithinAbs(mu, 1e-14));
  CHECK_THAT(sq(kPPlus, kPPlus), WithinAbs(1 / mu, 1e-14));
  CHECK(std::abs(target_symplectic(kSample).determinant() - 1.0) < 1e-10);
}

TEST_CASE("symplectic residual", "[symplectic]") {
  CHECK(symplectic_residual(Mat4::Identity()) == 0.0);
  CHECK(symplectic_residual(target_symplectic(kSample)) <= 1e-12);
  Mat4 bad = Mat4::Identity();
  bad(0, 0) = 2;
  bad(1, 1) = 2;
  CHECK_THAT(symplectic_residual(bad), WithinAbs(3.0, 1e-15));
}

TEST_CASE("factor parameters of both forms", "[symplectic]") {
  const FactorSequence optical = decompose(kSample, Form::Optical);
  REQUIRE(optical.size() == 6);
  const FactorKind kinds[] = {
      FactorKind::FreePropPlus,    FactorKind::FreePropMinus,
      FactorKind::CollectiveScale, FactorKind::TwoModeScale,
      FactorKind::ThinLensMinus,   FactorKind::ThinLensPlus};
  const double values[] = {1.0 / 8,           -1.0 / 4,
                           0.5 * std::log(2), 0.5 * std::log(0.5),
                           1.0 / 4,           -1.0 / 8};
  for (int i = 0; i < 6; ++i) {
    CHECK(optical[i].kind == kinds[i]);
    CHECK_THAT(optical[i].value, WithinAbs(values[i], 1e-15));
  }
  const FactorSequence su11 = decompose(kSample, Form::Su11);
  REQUIRE(su11.size() == 3);
  CHECK(su11[0].kind == FactorKind::Su11Plus);
  CHECK_THAT(su11[0].value, WithinAbs(1.0 / 8, 1e-15));
  CHECK(su11[1].kind == FactorKind::Su11Mid);
  CHECK_THAT(su11[1].value, WithinAbs(std::log(2.0), 1e-15));
  CHECK(su11[2].kind == FactorKind::Su11Minus);
  CHECK_THAT(su11[2].value, WithinAbs(-1.0 / 8, 1e-15));
  for (const GaussianFactor &f : decompose(kUnit, Form::Optical)) {
    CHECK(f.value == 0.0);
  }
}

TEST_CASE("pure squeezing keeps only the two-mode factor", "[symplectic]") {
  const double mu = std::exp(0.2);
  const FactorSequence seq =
      decompose(AbcdParams::validate(mu, 0, 0, 1 / mu), Form::Optical);
  for (const GaussianFactor &f : seq) {
    if (f.kind == FactorKind::TwoModeScale) {
      CHECK_THAT(f.value, WithinAbs(std::log(1 / mu), 1e-15));
    } else {
      CHECK_THAT(f.value, WithinAbs(0.0, 1e-15));
    }
  }
  const SqueezeParam sp{0.2};
  CHECK(max_abs(compose(seq) -
                target_symplectic(SqueezeParam{-0.2}.heisenberg_params())) <
        1e-14);
  CHECK(max_abs(factor_symplectic({FactorKind::TwoModeScale, 0.2}) -
                target_symplectic(sp.heisenberg_params())) < 1e-14);
}

TEST_CASE("factor actions", "[symplectic]") {
  // exp(i chi (P1+P2)^2) shifts q+ by 4 chi p+.
  const Mat4 fp = to_collective(factor_symplectic({FactorKind::FreePropPlus, 0.25}));
  CHECK_THAT(fp(kQPlus, kQPlus), WithinAbs(1.0, 1e-15));
  CHECK_THAT(fp(kQPlus, kPPlus), WithinAbs(1.0, 1e-15));
  CHECK_THAT(fp(kPPlus, kPPlus), WithinAbs(1.0, 1e-15));
  const Mat4 cs = factor_symplectic({FactorKind::CollectiveScale, std::log(2.0)});
  CHECK_THAT(cs(kQ1, kQ1), WithinAbs(2.0, 1e-15));
  CHECK_THAT(cs(kP1, kP1), WithinAbs(0.5, 1e-15));
  CHECK_THAT(cs(kQ2, kQ2), WithinAbs(2.0, 1e-15));
  CHECK(max_abs(factor_symplectic({FactorKind::TwoModeScale, 0.0}) -
                Mat4::Identity()) < 1e-15);
  const Mat4 tm = to_collective(factor_symplectic({FactorKind::TwoModeScale, 0.3}));
  CHECK_THAT(tm(kQPlus, kQPlus), WithinAbs(std::exp(-0.3), 1e-15));
  CHECK_THAT(tm(kQMinus, kQMinus), WithinAbs(std::exp(0.3), 1e-15));
  for (int k = 0; k <= static_cast<int>(FactorKind::Su11Minus); ++k) {
    const GaussianFactor f{static_cast<FactorKind>(k), 0.37};
    CHECK(symplectic_residual(factor_symplectic(f)) < 1e-14);
    CHECK(std::string(factor_kind_name(f.kind)).size() > 0);
  }
}

TEST_CASE("composition", "[symplectic]") {
  CHECK_THROWS_AS(compose({}), Error);
  CHECK(max_abs(compose({{FactorKind::Su11Mid, 0.0}}) - Mat4::Identity()) < 1e-15);
  for (Form form : {Form::Optical, Form::Su11}) {
    const FactorSequence seq = decompose(kSample, form);
    CHECK(max_abs(compose(seq) - target_symplectic(kSample)) <= 1e-10);
    FactorSequence round = seq;
    for (const GaussianFactor &f : inverse(seq)) round.push_back(f);
    CHECK(max_abs(compose(round) - Mat4::Identity()) <= 1e-12);
  }
  CHECK(max_abs(compose(decompose(kSample, Form::Optical)) -
                compose(decompose(kSample, Form::Su11))) <= 1e-10);
  for (Form form : {Form::Optical, Form::Su11}) {
    const Mat4 r = to_collective(compose(decompose_reduced(kSample, form)));
    CHECK(max_abs(r - to_collective(reduced_target_symplectic(kSample))) <
          1e-12);
    CHECK_THAT(r(kQPlus, kQPlus), WithinAbs(2.0, 1e-14));
    CHECK_THAT(r(kPPlus, kPPlus), WithinAbs(0.5, 1e-14));
  }
}

TEST_CASE("plus blocks follow the matrix product", "[symplectic]") {
  const AbcdParams p1 = kSample;
  const AbcdParams p2 = AbcdParams::validate(0.5, -0.25, 1.0, 1.5);
  const Mat2 prod = p1.plus_block() * p2.plus_block();
  // Plus block [[A, C], [B, D]] read back as parameters.
  const AbcdParams p12 =
      AbcdParams::validate(prod(0, 0), prod(1, 0), prod(0, 1), prod(1, 1));
  CHECK((p12.plus_block() - prod).cwiseAbs().maxCoeff() < 1e-15);
  const Mat4 s12 = to_collective(target_symplectic(p12));
  const Mat4 s1 = to_collective(target_symplectic(p1));
  const Mat4 s2 = to_collective(target_symplectic(p2));
  CHECK(max_abs(s12 - s1 * s2) < 1e-14);
}

TEST_CASE("matrix logarithm identity", "[symplectic]") {
  CHECK(log_identity_residual(kUnit) <= 1e-15);
  CHECK(log_identity_residual(kSample) <= 1e-12);
  const double e = std::exp(1.0);
  CHECK(log_identity_residual(AbcdParams::validate(e, 0, 0, 1 / e)) <= 1e-12);
  // scipy.linalg.logm of the (2,1,1,1) matrix.
  Mat2 m;
  m << 0.75, -0.25, -0.25, 0.75;
  const Mat2 l = principal_log_spd(m);
  CHECK_THAT(l(0, 0), WithinAbs(-0.3465735902799726, 1e-14));
  CHECK_THAT(l(0, 1), WithinAbs(-0.3465735902799726, 1e-14));
  Mat2 indefinite;
  indefinite << 1, 2, 2, 1;
  CHECK_THROWS_AS(principal_log_spd(indefinite), Error);
}

TEST_CASE("parameter sampler", "[symplectic]") {
  ParamSampler a(42, 0.5), b(42, 0.5), c(43, 0.5);
  bool differs = false;
  for (int i = 0; i < 200; ++i) {
    const AbcdParams x = a.next(), y = b.next(), z = c.next();
    CHECK(x.a == y.a);
    CHECK(x.b == y.b);
    CHECK(x.c == y.c);
    CHECK(std::abs(std::log(x.a)) <= 0.5);
    CHECK(std::abs(std::log(x.d)) <= 0.5);
    CHECK(std::abs(x.b) <= 1.0);
    CHECK(std::abs(x.c) <= 1.0);
    CHECK(std::abs(x.a * x.d - x.b * x.c - 1.0) <= 1e-12);
    differs = differs || x.a != z.a;
  }
  CHECK(differs);
}
