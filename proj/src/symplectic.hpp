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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conventions.hpp"
#include "errors.hpp"

namespace gtso {

constexpr double kDeterminantTolerance = 1e-12;

struct AbcdParams {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  static AbcdParams validate(double a, double b, double c, double d);
  static AbcdParams identity() { return {}; }
  Mat2 plus_block() const;
  Mat2 minus_block() const;
};

struct SqueezeParam {
  double lambda = 0.0;
  double mu() const;
  // Heisenberg parameters of the two-mode squeezer: (1/mu, 0, 0, mu).
  AbcdParams heisenberg_params() const;
};

enum class FactorKind {
  FreePropPlus,
  FreePropMinus,
  CollectiveScale,
  TwoModeScale,
  ThinLensMinus,
  ThinLensPlus,
  Su11Plus,
  Su11Mid,
  Su11Minus,
};

const char *factor_kind_name(FactorKind kind);

struct GaussianFactor {
  FactorKind kind;
  double value;

  GaussianFactor inverse() const { return {kind, -value}; }
};

using FactorSequence = std::vector<GaussianFactor>;

enum class Form { Optical, Su11 };

// The full factorization of F2, leftmost factor applied last.
FactorSequence decompose(const AbcdParams &params, Form form);

// The reduced operator obtained after the outer plus-mode free propagation
// and thin lens are stripped; its plus block is diag(A, 1/A).
FactorSequence decompose_reduced(const AbcdParams &params, Form form);

FactorSequence inverse(const FactorSequence &seq);

Mat4 target_symplectic(const AbcdParams &params);
Mat4 reduced_target_symplectic(const AbcdParams &params);

// Collective-basis 2x2 blocks of a factor, plus then minus.
std::pair<Mat2, Mat2> factor_blocks(const GaussianFactor &factor);
Mat4 factor_symplectic(const GaussianFactor &factor);
Mat4 compose(const FactorSequence &seq);

double symplectic_residual(const Mat4 &s);

// Principal logarithm of a symmetric positive definite 2x2 matrix.
Mat2 principal_log_spd(const Mat2 &m);
double log_identity_residual(const AbcdParams &params);

// Deterministic sampler for valid parameters with |ln A|, |ln D| <= log_range
// and |B|, |C| <= 1.
class ParamSampler {
 public:
  ParamSampler(std::uint64_t seed, double log_range);
  AbcdParams next();

 private:
  double uniform();
  std::mt19937_64 rng_;
  double log_range_;
};

}  // namespace gtso
