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

#include "symplectic.hpp"

#include <cmath>
#include <sstream>

namespace gtso {

AbcdParams AbcdParams::validate(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d)) {
    throw Error(ErrorCode::InvalidArgument, "ABCD parameters must be finite");
  }
  const double dev = std::abs(a * d - b * c - 1.0);
  if (dev > kDeterminantTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "AD - BC - 1 = " << (a * d - b * c - 1.0) << " (|deviation| "
        << dev << " > " << kDeterminantTolerance << ")";
    throw Error(ErrorCode::DeterminantViolation, msg.str());
  }
  if (a <= 0.0 || d <= 0.0) {
    std::ostringstream msg;
    msg << "A and D must be positive (A = " << a << ", D = " << d << ")";
    throw Error(ErrorCode::NonpositiveDiagonal, msg.str());
  }
  return AbcdParams{a, b, c, d};
}

Mat2 AbcdParams::plus_block() const {
  Mat2 m;
  m << a, c, b, d;
  return m;
}

Mat2 AbcdParams::minus_block() const {
  Mat2 m;
  m << d, -b, -c, a;
  return m;
}

double SqueezeParam::mu() const { return std::exp(lambda); }

AbcdParams SqueezeParam::heisenberg_params() const {
  return AbcdParams{std::exp(-lambda), 0.0, 0.0, std::exp(lambda)};
}

const char *factor_kind_name(FactorKind kind) {
  switch (kind) {
    case FactorKind::FreePropPlus:
      return "FreePropPlus";
    case FactorKind::FreePropMinus:
      return "FreePropMinus";
    case FactorKind::CollectiveScale:
      return "CollectiveScale";
    case FactorKind::TwoModeScale:
      return "TwoModeScale";
    case FactorKind::ThinLensMinus:
      return "ThinLensMinus";
    case FactorKind::ThinLensPlus:
      return "ThinLensPlus";
    case FactorKind::Su11Plus:
      return "Su11Plus";
    case FactorKind::Su11Mid:
      return "Su11Mid";
    case FactorKind::Su11Minus:
      return "Su11Minus";
  }
  return "Unknown";
}

FactorSequence decompose(const AbcdParams &p, Form form) {
  if (form == Form::Optical) {
    return {
        {FactorKind::FreePropPlus, p.c / (4.0 * p.a)},
        {FactorKind::FreePropMinus, -p.b / (4.0 * p.d)},
        {FactorKind::CollectiveScale, 0.5 * std::log(p.a * p.d)},
        {FactorKind::TwoModeScale, 0.5 * std::log(p.d / p.a)},
        {FactorKind::ThinLensMinus, p.c / (4.0 * p.d)},
        {FactorKind::ThinLensPlus, -p.b / (4.0 * p.a)},
    };
  }
  return {
      {FactorKind::Su11Plus, p.c / (4.0 * p.a)},
      {FactorKind::Su11Mid, std::log(p.a)},
      {FactorKind::Su11Minus, -p.b / (4.0 * p.a)},
  };
}

FactorSequence decompose_reduced(const AbcdParams &p, Form form) {
  if (form == Form::Optical) {
    return {
        {FactorKind::FreePropMinus, -p.b / (4.0 * p.d)},
        {FactorKind::CollectiveScale, 0.5 * std::log(p.a * p.d)},
        {FactorKind::TwoModeScale, 0.5 * std::log(p.d / p.a)},
        {FactorKind::ThinLensMinus, p.c / (4.0 * p.d)},
    };
  }
  return {
      {FactorKind::ThinLensMinus, p.c / (4.0 * p.a)},
      {FactorKind::Su11Mid, std::log(p.a)},
      {FactorKind::FreePropMinus, -p.b / (4.0 * p.a)},
  };
}

FactorSequence inverse(const FactorSequence &seq) {
  FactorSequence out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

namespace {

Mat4 block_diag(const Mat2 &plus, const Mat2 &minus) {
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = plus;
  m.block<2, 2>(2, 2) = minus;
  return m;
}

Mat2 shear_q(double s) {  // q -> q + s p
  Mat2 m;
  m << 1.0, s, 0.0, 1.0;
  return m;
}

Mat2 shear_p(double s) {  // p -> p + s q
  Mat2 m;
  m << 1.0, 0.0, s, 1.0;
  return m;
}

Mat2 squeeze(double r) {  // q -> e^r q, p -> e^-r p
  Mat2 m;
  m << std::exp(r), 0.0, 0.0, std::exp(-r);
  return m;
}

}  // namespace

Mat4 target_symplectic(const AbcdParams &p) {
  return from_collective(block_diag(p.plus_block(), p.minus_block()));
}

Mat4 reduced_target_symplectic(const AbcdParams &p) {
  Mat2 plus;
  plus << p.a, 0.0, 0.0, 1.0 / p.a;
  return from_collective(block_diag(plus, p.minus_block()));
}

// Each generator is a quadratic in one or both collective modes; the
// exponential exp(iH) with H = kappa q^2 conjugates p -> p - 2 kappa q and
// H = chi p^2 conjugates q -> q + 2 chi p.
std::pair<Mat2, Mat2> factor_blocks(const GaussianFactor &f) {
  const double v = f.value;
  const Mat2 id = Mat2::Identity();
  switch (f.kind) {
    case FactorKind::FreePropPlus:  // 2 v p+^2
      return {shear_q(4.0 * v), id};
    case FactorKind::FreePropMinus:  // 2 v p-^2
      return {id, shear_q(4.0 * v)};
    case FactorKind::CollectiveScale:  // v (q+p+ + q-p- + h.c.)/2
      return {squeeze(v), squeeze(v)};
    case FactorKind::TwoModeScale:  // -v (q+p+ - q-p-)
      return {squeeze(-v), squeeze(v)};
    case FactorKind::ThinLensMinus:  // 2 v q-^2
      return {id, shear_p(-4.0 * v)};
    case FactorKind::ThinLensPlus:  // 2 v q+^2
      return {shear_p(-4.0 * v), id};
    case FactorKind::Su11Plus:  // 2 v (p+^2 + q-^2)
      return {shear_q(4.0 * v), shear_p(-4.0 * v)};
    case FactorKind::Su11Mid:  // v (q+p+ - q-p-)
      return {squeeze(v), squeeze(-v)};
    case FactorKind::Su11Minus:  // 2 v (q+^2 + p-^2)
      return {shear_p(-4.0 * v), shear_q(4.0 * v)};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown factor kind");
}

Mat4 factor_symplectic(const GaussianFactor &f) {
  if (!std::isfinite(f.value)) {
    throw Error(ErrorCode::InvalidArgument, "factor parameter must be finite");
  }
  const auto [plus, minus] = factor_blocks(f);
  return from_collective(block_diag(plus, minus));
}

Mat4 compose(const FactorSequence &seq) {
  if (seq.empty()) {
    throw Error(ErrorCode::EmptySequence, "cannot compose an empty sequence");
  }
  // F = X1 X2 ... Xm gives S_F = S_m ... S_1.
  Mat4 s = Mat4::Identity();
  for (const GaussianFactor &f : seq) {
    s = factor_symplectic(f) * s;
  }
  return s;
}

double symplectic_residual(const Mat4 &s) {
  const Mat4 j = symplectic_form();
  return max_abs(s * j * s.transpose() - j);
}

Mat2 principal_log_spd(const Mat2 &m) {
  if (!m.allFinite() || std::abs(m(0, 1) - m(1, 0)) > 1e-14 * m.norm()) {
    throw Error(ErrorCode::LogDomain, "matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat2> es(m);
  const Eigen::Vector2d ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0) {
    throw Error(ErrorCode::LogDomain, "matrix is not positive definite");
  }
  const Eigen::Vector2d logs = ev.array().log();
  return es.eigenvectors() * logs.asDiagonal() *
         es.eigenvectors().transpose();
}

double log_identity_residual(const AbcdParams &p) {
  const double s = 0.5 / p.a + 0.5 / p.d;
  const double t = 0.5 / p.a - 0.5 / p.d;
  Mat2 m;
  m << s, t, t, s;
  const double u = -0.5 * std::log(p.a * p.d);
  const double w = 0.5 * std::log(p.d / p.a);
  Mat2 expected;
  expected << u, w, w, u;
  return (principal_log_spd(m) - expected).cwiseAbs().maxCoeff();
}

ParamSampler::ParamSampler(std::uint64_t seed, double log_range)
    : rng_(seed), log_range_(log_range) {}

double ParamSampler::uniform() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

AbcdParams ParamSampler::next() {
  for (;;) {
    const double la = log_range_ * (2.0 * uniform() - 1.0);
    const double ld = log_range_ * (2.0 * uniform() - 1.0);
    const double a = std::exp(la);
    const double d = std::exp(ld);
    const double g = a * d - 1.0;
    const double u = uniform();
    const double sign = uniform() < 0.5 ? -1.0 : 1.0;
    if (std::abs(g) > 1.0) continue;
    if (g == 0.0) {
      return AbcdParams{a, 2.0 * u - 1.0, 0.0, d};
    }
    const double b = sign * (std::abs(g) + (1.0 - std::abs(g)) * u);
    const double c = g / b;
    return AbcdParams{a, b, c, d};
  }
}

}  // namespace gtso
