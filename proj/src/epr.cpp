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

#include "epr.hpp"

#include <algorithm>
#include <cmath>

namespace gtso {

namespace {

constexpr Complex kI(0.0, 1.0);

}  // namespace

PairCoefficients eta_coefficients(Complex eta) {
  return {eta, -std::conj(eta), 1.0, std::exp(-0.5 * std::norm(eta))};
}

PairCoefficients xi_coefficients(Complex xi) {
  return {xi, std::conj(xi), -1.0, std::exp(-0.5 * std::norm(xi))};
}

PairCoefficients eta_db_coefficients(Complex eta, const AbcdParams &p) {
  const Complex z(p.d, p.b);
  const Complex pref =
      std::exp(-Complex(p.a, -p.c) * std::norm(eta) / (2.0 * z)) / z;
  return {eta / z, -std::conj(eta) / z, std::conj(z) / z, pref};
}

// From a1 psi = (c1 + g a2^dagger) psi and a2 psi = (c2 + g a1^dagger) psi:
//   sqrt(n1) psi(n1,n2) = c1 psi(n1-1,n2) + g sqrt(n2) psi(n1-1,n2-1)
//   sqrt(n2) psi(n1,n2) = c2 psi(n1,n2-1) + g sqrt(n1) psi(n1-1,n2-1)
// Stepping down the larger index keeps both terms of similar size.
FockState pair_state(const PairCoefficients &pc, int cutoff, int total) {
  FockState psi = FockState::zero(cutoff);
  for (int n1 = 0; n1 <= cutoff; ++n1) {
    for (int n2 = 0; n2 <= cutoff && n1 + n2 <= total; ++n2) {
      Complex v;
      if (n1 == 0 && n2 == 0) {
        v = pc.prefactor;
      } else if (n1 >= n2) {
        v = pc.c1 * psi(n1 - 1, n2);
        if (n2 > 0) v += pc.g * std::sqrt(double(n2)) * psi(n1 - 1, n2 - 1);
        v /= std::sqrt(double(n1));
      } else {
        v = pc.c2 * psi(n1, n2 - 1);
        if (n1 > 0) v += pc.g * std::sqrt(double(n1)) * psi(n1 - 1, n2 - 1);
        v /= std::sqrt(double(n2));
      }
      psi(n1, n2) = v;
    }
  }
  return psi;
}

FockState eta_state(Complex eta, const TruncationConfig &config) {
  config.validate();
  return pair_state(eta_coefficients(eta), config.n_max, 2 * config.n_max);
}

FockState xi_state(Complex xi, const TruncationConfig &config) {
  config.validate();
  return pair_state(xi_coefficients(xi), config.n_max, 2 * config.n_max);
}

FockState eta_db_state(Complex eta, const AbcdParams &params,
                       const TruncationConfig &config) {
  config.validate();
  return pair_state(eta_db_coefficients(eta, params), config.n_max,
                    2 * config.n_max);
}

bool within_envelope(Complex label) {
  return std::abs(label) <= kLabelEnvelope;
}

namespace {

std::array<Eigen::MatrixXcd, 2> pair_operators(EigenPair pair,
                                               const AbcdParams &p,
                                               int cutoff) {
  const Eigen::MatrixXcd q1 = quadrature(1, QuadratureKind::Q, cutoff).matrix;
  const Eigen::MatrixXcd p1 = quadrature(1, QuadratureKind::P, cutoff).matrix;
  const Eigen::MatrixXcd q2 = quadrature(2, QuadratureKind::Q, cutoff).matrix;
  const Eigen::MatrixXcd p2 = quadrature(2, QuadratureKind::P, cutoff).matrix;
  switch (pair) {
    case EigenPair::Eta:
      return {q1 - q2, p1 + p2};
    case EigenPair::Xi:
      return {q1 + q2, p1 - p2};
    case EigenPair::Db:
      return {p.d * (q1 - q2) - p.b * (p1 - p2),
              p.b * (q1 + q2) + p.d * (p1 + p2)};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown eigen pair");
}

}  // namespace

EigenResiduals eigen_residuals(const FockState &psi, EigenPair pair,
                               double e1, double e2, const AbcdParams &params,
                               const TruncationConfig &config) {
  config.validate();
  if (psi.cutoff != config.n_max) {
    throw Error(ErrorCode::InvalidArgument,
                "state cutoff differs from the configuration");
  }
  const std::vector<int> idx = interior_indices(psi.cutoff, config.interior());
  const double base = psi.amplitudes(idx).norm();
  if (!(base > 0.0)) {
    throw Error(ErrorCode::ZeroState, "state vanishes on the interior");
  }
  const auto ops = pair_operators(pair, params, psi.cutoff);
  const double ev[2] = {std::sqrt(2.0) * e1, std::sqrt(2.0) * e2};
  double r[2];
  for (int i = 0; i < 2; ++i) {
    const Eigen::VectorXcd v = ops[i] * psi.amplitudes - ev[i] * psi.amplitudes;
    r[i] = v(idx).norm() / base;
  }
  return {r[0], r[1]};
}

double db_pair_commutator(const AbcdParams &params,
                          const TruncationConfig &config) {
  config.validate();
  const auto ops = pair_operators(EigenPair::Db, params, config.n_max);
  const FockOperator c{config.n_max, ops[0] * ops[1] - ops[1] * ops[0]};
  return max_abs(interior_block(c, config.interior()));
}

std::vector<Complex> square_partial_sums(const FockState &bra,
                                         const FockState &ket) {
  const int n = std::min(bra.cutoff, ket.cutoff);
  std::vector<Complex> s(n + 1);
  Complex acc = 0.0;
  for (int m = 0; m <= n; ++m) {
    // New shell: max(n1, n2) = m.
    for (int j = 0; j < m; ++j) {
      acc += std::conj(bra(m, j)) * ket(m, j);
      acc += std::conj(bra(j, m)) * ket(j, m);
    }
    acc += std::conj(bra(m, m)) * ket(m, m);
    s[m] = acc;
  }
  return s;
}

Complex tail_averaged_sum(std::vector<Complex> s, Complex q, int rounds) {
  if (s.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no partial sums");
  }
  rounds = std::clamp(rounds, 0, static_cast<int>(s.size()) - 1);
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t n = s.size() - 1; n > static_cast<std::size_t>(r); --n) {
      s[n] = (s[n] - q * s[n - 1]) / (1.0 - q);
    }
  }
  return s.back();
}

Complex overlap_target(Complex xi, Complex eta) {
  return 0.5 * std::exp(0.5 * (eta * std::conj(xi) - xi * std::conj(eta)));
}

Complex kernel_target(Complex xi, Complex eta, const AbcdParams &p) {
  const Complex c =
      std::exp(kI * p.c * std::norm(eta) / (2.0 * p.d)) / (2.0 * p.d);
  const double phase = xi.real() * eta.imag() - xi.imag() * eta.real() -
                       0.5 * p.b * std::norm(xi);
  return c * std::exp(kI * phase / p.d);
}

Complex truncated_overlap(Complex xi, Complex eta,
                          const TruncationConfig &config, int rounds) {
  return tail_averaged_sum(
      square_partial_sums(xi_state(xi, config), eta_state(eta, config)), -1.0,
      rounds);
}

Complex truncated_kernel(Complex xi, Complex eta, const AbcdParams &params,
                         const TruncationConfig &config, int rounds) {
  const Complex z(params.d, params.b);
  return tail_averaged_sum(
      square_partial_sums(xi_state(xi, config),
                          eta_db_state(eta, params, config)),
      -std::conj(z) / z, rounds);
}

double overlap_residual(Complex xi, Complex eta,
                        const TruncationConfig &config, int rounds) {
  return std::abs(truncated_overlap(xi, eta, config, rounds) -
                  overlap_target(xi, eta));
}

double kernel_residual(Complex xi, Complex eta, const AbcdParams &params,
                       const TruncationConfig &config, int rounds) {
  return std::abs(truncated_kernel(xi, eta, params, config, rounds) -
                  kernel_target(xi, eta, params));
}

StateComparison compare_states(const FockState &phi, const FockState &psi,
                               Complex expected_ratio) {
  if (phi.cutoff != psi.cutoff) {
    throw Error(ErrorCode::InvalidArgument, "state cutoffs differ");
  }
  const double nphi = phi.amplitudes.norm();
  const double npsi = psi.amplitudes.norm();
  if (!(nphi > 0.0) || !(npsi > 0.0)) {
    throw Error(ErrorCode::ZeroState, "cannot compare a zero state");
  }
  StateComparison out;
  // Clamped at zero against rounding.
  out.deficit = std::max(
      0.0, 1.0 - std::abs(phi.amplitudes.dot(psi.amplitudes)) / (nphi * npsi));
  Eigen::Index i = 0;
  psi.amplitudes.cwiseAbs().maxCoeff(&i);
  const Complex rel = phi.amplitudes(i) / psi.amplitudes(i) / expected_ratio;
  out.phase = std::abs(std::arg(rel));
  out.ratio_deviation = std::abs(rel - 1.0);
  return out;
}

namespace {

// U applied to `input` built on a triangle reaching the working cutoff.
FockState transformed_interior(const GaussianUnitary &u,
                               const PairCoefficients &input, int level) {
  const int w = u.work_cutoff();
  return apply_to_state(u, pair_state(input, w, w), level);
}

}  // namespace

StateComparison f2_action_fidelity(Complex eta, const AbcdParams &params,
                                   const TruncationConfig &config) {
  const int k = config.interior();
  const GaussianUnitary u =
      realize_gtso(params, Form::Optical, config, state_policy(config));
  const FockState phi = transformed_interior(u, eta_coefficients(eta), k);
  const FockState psi = pair_state(eta_db_coefficients(eta, params), k, 2 * k);
  return compare_states(phi, psi, 1.0);
}

StateComparison s2_scaling_fidelity(const SqueezeParam &sp, Complex eta,
                                    const TruncationConfig &config) {
  const int k = config.interior();
  const double mu = sp.mu();
  const GaussianUnitary u = realize_s2(sp, config, state_policy(config));
  const FockState phi = transformed_interior(u, eta_coefficients(eta), k);
  const FockState psi = pair_state(eta_coefficients(eta / mu), k, 2 * k);
  return compare_states(phi, psi, 1.0 / mu);
}

StateComparison dilation_fidelity(double a_scale, Complex xi,
                                  const TruncationConfig &config) {
  if (!(a_scale > 0.0) || !std::isfinite(a_scale)) {
    throw Error(ErrorCode::InvalidArgument, "dilation scale must be positive");
  }
  const int k = config.interior();
  const GaussianUnitary u =
      realize_factor({FactorKind::Su11Mid, std::log(a_scale)}, config,
                     state_policy(config));
  const FockState phi = transformed_interior(u, xi_coefficients(xi), k);
  const FockState psi = pair_state(xi_coefficients(xi / a_scale), k, 2 * k);
  return compare_states(phi, psi, 1.0 / a_scale);
}

double schmidt_residual(const SqueezeParam &sp,
                        const TruncationConfig &config) {
  const GaussianUnitary u = realize_s2(sp, config);
  const FockState psi = restrict_state(vacuum_image(u), config.n_max);
  const double t = std::tanh(sp.lambda);
  const double c = 1.0 / std::cosh(sp.lambda);
  double worst = 0.0;
  for (int n1 = 0; n1 <= config.n_max; ++n1) {
    for (int n2 = 0; n2 <= config.n_max; ++n2) {
      const double expected = n1 == n2 ? std::pow(t, n1) * c : 0.0;
      worst = std::max(worst, std::abs(psi(n1, n2) - expected));
    }
  }
  return worst;
}

}  // namespace gtso
