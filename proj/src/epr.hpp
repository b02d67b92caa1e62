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

#include <vector>

#include "gaussian.hpp"

namespace gtso {

constexpr double kLabelEnvelope = 1.5;

// prefactor * exp(c1 a1^dagger + c2 a2^dagger + g a1^dagger a2^dagger)|00>.
struct PairCoefficients {
  Complex c1;
  Complex c2;
  Complex g;
  Complex prefactor;
};

// |eta>: c1 = eta, c2 = -conj(eta), g = 1.
PairCoefficients eta_coefficients(Complex eta);
// |xi>: c1 = xi, c2 = conj(xi), g = -1.
PairCoefficients xi_coefficients(Complex xi);
// |eta>_{D,B} with z = D + iB: c1 = eta/z, c2 = -conj(eta)/z,
// g = conj(z)/z, prefactor exp(-(A - iC)|eta|^2/(2z))/z.
PairCoefficients eta_db_coefficients(Complex eta, const AbcdParams &params);

// Amplitudes with n1, n2 <= cutoff and n1 + n2 <= total.
FockState pair_state(const PairCoefficients &pc, int cutoff, int total);

FockState eta_state(Complex eta, const TruncationConfig &config);
FockState xi_state(Complex xi, const TruncationConfig &config);
FockState eta_db_state(Complex eta, const AbcdParams &params,
                       const TruncationConfig &config);

bool within_envelope(Complex label);

enum class EigenPair { Eta, Xi, Db };

// || Pi (O_i - sqrt2 e_i) psi || / || Pi psi || for the two operators of the
// pair:
//   Eta: Q1 - Q2, P1 + P2
//   Xi:  Q1 + Q2, P1 - P2
//   Db:  D(Q1 - Q2) - B(P1 - P2), B(Q1 + Q2) + D(P1 + P2)
struct EigenResiduals {
  double first = 0.0;
  double second = 0.0;
};

EigenResiduals eigen_residuals(const FockState &psi, EigenPair pair,
                               double e1, double e2, const AbcdParams &params,
                               const TruncationConfig &config);

// Interior max-norm of the commutator of the two Db operators.
double db_pair_commutator(const AbcdParams &params,
                          const TruncationConfig &config);

// Partial sums S_n = sum_{n1, n2 <= n} conj(bra) ket, n = 0..cutoff.
std::vector<Complex> square_partial_sums(const FockState &bra,
                                         const FockState &ket);
// Repeated tail averaging s_n <- (s_n - q s_{n-1})/(1 - q); returns the
// last entry. One round with q = -1 is the two-point average.
Complex tail_averaged_sum(std::vector<Complex> partial, Complex q, int rounds);

constexpr int kDefaultAveragingRounds = 6;

Complex overlap_target(Complex xi, Complex eta);
Complex kernel_target(Complex xi, Complex eta, const AbcdParams &params);
Complex truncated_overlap(Complex xi, Complex eta,
                          const TruncationConfig &config, int rounds);
Complex truncated_kernel(Complex xi, Complex eta, const AbcdParams &params,
                         const TruncationConfig &config, int rounds);
double overlap_residual(Complex xi, Complex eta,
                        const TruncationConfig &config,
                        int rounds = kDefaultAveragingRounds);
double kernel_residual(Complex xi, Complex eta, const AbcdParams &params,
                       const TruncationConfig &config,
                       int rounds = kDefaultAveragingRounds);

// Interior comparison of phi against psi: fidelity deficit, phase of the
// amplitude ratio phi/psi on the dominant component of psi relative to
// `expected_ratio`, and |ratio / expected_ratio - 1|.
struct StateComparison {
  double deficit = 0.0;
  double phase = 0.0;
  double ratio_deviation = 0.0;
};

StateComparison compare_states(const FockState &phi, const FockState &psi,
                               Complex expected_ratio);

// F2(params)|eta> against |eta>_{D,B}.
StateComparison f2_action_fidelity(Complex eta, const AbcdParams &params,
                                   const TruncationConfig &config);
// S2(lambda)|eta> against (1/mu)|eta/mu>.
StateComparison s2_scaling_fidelity(const SqueezeParam &sp, Complex eta,
                                    const TruncationConfig &config);
// exp(i ln(a) (Q1 P2 + Q2 P1))|xi> against (1/a)|xi/a>.
StateComparison dilation_fidelity(double a_scale, Complex xi,
                                  const TruncationConfig &config);

// max |<n1,n2|S2|00> - delta_{n1 n2} tanh^n(lambda)/cosh(lambda)| over the
// retained space.
double schmidt_residual(const SqueezeParam &sp, const TruncationConfig &config);

}  // namespace gtso
