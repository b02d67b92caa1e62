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

#include <array>
#include <utility>

#include "fock.hpp"
#include "mode.hpp"
#include "symplectic.hpp"

namespace gtso {

// H = (1/2) sum_ij g_ij (R_i R_j + R_j R_i)/2 in the mode basis.
struct QuadraticForm {
  Mat4 g = Mat4::Zero();
};

QuadraticForm factor_generator(const GaussianFactor &factor);
// -i lambda (a1^dagger a2^dagger - a1 a2) written in quadratures.
QuadraticForm s2_generator(const SqueezeParam &sp);

// Split into independent collective-mode quadratics; throws
// InvalidArgument if the form couples the plus and minus modes.
std::pair<ModeQuadratic, ModeQuadratic> split_collective(
    const QuadraticForm &h);

// Literal generator on the retained space, built from truncated quadratures.
FockOperator generator_matrix(const QuadraticForm &h, int cutoff);
// exp(iH) of the literal retained-space generator.
FockOperator realize_factor_truncated(const GaussianFactor &factor,
                                      const TruncationConfig &config);

// A Gaussian unitary that factorizes as F+ (x) F- over the collective modes,
// each held on a working cutoff W.
class GaussianUnitary {
 public:
  static GaussianUnitary identity(int work_cutoff);
  static GaussianUnitary exp_quadratic(const QuadraticForm &h,
                                       int work_cutoff);

  GaussianUnitary(ModeOperator plus, ModeOperator minus);

  int work_cutoff() const { return plus_.cutoff(); }
  const ModeOperator &plus() const { return plus_; }
  const ModeOperator &minus() const { return minus_; }
  GaussianUnitary operator*(const GaussianUnitary &other) const;
  GaussianUnitary adjoint() const;

  // Exact matrix elements between |n1,n2>, n1, n2 <= level.
  FockOperator compress(int level) const;

  // Largest tail weight seen while the operator was assembled: rows of the
  // left partial products and columns of the right partial products, over
  // levels 0..rows, beyond the given fraction of W.
  double assembly_tail() const { return assembly_tail_; }
  void set_assembly_tail(double t) { assembly_tail_ = t; }

 private:
  ModeOperator plus_;
  ModeOperator minus_;
  double assembly_tail_ = 0.0;
};

// Options for choosing W automatically.
struct WorkCutoffPolicy {
  int rows = 0;                 // collective levels that must be accurate
  double tail_fraction = 0.9;  // tail region starts at this fraction of W
  double tail_tol = 1e-6;
};

// Product X1 X2 ... Xm at a fixed working cutoff, recording the assembly
// tail for `policy`.
GaussianUnitary realize_sequence_at(const FactorSequence &seq, int work_cutoff,
                                    const WorkCutoffPolicy &policy);
// Product with W chosen from `config` (explicit) or grown until the assembly
// tail is below policy.tail_tol.
GaussianUnitary realize_sequence(const FactorSequence &seq,
                                 const TruncationConfig &config,
                                 const WorkCutoffPolicy &policy);

WorkCutoffPolicy operator_policy(const TruncationConfig &config);
WorkCutoffPolicy state_policy(const TruncationConfig &config);

// Without a policy these use operator_policy(config).
GaussianUnitary realize_factor(const GaussianFactor &factor,
                               const TruncationConfig &config);
GaussianUnitary realize_factor(const GaussianFactor &factor,
                               const TruncationConfig &config,
                               const WorkCutoffPolicy &policy);
GaussianUnitary realize_gtso(const AbcdParams &params, Form form,
                             const TruncationConfig &config);
GaussianUnitary realize_gtso(const AbcdParams &params, Form form,
                             const TruncationConfig &config,
                             const WorkCutoffPolicy &policy);
GaussianUnitary realize_s2(const SqueezeParam &sp,
                           const TruncationConfig &config);
GaussianUnitary realize_s2(const SqueezeParam &sp,
                           const TruncationConfig &config,
                           const WorkCutoffPolicy &policy);

// Collective-basis Heisenberg residuals
//   || Pi [U X U^dagger - sum_j S_c(X, j) R_j] Pi ||_2 / || Pi X Pi ||_2
// for X = q+, p+, p-, q-, with S_c the collective form of target(params).
struct HeisenbergResiduals {
  double q_plus = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double q_minus = 0.0;
  double max() const;
};

HeisenbergResiduals heisenberg_residual(const GaussianUnitary &u,
                                        const AbcdParams &params,
                                        const TruncationConfig &config);
// Same residuals for a dense operator on the retained space, using retained
// space products only.
HeisenbergResiduals heisenberg_residual(const FockOperator &u,
                                        const AbcdParams &params,
                                        const TruncationConfig &config);

// || Pi (U^dagger U - I) Pi ||_max in the working representation.
double interior_unitarity(const GaussianUnitary &u,
                          const TruncationConfig &config);
double interior_unitarity(const FockOperator &u,
                          const TruncationConfig &config);

// Phase-aligned interior deviation between two operators.
double phase_aligned_deviation(const Eigen::MatrixXcd &x,
                               const Eigen::MatrixXcd &y);

// Reduced operator: optical four-factor form against its three-factor
// SU(1,1) form.
double form_equivalence_residual(const AbcdParams &params,
                                 const TruncationConfig &config);
// Full operator: optical form against SU(1,1) form.
double gtso_form_residual(const AbcdParams &params,
                          const TruncationConfig &config);

// U|00> on the triangle n1 + n2 <= W.
FockState vacuum_image(const GaussianUnitary &u);
// sigma_ij = Re<R_i R_j> - <R_i><R_j>, normalized by <psi|psi>.
Mat4 covariance(const FockState &psi);
Mat4 vacuum_covariance(const GaussianUnitary &u);
// || sigma - S^-1 (I/2) S^-T ||_max for S the Heisenberg matrix of U.
Mat4 predicted_vacuum_covariance(const Mat4 &s);
double covariance_residual(const Mat4 &sigma, const Mat4 &s);

// U applied to a state supported on n1 + n2 <= W, returning amplitudes with
// n1, n2 <= level.
FockState apply_to_state(const GaussianUnitary &u, const FockState &psi,
                         int level);

}  // namespace gtso
