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

#include "conventions.hpp"
#include "errors.hpp"

namespace gtso {

constexpr int kDimensionCap = 4096;
constexpr int kWorkCutoffCap = 3000;

struct TruncationConfig {
  int n_max = 16;
  int margin = 6;
  double tol = 1e-8;
  // Per collective mode working cutoff; 0 selects it automatically.
  int work_cutoff = 0;

  void validate() const;
  int interior() const { return n_max - margin; }
  int dimension() const { return (n_max + 1) * (n_max + 1); }
};

// Dense operator on the square two-mode space with levels 0..cutoff.
struct FockOperator {
  int cutoff = 0;
  Eigen::MatrixXcd matrix;

  static FockOperator zero(int cutoff);
  static FockOperator identity(int cutoff);
  int dim() const { return (cutoff + 1) * (cutoff + 1); }
  FockOperator adjoint() const { return {cutoff, matrix.adjoint()}; }
};

// Dense state on the square two-mode space with levels 0..cutoff.
struct FockState {
  int cutoff = 0;
  Eigen::VectorXcd amplitudes;

  static FockState zero(int cutoff);
  static FockState vacuum(int cutoff);
  Complex operator()(int n1, int n2) const {
    return amplitudes(fock_index(n1, n2, cutoff));
  }
  Complex &operator()(int n1, int n2) {
    return amplitudes(fock_index(n1, n2, cutoff));
  }
};

enum class QuadratureKind { Q, P };

FockOperator ladder(int mode, int cutoff);
FockOperator quadrature(int mode, QuadratureKind kind, int cutoff);
FockOperator number(int mode, int cutoff);

// exp(iH) for Hermitian H by eigendecomposition.
FockOperator hermitian_exp(const FockOperator &h, double tol);

// Rows and columns with n1, n2 <= level, in the index order of a space with
// cutoff `level`.
std::vector<int> interior_indices(int cutoff, int level);
Eigen::MatrixXcd interior_block(const FockOperator &op, int level);
FockState restrict_state(const FockState &psi, int level);

double spectral_norm(const Eigen::MatrixXcd &m);

// Interior residual of [Q_i, P_j] = i delta_ij, maximized over i, j.
double canonical_residual(const TruncationConfig &config);

// Three interior residuals of the SU(1,1) relations for
//   K+ = [(Q1-Q2)^2 + (P1+P2)^2]/4, K- = [(Q1+Q2)^2 + (P1-P2)^2]/4,
//   K0 = (-i/2)(Q1P2 + Q2P1):
// [K+,K-] = 2 K0, [K0,K+] = K+, [K0,K-] = -K-.
struct Su11Residuals {
  double k_plus_k_minus = 0.0;
  double k0_k_plus = 0.0;
  double k0_k_minus = 0.0;
  // [K+,K-] against K0, the constant printed in the source relations.
  double printed_k_plus_k_minus = 0.0;
  // Same three relations without interior projection.
  double unprojected_max = 0.0;
};

Su11Residuals su11_residuals(const TruncationConfig &config);

}  // namespace gtso
