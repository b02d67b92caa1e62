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

#include "conventions.hpp"

namespace gtso {

// H = alpha q^2 + beta p^2 + gamma (qp + pq)/2 on a single mode.
struct ModeQuadratic {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  bool is_zero() const { return alpha == 0.0 && beta == 0.0 && gamma == 0.0; }
  // Heisenberg map of exp(iH) on (q, p).
  Mat2 heisenberg() const;
};

// Parity-preserving operator on one mode with levels 0..cutoff, stored as
// its even and odd blocks.
class ModeOperator {
 public:
  static ModeOperator identity(int cutoff);
  // exp(iH) from the real symmetric tridiagonal form of each parity block.
  static ModeOperator exp_quadratic(const ModeQuadratic &h, int cutoff);

  int cutoff() const { return cutoff_; }
  const Eigen::MatrixXcd &block(int parity) const { return blocks_[parity]; }

  ModeOperator operator*(const ModeOperator &other) const;
  ModeOperator adjoint() const;
  Complex operator()(int m, int n) const;

  // Rows 0..last of the full matrix.
  Eigen::MatrixXcd top_rows(int last) const;
  // Columns 0..last of the full matrix.
  Eigen::MatrixXcd left_cols(int last) const;
  Eigen::MatrixXcd dense() const;

  // Largest l2 weight, over rows (or columns) 0..last, carried by entries
  // with column (or row) index >= start.
  double tail_weight(int last, int start) const;

 private:
  int cutoff_ = 0;
  std::array<Eigen::MatrixXcd, 2> blocks_;
};

// Tridiagonal single-mode quadrature matrices at a given cutoff.
Eigen::MatrixXcd mode_quadrature(bool momentum, int cutoff);

// M X for the mode quadrature X at cutoff m.cols() - 1, without forming X.
Eigen::MatrixXcd right_multiply_quadrature(const Eigen::MatrixXcd &m,
                                           bool momentum);

}  // namespace gtso
