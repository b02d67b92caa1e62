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

#include "mode.hpp"

#include <algorithm>
#include <cmath>

namespace gtso {

Mat2 ModeQuadratic::heisenberg() const {
  // d/dt (q, p) = K (q, p) with K^2 = (gamma^2 - 4 alpha beta) I.
  Mat2 k;
  k << gamma, 2.0 * beta, -2.0 * alpha, -gamma;
  const double w2 = gamma * gamma - 4.0 * alpha * beta;
  double c, s;
  if (std::abs(w2) < 1e-8) {
    c = 1.0 + w2 / 2.0 + w2 * w2 / 24.0;
    s = 1.0 + w2 / 6.0 + w2 * w2 / 120.0;
  } else if (w2 > 0.0) {
    const double w = std::sqrt(w2);
    c = std::cosh(w);
    s = std::sinh(w) / w;
  } else {
    const double w = std::sqrt(-w2);
    c = std::cos(w);
    s = std::sin(w) / w;
  }
  return c * Mat2::Identity() + s * k;
}

namespace {

int block_size(int cutoff, int parity) {
  return parity == 0 ? cutoff / 2 + 1 : (cutoff + 1) / 2;
}

}  // namespace

ModeOperator ModeOperator::identity(int cutoff) {
  ModeOperator op;
  op.cutoff_ = cutoff;
  for (int p = 0; p < 2; ++p) {
    const int m = block_size(cutoff, p);
    op.blocks_[p] = Eigen::MatrixXcd::Identity(m, m);
  }
  return op;
}

// In a parity block the levels are n_j = parity + 2j and
//   <n+2|H|n> = c sqrt((n+1)(n+2)),  c = (alpha - beta)/2 + i gamma/2,
//   <n|H|n>   = (alpha + beta)(n + 1/2).
// With D = diag(e^{i j arg c}) the block is D T D^dagger for real symmetric
// tridiagonal T.
ModeOperator ModeOperator::exp_quadratic(const ModeQuadratic &h, int cutoff) {
  if (h.is_zero()) return identity(cutoff);
  const Complex c(0.5 * (h.alpha - h.beta), 0.5 * h.gamma);
  const double phi = std::arg(c);
  const double cabs = std::abs(c);
  ModeOperator op;
  op.cutoff_ = cutoff;
  for (int p = 0; p < 2; ++p) {
    const int m = block_size(cutoff, p);
    Eigen::VectorXd diag(m);
    Eigen::VectorXd sub(std::max(m - 1, 0));
    for (int j = 0; j < m; ++j) {
      const double n = p + 2.0 * j;
      diag(j) = (h.alpha + h.beta) * (n + 0.5);
      if (j + 1 < m) sub(j) = cabs * std::sqrt((n + 1.0) * (n + 2.0));
    }
    Eigen::MatrixXd vc, vs;
    Eigen::MatrixXd v;
    Eigen::VectorXd ev;
    if (m == 1) {
      v = Eigen::MatrixXd::Identity(1, 1);
      ev = diag;
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      v = es.eigenvectors();
      ev = es.eigenvalues();
    }
    vc = v * ev.array().cos().matrix().asDiagonal();
    vs = v * ev.array().sin().matrix().asDiagonal();
    Eigen::MatrixXcd e(m, m);
    e.real() = vc * v.transpose();
    e.imag() = vs * v.transpose();
    Eigen::VectorXcd ph(m);
    for (int j = 0; j < m; ++j) ph(j) = std::polar(1.0, phi * j);
    op.blocks_[p] = ph.asDiagonal() * e * ph.conjugate().asDiagonal();
  }
  return op;
}

ModeOperator ModeOperator::operator*(const ModeOperator &other) const {
  ModeOperator out;
  out.cutoff_ = cutoff_;
  for (int p = 0; p < 2; ++p) {
    out.blocks_[p].noalias() = blocks_[p] * other.blocks_[p];
  }
  return out;
}

ModeOperator ModeOperator::adjoint() const {
  ModeOperator out;
  out.cutoff_ = cutoff_;
  for (int p = 0; p < 2; ++p) out.blocks_[p] = blocks_[p].adjoint();
  return out;
}

Complex ModeOperator::operator()(int m, int n) const {
  if ((m - n) % 2 != 0) return 0.0;
  return blocks_[m % 2](m / 2, n / 2);
}

Eigen::MatrixXcd ModeOperator::top_rows(int last) const {
  last = std::min(last, cutoff_);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(last + 1, cutoff_ + 1);
  for (int r = 0; r <= last; ++r) {
    const Eigen::MatrixXcd &b = blocks_[r % 2];
    for (int j = 0; j < b.cols(); ++j) out(r, r % 2 + 2 * j) = b(r / 2, j);
  }
  return out;
}

Eigen::MatrixXcd ModeOperator::left_cols(int last) const {
  return adjoint().top_rows(last).adjoint();
}

Eigen::MatrixXcd ModeOperator::dense() const { return top_rows(cutoff_); }

double ModeOperator::tail_weight(int last, int start) const {
  last = std::min(last, cutoff_);
  double worst = 0.0;
  for (int p = 0; p < 2; ++p) {
    const Eigen::MatrixXcd &b = blocks_[p];
    const int first = std::max(0, (start - p + 1) / 2);
    if (first >= b.cols()) continue;
    const int rows =
        last < p ? 0 : std::min<int>(b.rows(), (last - p) / 2 + 1);
    if (rows <= 0) continue;
    const int len = b.cols() - first;
    worst = std::max(
        worst,
        b.block(0, first, rows, len).rowwise().norm().maxCoeff());
    worst = std::max(
        worst,
        b.block(first, 0, len, rows).colwise().norm().maxCoeff());
  }
  return worst;
}

Eigen::MatrixXcd mode_quadrature(bool momentum, int cutoff) {
  return right_multiply_quadrature(
      Eigen::MatrixXcd::Identity(cutoff + 1, cutoff + 1), momentum);
}

Eigen::MatrixXcd right_multiply_quadrature(const Eigen::MatrixXcd &m,
                                           bool momentum) {
  const int w = static_cast<int>(m.cols()) - 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
  // X[c-1, c] and X[c+1, c] for Q = (a + a^dagger)/sqrt2 and
  // P = i(a^dagger - a)/sqrt2.
  const Complex down = momentum ? Complex(0.0, -kInvSqrt2) : kInvSqrt2;
  const Complex up = momentum ? Complex(0.0, kInvSqrt2) : kInvSqrt2;
  for (int c = 0; c <= w; ++c) {
    if (c > 0) out.col(c) += (down * std::sqrt(double(c))) * m.col(c - 1);
    if (c < w) out.col(c) += (up * std::sqrt(c + 1.0)) * m.col(c + 1);
  }
  return out;
}

}  // namespace gtso
