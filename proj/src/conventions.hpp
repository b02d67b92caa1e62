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

// Project-wide phase-space conventions.
//
// Quadratures: Q = (a + a^dagger)/sqrt2, P = i(a^dagger - a)/sqrt2, [Q,P] = i.
// Mode basis ordering R = (q1, p1, q2, p2).
// Collective basis ordering Rc = (q+, p+, q-, p-) with
//   q+- = (q1 +- q2)/sqrt2,  p+- = (p1 +- p2)/sqrt2,
// so that R = O Rc with the symmetric orthogonal matrix O below.
//
// A unitary F is represented by the real 4x4 matrix S with
//   F R F^-1 = S R        (componentwise operator identity).
// Under this convention an operator product F = X Y maps to S_F = S_Y S_X.
//
// Fock index of |n1, n2> in a retained space with cutoff n is n1 (n+1) + n2.

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace gtso {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

constexpr double kInvSqrt2 = 0.70710678118654752440;

enum Quadrature : int { kQ1 = 0, kP1 = 1, kQ2 = 2, kP2 = 3 };
enum CollectiveQuadrature : int {
  kQPlus = 0,
  kPPlus = 1,
  kQMinus = 2,
  kPMinus = 3
};

// J with J(q_i, p_i) = +1.
inline Mat4 symplectic_form() {
  Mat4 j = Mat4::Zero();
  j(0, 1) = 1.0;
  j(1, 0) = -1.0;
  j(2, 3) = 1.0;
  j(3, 2) = -1.0;
  return j;
}

// R = O Rc. O is symmetric and orthogonal, and preserves J.
inline Mat4 collective_basis() {
  Mat4 o = Mat4::Zero();
  o(kQ1, kQPlus) = kInvSqrt2;
  o(kQ1, kQMinus) = kInvSqrt2;
  o(kP1, kPPlus) = kInvSqrt2;
  o(kP1, kPMinus) = kInvSqrt2;
  o(kQ2, kQPlus) = kInvSqrt2;
  o(kQ2, kQMinus) = -kInvSqrt2;
  o(kP2, kPPlus) = kInvSqrt2;
  o(kP2, kPMinus) = -kInvSqrt2;
  return o;
}

inline Mat4 to_collective(const Mat4 &s_mode) {
  const Mat4 o = collective_basis();
  return o.transpose() * s_mode * o;
}

inline Mat4 from_collective(const Mat4 &s_coll) {
  const Mat4 o = collective_basis();
  return o * s_coll * o.transpose();
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline int fock_index(int n1, int n2, int cutoff) {
  return n1 * (cutoff + 1) + n2;
}

}  // namespace gtso
