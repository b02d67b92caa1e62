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

#include "collective.hpp"

#include <algorithm>
#include <cmath>

namespace gtso {

// With a1^dagger = (b+^dagger + b-^dagger)/sqrt2 and
// a2^dagger = (b+^dagger - b-^dagger)/sqrt2, expanding a1 and a2 on both
// sides of <n1,n2|...|k+,k->_c gives
//   t M_t(n1, kp) = [ sqrt(n1 kp) M(n1-1, kp-1) + sqrt(n1 km) M(n1-1, kp)
//                   + sqrt(n2 kp) M(n1, kp-1)   - sqrt(n2 km) M(n1, kp) ] / sqrt2
// with M = M_{t-1}, n2 = t - n1, km = t - kp. Each entry mixes only
// neighbours of one shell, which keeps the recursion stable.
Eigen::MatrixXd next_shell(const Eigen::MatrixXd &prev, int t) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(t + 1, t + 1);
  if (t == 0) {
    m(0, 0) = 1.0;
    return m;
  }
  const double scale = kInvSqrt2 / t;
  for (int n1 = 0; n1 <= t; ++n1) {
    const int n2 = t - n1;
    for (int kp = 0; kp <= t; ++kp) {
      const int km = t - kp;
      double s = 0.0;
      if (n1 > 0 && kp > 0) s += std::sqrt(double(n1) * kp) * prev(n1 - 1, kp - 1);
      if (n1 > 0 && km > 0) s += std::sqrt(double(n1) * km) * prev(n1 - 1, kp);
      if (n2 > 0 && kp > 0) s += std::sqrt(double(n2) * kp) * prev(n1, kp - 1);
      if (n2 > 0 && km > 0) s -= std::sqrt(double(n2) * km) * prev(n1, kp);
      m(n1, kp) = scale * s;
    }
  }
  return m;
}

std::vector<Eigen::MatrixXd> shells(int t_max) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(t_max + 1);
  Eigen::MatrixXd prev;
  for (int t = 0; t <= t_max; ++t) {
    out.push_back(next_shell(prev, t));
    prev = out.back();
  }
  return out;
}

Eigen::MatrixXcd compress_product(const Eigen::MatrixXcd &a_plus,
                                  const Eigen::MatrixXcd &a_minus, int level) {
  const int tmax = 2 * level;
  if (a_plus.rows() <= tmax || a_plus.cols() <= tmax ||
      a_minus.rows() <= tmax || a_minus.cols() <= tmax) {
    throw Error(ErrorCode::InvalidArgument,
                "collective factors do not cover the requested level");
  }
  const std::vector<Eigen::MatrixXd> m = shells(tmax);
  const int dim = (level + 1) * (level + 1);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (int t = 0; t <= tmax; ++t) {
    const int lo = std::max(0, t - level), hi = std::min(t, level);
    for (int u = 0; u <= tmax; ++u) {
      const int ulo = std::max(0, u - level), uhi = std::min(u, level);
      Eigen::MatrixXcd g(t + 1, u + 1);
      for (int kp = 0; kp <= t; ++kp) {
        for (int lp = 0; lp <= u; ++lp) {
          g(kp, lp) = a_plus(kp, lp) * a_minus(t - kp, u - lp);
        }
      }
      const Eigen::MatrixXcd b =
          m[t].middleRows(lo, hi - lo + 1).cast<Complex>() * g *
          m[u].middleRows(ulo, uhi - ulo + 1).transpose().cast<Complex>();
      for (int n1 = lo; n1 <= hi; ++n1) {
        for (int m1 = ulo; m1 <= uhi; ++m1) {
          out(fock_index(n1, t - n1, level), fock_index(m1, u - m1, level)) =
              b(n1 - lo, m1 - ulo);
        }
      }
    }
  }
  return out;
}

Eigen::MatrixXcd to_collective(const FockState &psi, int l) {
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(l + 1, l + 1);
  Eigen::MatrixXd m;
  for (int t = 0; t <= l; ++t) {
    m = next_shell(m, t);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(t + 1);
    for (int n1 = std::max(0, t - psi.cutoff); n1 <= std::min(t, psi.cutoff);
         ++n1) {
      v(n1) = psi(n1, t - n1);
    }
    const Eigen::VectorXcd w = m.transpose().cast<Complex>() * v;
    for (int kp = 0; kp <= t; ++kp) c(kp, t - kp) = w(kp);
  }
  return c;
}

FockState from_collective(const Eigen::MatrixXcd &c, int l) {
  l = std::min<int>(l, static_cast<int>(std::min(c.rows(), c.cols())) - 1);
  FockState psi = FockState::zero(l);
  Eigen::MatrixXd m;
  for (int t = 0; t <= l; ++t) {
    m = next_shell(m, t);
    Eigen::VectorXcd w(t + 1);
    for (int kp = 0; kp <= t; ++kp) w(kp) = c(kp, t - kp);
    const Eigen::VectorXcd v = m.cast<Complex>() * w;
    for (int n1 = 0; n1 <= t; ++n1) psi(n1, t - n1) = v(n1);
  }
  return psi;
}

}  // namespace gtso
