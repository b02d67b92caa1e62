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

// Change of basis between |n1, n2> and the collective number basis
// |k+, k->_c of b+- = (a1 +- a2)/sqrt2. Both conserve n1 + n2 = k+ + k- = t,
// so the change of basis is a real orthogonal (t+1)x(t+1) matrix per shell:
//   M_t(n1, k+) = <n1, t-n1 | k+, t-k+>_c.

#pragma once

#include <vector>

#include "fock.hpp"

namespace gtso {

// Shell t from shell t-1 by the two-sided recursion in n1 and k+.
Eigen::MatrixXd next_shell(const Eigen::MatrixXd &prev, int t);

// All shells 0..t_max.
std::vector<Eigen::MatrixXd> shells(int t_max);

// Matrix elements of A+ (x) A- between |n1,n2> with n1, n2 <= level, in the
// index order of a square space with cutoff `level`. Both factors must
// cover collective levels 0..2 level.
Eigen::MatrixXcd compress_product(const Eigen::MatrixXcd &a_plus,
                                  const Eigen::MatrixXcd &a_minus, int level);

// Amplitudes psi(n1, n2) with n1 + n2 <= l as a collective-basis matrix
// C(k+, k-) with k+ + k- <= l, and back.
Eigen::MatrixXcd to_collective(const FockState &psi, int l);
FockState from_collective(const Eigen::MatrixXcd &c, int l);

}  // namespace gtso
