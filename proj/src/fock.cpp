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

#include "fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gtso {

void TruncationConfig::validate() const {
  std::ostringstream msg;
  if (n_max < 4) {
    msg << "n_max must be >= 4 (got " << n_max << ")";
  } else if (margin < 2) {
    msg << "margin must be >= 2 (got " << margin << ")";
  } else if (margin >= n_max) {
    msg << "margin must be < n_max (got " << margin << " >= " << n_max << ")";
  } else if (dimension() > kDimensionCap) {
    msg << "(n_max+1)^2 = " << dimension() << " exceeds the cap "
        << kDimensionCap;
  } else if (!(tol > 0.0) || !std::isfinite(tol)) {
    msg << "tol must be positive and finite";
  } else if (work_cutoff != 0 &&
             (work_cutoff < 2 * n_max + 2 || work_cutoff > kWorkCutoffCap)) {
    msg << "work cutoff must be 0 (automatic) or in [" << 2 * n_max + 2
        << ", " << kWorkCutoffCap << "] (got " << work_cutoff << ")";
  } else {
    return;
  }
  throw Error(ErrorCode::InvalidConfig, msg.str());
}

FockOperator FockOperator::zero(int cutoff) {
  const int n = (cutoff + 1) * (cutoff + 1);
  return {cutoff, Eigen::MatrixXcd::Zero(n, n)};
}

FockOperator FockOperator::identity(int cutoff) {
  const int n = (cutoff + 1) * (cutoff + 1);
  return {cutoff, Eigen::MatrixXcd::Identity(n, n)};
}

FockState FockState::zero(int cutoff) {
  return {cutoff, Eigen::VectorXcd::Zero((cutoff + 1) * (cutoff + 1))};
}

FockState FockState::vacuum(int cutoff) {
  FockState s = zero(cutoff);
  s.amplitudes(0) = 1.0;
  return s;
}

FockOperator ladder(int mode, int cutoff) {
  if (mode != 1 && mode != 2) {
    throw Error(ErrorCode::InvalidArgument, "mode must be 1 or 2");
  }
  FockOperator a = FockOperator::zero(cutoff);
  for (int n1 = 0; n1 <= cutoff; ++n1) {
    for (int n2 = 0; n2 <= cutoff; ++n2) {
      const int n = mode == 1 ? n1 : n2;
      if (n == 0) continue;
      const int row = mode == 1 ? fock_index(n1 - 1, n2, cutoff)
                                : fock_index(n1, n2 - 1, cutoff);
      a.matrix(row, fock_index(n1, n2, cutoff)) = std::sqrt(double(n));
    }
  }
  return a;
}

FockOperator quadrature(int mode, QuadratureKind kind, int cutoff) {
  const FockOperator a = ladder(mode, cutoff);
  const Eigen::MatrixXcd ad = a.matrix.adjoint();
  if (kind == QuadratureKind::Q) {
    return {cutoff, kInvSqrt2 * (a.matrix + ad)};
  }
  return {cutoff, Complex(0.0, kInvSqrt2) * (ad - a.matrix)};
}

FockOperator number(int mode, int cutoff) {
  const FockOperator a = ladder(mode, cutoff);
  return {cutoff, a.matrix.adjoint() * a.matrix};
}

FockOperator hermitian_exp(const FockOperator &h, double tol) {
  const double dev = max_abs(h.matrix - h.matrix.adjoint());
  if (!(dev <= tol)) {
    std::ostringstream msg;
    msg << "generator is not Hermitian (max deviation " << dev << ")";
    throw Error(ErrorCode::NotHermitian, msg.str());
  }
  const Eigen::MatrixXcd herm = 0.5 * (h.matrix + h.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
  const Eigen::VectorXcd phases =
      (Complex(0.0, 1.0) * es.eigenvalues().cast<Complex>()).array().exp();
  return {h.cutoff, es.eigenvectors() * phases.asDiagonal() *
                        es.eigenvectors().adjoint()};
}

std::vector<int> interior_indices(int cutoff, int level) {
  std::vector<int> idx;
  idx.reserve((level + 1) * (level + 1));
  for (int n1 = 0; n1 <= level; ++n1) {
    for (int n2 = 0; n2 <= level; ++n2) {
      idx.push_back(fock_index(n1, n2, cutoff));
    }
  }
  return idx;
}

Eigen::MatrixXcd interior_block(const FockOperator &op, int level) {
  const std::vector<int> idx = interior_indices(op.cutoff, level);
  return op.matrix(idx, idx);
}

FockState restrict_state(const FockState &psi, int level) {
  const std::vector<int> idx =
      interior_indices(psi.cutoff, std::min(level, psi.cutoff));
  FockState out = FockState::zero(level);
  if (level <= psi.cutoff) {
    out.amplitudes = psi.amplitudes(idx);
    return out;
  }
  for (int n1 = 0; n1 <= psi.cutoff; ++n1) {
    for (int n2 = 0; n2 <= psi.cutoff; ++n2) out(n1, n2) = psi(n1, n2);
  }
  return out;
}

double spectral_norm(const Eigen::MatrixXcd &m) {
  if (m.size() == 0) return 0.0;
  // Largest eigenvalue of the Gram matrix; much cheaper than an SVD.
  const Eigen::MatrixXcd g = m.rows() >= m.cols() ? Eigen::MatrixXcd(m.adjoint() * m)
                                                  : Eigen::MatrixXcd(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double canonical_residual(const TruncationConfig &config) {
  config.validate();
  const int n = config.n_max;
  const int k = config.interior();
  double worst = 0.0;
  for (int i = 1; i <= 2; ++i) {
    const FockOperator q = quadrature(i, QuadratureKind::Q, n);
    for (int j = 1; j <= 2; ++j) {
      const FockOperator p = quadrature(j, QuadratureKind::P, n);
      FockOperator c{n, q.matrix * p.matrix - p.matrix * q.matrix};
      if (i == j) {
        c.matrix -= Complex(0.0, 1.0) *
                    Eigen::MatrixXcd::Identity(c.dim(), c.dim());
      }
      worst = std::max(worst, max_abs(interior_block(c, k)));
    }
  }
  return worst;
}

Su11Residuals su11_residuals(const TruncationConfig &config) {
  config.validate();
  const int n = config.n_max;
  const int k = config.interior();
  const Eigen::MatrixXcd q1 = quadrature(1, QuadratureKind::Q, n).matrix;
  const Eigen::MatrixXcd p1 = quadrature(1, QuadratureKind::P, n).matrix;
  const Eigen::MatrixXcd q2 = quadrature(2, QuadratureKind::Q, n).matrix;
  const Eigen::MatrixXcd p2 = quadrature(2, QuadratureKind::P, n).matrix;
  const Eigen::MatrixXcd qm = q1 - q2, qp = q1 + q2;
  const Eigen::MatrixXcd pp = p1 + p2, pm = p1 - p2;
  const Eigen::MatrixXcd kp = 0.25 * (qm * qm + pp * pp);
  const Eigen::MatrixXcd km = 0.25 * (qp * qp + pm * pm);
  const Eigen::MatrixXcd k0 = Complex(0.0, -0.5) * (q1 * p2 + q2 * p1);
  auto comm = [](const Eigen::MatrixXcd &x, const Eigen::MatrixXcd &y) {
    return Eigen::MatrixXcd(x * y - y * x);
  };
  const Eigen::MatrixXcd r1 = comm(kp, km) - 2.0 * k0;
  const Eigen::MatrixXcd r2 = comm(k0, kp) - kp;
  const Eigen::MatrixXcd r3 = comm(k0, km) + km;
  const Eigen::MatrixXcd printed = comm(kp, km) - k0;
  auto inner = [&](const Eigen::MatrixXcd &m) {
    return max_abs(interior_block(FockOperator{n, m}, k));
  };
  Su11Residuals out;
  out.k_plus_k_minus = inner(r1);
  out.k0_k_plus = inner(r2);
  out.k0_k_minus = inner(r3);
  out.printed_k_plus_k_minus = inner(printed);
  out.unprojected_max = std::max({max_abs(r1), max_abs(r2), max_abs(r3)});
  return out;
}

}  // namespace gtso
