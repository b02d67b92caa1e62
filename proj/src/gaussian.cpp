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

#include "gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "collective.hpp"

namespace gtso {

namespace {

using Eigen::Vector4d;

Mat4 outer(const Vector4d &u) { return u * u.transpose(); }

void set_pair(Mat4 &g, int i, int j, double v) {
  g(i, j) = v;
  g(j, i) = v;
}

}  // namespace

QuadraticForm factor_generator(const GaussianFactor &f) {
  if (!std::isfinite(f.value)) {
    throw Error(ErrorCode::InvalidArgument, "factor parameter must be finite");
  }
  const double v = f.value;
  const Vector4d q_minus(1, 0, -1, 0), q_plus(1, 0, 1, 0);
  const Vector4d p_minus(0, 1, 0, -1), p_plus(0, 1, 0, 1);
  QuadraticForm h;
  switch (f.kind) {
    case FactorKind::FreePropPlus:  // v (P1+P2)^2
      h.g = 2.0 * v * outer(p_plus);
      break;
    case FactorKind::FreePropMinus:  // v (P1-P2)^2
      h.g = 2.0 * v * outer(p_minus);
      break;
    case FactorKind::CollectiveScale:  // v sum_j (P_j Q_j + Q_j P_j)/2
      set_pair(h.g, kQ1, kP1, v);
      set_pair(h.g, kQ2, kP2, v);
      break;
    case FactorKind::TwoModeScale:  // -v (P1 Q2 + P2 Q1)
      set_pair(h.g, kP1, kQ2, -v);
      set_pair(h.g, kP2, kQ1, -v);
      break;
    case FactorKind::ThinLensMinus:  // v (Q1-Q2)^2
      h.g = 2.0 * v * outer(q_minus);
      break;
    case FactorKind::ThinLensPlus:  // v (Q1+Q2)^2
      h.g = 2.0 * v * outer(q_plus);
      break;
    case FactorKind::Su11Plus:  // v [(Q1-Q2)^2 + (P1+P2)^2]
      h.g = 2.0 * v * (outer(q_minus) + outer(p_plus));
      break;
    case FactorKind::Su11Mid:  // v (Q1 P2 + Q2 P1)
      set_pair(h.g, kQ1, kP2, v);
      set_pair(h.g, kQ2, kP1, v);
      break;
    case FactorKind::Su11Minus:  // v [(Q1+Q2)^2 + (P1-P2)^2]
      h.g = 2.0 * v * (outer(q_plus) + outer(p_minus));
      break;
  }
  return h;
}

// a1^dagger a2^dagger - a1 a2 = -i (Q1 P2 + P1 Q2), so the generator is
// -lambda (Q1 P2 + Q2 P1).
QuadraticForm s2_generator(const SqueezeParam &sp) {
  QuadraticForm h;
  set_pair(h.g, kQ1, kP2, -sp.lambda);
  set_pair(h.g, kQ2, kP1, -sp.lambda);
  return h;
}

std::pair<ModeQuadratic, ModeQuadratic> split_collective(
    const QuadraticForm &h) {
  const Mat4 gc = to_collective(h.g);
  const double scale = std::max(1.0, h.g.cwiseAbs().maxCoeff());
  if (gc.block<2, 2>(0, 2).cwiseAbs().maxCoeff() > 1e-14 * scale) {
    throw Error(ErrorCode::InvalidArgument,
                "quadratic form couples the collective modes");
  }
  auto mode = [&](int o) {
    return ModeQuadratic{0.5 * gc(o, o), 0.5 * gc(o + 1, o + 1),
                         0.5 * (gc(o, o + 1) + gc(o + 1, o))};
  };
  return {mode(0), mode(2)};
}

FockOperator generator_matrix(const QuadraticForm &h, int cutoff) {
  const std::array<Eigen::MatrixXcd, 4> r = {
      quadrature(1, QuadratureKind::Q, cutoff).matrix,
      quadrature(1, QuadratureKind::P, cutoff).matrix,
      quadrature(2, QuadratureKind::Q, cutoff).matrix,
      quadrature(2, QuadratureKind::P, cutoff).matrix};
  FockOperator out = FockOperator::zero(cutoff);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (h.g(i, j) == 0.0) continue;
      out.matrix += (0.25 * h.g(i, j)) * (r[i] * r[j] + r[j] * r[i]);
    }
  }
  return out;
}

FockOperator realize_factor_truncated(const GaussianFactor &factor,
                                      const TruncationConfig &config) {
  config.validate();
  return hermitian_exp(generator_matrix(factor_generator(factor), config.n_max),
                       config.tol);
}

GaussianUnitary::GaussianUnitary(ModeOperator plus, ModeOperator minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {}

GaussianUnitary GaussianUnitary::identity(int work_cutoff) {
  return {ModeOperator::identity(work_cutoff),
          ModeOperator::identity(work_cutoff)};
}

GaussianUnitary GaussianUnitary::exp_quadratic(const QuadraticForm &h,
                                               int work_cutoff) {
  const auto [plus, minus] = split_collective(h);
  return {ModeOperator::exp_quadratic(plus, work_cutoff),
          ModeOperator::exp_quadratic(minus, work_cutoff)};
}

GaussianUnitary GaussianUnitary::operator*(const GaussianUnitary &o) const {
  GaussianUnitary out(plus_ * o.plus_, minus_ * o.minus_);
  out.assembly_tail_ = std::max(assembly_tail_, o.assembly_tail_);
  return out;
}

GaussianUnitary GaussianUnitary::adjoint() const {
  GaussianUnitary out(plus_.adjoint(), minus_.adjoint());
  out.assembly_tail_ = assembly_tail_;
  return out;
}

FockOperator GaussianUnitary::compress(int level) const {
  const int r = 2 * level;
  if (r > work_cutoff()) {
    throw Error(ErrorCode::InvalidArgument,
                "working cutoff too small for the requested level");
  }
  const Eigen::MatrixXcd fp = plus_.top_rows(r).leftCols(r + 1);
  const Eigen::MatrixXcd fm = minus_.top_rows(r).leftCols(r + 1);
  return {level, compress_product(fp, fm, level)};
}

namespace {

double operator_tail(const GaussianUnitary &u, const WorkCutoffPolicy &p) {
  const int start =
      static_cast<int>(std::ceil(p.tail_fraction * u.work_cutoff()));
  return std::max(u.plus().tail_weight(p.rows, start),
                  u.minus().tail_weight(p.rows, start));
}

GaussianUnitary realize_forms_at(const std::vector<QuadraticForm> &forms,
                                 int w, const WorkCutoffPolicy &policy) {
  std::vector<GaussianUnitary> x;
  x.reserve(forms.size());
  for (const QuadraticForm &h : forms) {
    x.push_back(GaussianUnitary::exp_quadratic(h, w));
  }
  double tail = 0.0;
  GaussianUnitary left = GaussianUnitary::identity(w);
  for (const GaussianUnitary &xi : x) {
    left = left * xi;
    tail = std::max(tail, operator_tail(left, policy));
  }
  GaussianUnitary right = GaussianUnitary::identity(w);
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    right = *it * right;
    tail = std::max(tail, operator_tail(right, policy));
  }
  left.set_assembly_tail(tail);
  return left;
}

int round_even(double w) {
  int n = static_cast<int>(std::ceil(w));
  return n + (n % 2);
}

// Starting guess from the phase-space spread of the partial products: a
// level-n state is carried out to roughly n sigma^2 quanta by a map with
// largest singular value sigma.
int initial_work_cutoff(const std::vector<QuadraticForm> &forms,
                        const WorkCutoffPolicy &policy) {
  double spread = 1.0;
  const int m = static_cast<int>(forms.size());
  for (int i = 0; i < m; ++i) {
    std::array<Mat2, 2> acc = {Mat2::Identity(), Mat2::Identity()};
    for (int j = i; j < m; ++j) {
      const auto [plus, minus] = split_collective(forms[j]);
      acc[0] = plus.heisenberg() * acc[0];
      acc[1] = minus.heisenberg() * acc[1];
      for (const Mat2 &a : acc) {
        Eigen::JacobiSVD<Mat2> svd(a);
        spread = std::max(spread, svd.singularValues()(0));
      }
    }
  }
  const double s2 = spread * spread;
  const double guess = (s2 * (policy.rows + 1) + 20.0 * s2) /
                       policy.tail_fraction;
  return std::clamp(round_even(guess), round_even(policy.rows + 8.0),
                    kWorkCutoffCap);
}

GaussianUnitary realize_forms(const std::vector<QuadraticForm> &forms,
                              const TruncationConfig &config,
                              const WorkCutoffPolicy &policy) {
  config.validate();
  if (config.work_cutoff > 0) {
    return realize_forms_at(forms, config.work_cutoff, policy);
  }
  int w = initial_work_cutoff(forms, policy);
  for (;;) {
    GaussianUnitary u = realize_forms_at(forms, w, policy);
    if (u.assembly_tail() <= policy.tail_tol || w >= kWorkCutoffCap) return u;
    w = std::min(kWorkCutoffCap, round_even(1.25 * w));
  }
}

std::vector<QuadraticForm> forms_of(const FactorSequence &seq) {
  if (seq.empty()) {
    throw Error(ErrorCode::EmptySequence, "cannot realize an empty sequence");
  }
  std::vector<QuadraticForm> forms;
  forms.reserve(seq.size());
  for (const GaussianFactor &f : seq) forms.push_back(factor_generator(f));
  return forms;
}

}  // namespace

GaussianUnitary realize_sequence_at(const FactorSequence &seq, int work_cutoff,
                                    const WorkCutoffPolicy &policy) {
  return realize_forms_at(forms_of(seq), work_cutoff, policy);
}

GaussianUnitary realize_sequence(const FactorSequence &seq,
                                 const TruncationConfig &config,
                                 const WorkCutoffPolicy &policy) {
  return realize_forms(forms_of(seq), config, policy);
}

// Only contamination from the hard edge at W matters for the interior, so the
// tail is measured on the last tenth of the levels. Calibrated against the
// Heisenberg residual: an edge tail of 1e-6 leaves it near 1e-13.
WorkCutoffPolicy operator_policy(const TruncationConfig &config) {
  return WorkCutoffPolicy{2 * config.interior() + 2, 0.9, 1e-6};
}

// Entangled-state inputs carry O(1) amplitudes up to the working cutoff, so
// the edge tail is held to a tighter tolerance.
WorkCutoffPolicy state_policy(const TruncationConfig &config) {
  return WorkCutoffPolicy{2 * config.interior() + 2, 0.9, 1e-8};
}

GaussianUnitary realize_factor(const GaussianFactor &factor,
                               const TruncationConfig &config) {
  return realize_factor(factor, config, operator_policy(config));
}

GaussianUnitary realize_factor(const GaussianFactor &factor,
                               const TruncationConfig &config,
                               const WorkCutoffPolicy &policy) {
  return realize_sequence({factor}, config, policy);
}

GaussianUnitary realize_gtso(const AbcdParams &params, Form form,
                             const TruncationConfig &config) {
  return realize_gtso(params, form, config, operator_policy(config));
}

GaussianUnitary realize_gtso(const AbcdParams &params, Form form,
                             const TruncationConfig &config,
                             const WorkCutoffPolicy &policy) {
  return realize_sequence(decompose(params, form), config, policy);
}

GaussianUnitary realize_s2(const SqueezeParam &sp,
                           const TruncationConfig &config) {
  return realize_s2(sp, config, operator_policy(config));
}

GaussianUnitary realize_s2(const SqueezeParam &sp,
                           const TruncationConfig &config,
                           const WorkCutoffPolicy &policy) {
  return realize_forms({s2_generator(sp)}, config, policy);
}

double HeisenbergResiduals::max() const {
  return std::max({q_plus, p_plus, p_minus, q_minus});
}

namespace {

// Dense collective quadrature (index order of kQPlus..kPMinus) on the
// retained space.
Eigen::MatrixXcd dense_collective_quadrature(int which, int cutoff) {
  const bool momentum = which == kPPlus || which == kPMinus;
  const QuadratureKind kind = momentum ? QuadratureKind::P : QuadratureKind::Q;
  const double sign = which == kQPlus || which == kPPlus ? 1.0 : -1.0;
  return kInvSqrt2 * (quadrature(1, kind, cutoff).matrix +
                      sign * quadrature(2, kind, cutoff).matrix);
}

void store(HeisenbergResiduals &out, int which, double v) {
  switch (which) {
    case kQPlus:
      out.q_plus = v;
      break;
    case kPPlus:
      out.p_plus = v;
      break;
    case kQMinus:
      out.q_minus = v;
      break;
    case kPMinus:
      out.p_minus = v;
      break;
  }
}

}  // namespace

HeisenbergResiduals heisenberg_residual(const GaussianUnitary &u,
                                        const AbcdParams &params,
                                        const TruncationConfig &config) {
  config.validate();
  const int k = config.interior();
  const int r = 2 * k;
  const Mat4 sc = to_collective(target_symplectic(params));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(r + 1, r + 1);
  const std::array<Eigen::MatrixXcd, 2> x1d = {mode_quadrature(false, r + 1),
                                               mode_quadrature(true, r + 1)};
  HeisenbergResiduals out;
  for (int which = 0; which < 4; ++which) {
    const bool plus = which < 2;
    const bool momentum = which % 2 == 1;
    const ModeOperator &f = plus ? u.plus() : u.minus();
    const Eigen::MatrixXcd y = f.top_rows(r);
    const Eigen::MatrixXcd conj =
        right_multiply_quadrature(y, momentum) * y.adjoint();
    // sum_j S_c(which, j) R_j split by mode.
    Eigen::MatrixXcd same = Eigen::MatrixXcd::Zero(r + 1, r + 1);
    Eigen::MatrixXcd other = Eigen::MatrixXcd::Zero(r + 1, r + 1);
    for (int j = 0; j < 4; ++j) {
      const Eigen::MatrixXcd xj = x1d[j % 2].topLeftCorner(r + 1, r + 1);
      if ((j < 2) == plus) {
        same += sc(which, j) * xj;
      } else {
        other += sc(which, j) * xj;
      }
    }
    const Eigen::MatrixXcd a = conj - same;
    const Eigen::MatrixXcd res =
        plus ? Eigen::MatrixXcd(compress_product(a, id, k) -
                                compress_product(id, other, k))
             : Eigen::MatrixXcd(compress_product(id, a, k) -
                                compress_product(other, id, k));
    const Eigen::MatrixXcd xd = interior_block(
        FockOperator{config.n_max,
                     dense_collective_quadrature(which, config.n_max)},
        k);
    store(out, which, spectral_norm(res) / spectral_norm(xd));
  }
  return out;
}

HeisenbergResiduals heisenberg_residual(const FockOperator &u,
                                        const AbcdParams &params,
                                        const TruncationConfig &config) {
  config.validate();
  const int n = u.cutoff;
  const int k = config.interior();
  const Mat4 sc = to_collective(target_symplectic(params));
  std::array<Eigen::MatrixXcd, 4> rc;
  for (int j = 0; j < 4; ++j) rc[j] = dense_collective_quadrature(j, n);
  HeisenbergResiduals out;
  for (int which = 0; which < 4; ++which) {
    Eigen::MatrixXcd res = u.matrix * rc[which] * u.matrix.adjoint();
    for (int j = 0; j < 4; ++j) res -= sc(which, j) * rc[j];
    const double num = spectral_norm(interior_block(FockOperator{n, res}, k));
    const double den =
        spectral_norm(interior_block(FockOperator{n, rc[which]}, k));
    store(out, which, num / den);
  }
  return out;
}

double interior_unitarity(const GaussianUnitary &u,
                          const TruncationConfig &config) {
  config.validate();
  const int k = config.interior();
  const Eigen::MatrixXcd lp = u.plus().left_cols(2 * k);
  const Eigen::MatrixXcd lm = u.minus().left_cols(2 * k);
  const Eigen::MatrixXcd gp = lp.adjoint() * lp;
  const Eigen::MatrixXcd gm = lm.adjoint() * lm;
  const Eigen::MatrixXcd c = compress_product(gp, gm, k);
  return max_abs(c - Eigen::MatrixXcd::Identity(c.rows(), c.cols()));
}

double interior_unitarity(const FockOperator &u,
                          const TruncationConfig &config) {
  const int k = config.interior();
  const FockOperator g{u.cutoff, u.matrix.adjoint() * u.matrix};
  const Eigen::MatrixXcd c = interior_block(g, k);
  return max_abs(c - Eigen::MatrixXcd::Identity(c.rows(), c.cols()));
}

double phase_aligned_deviation(const Eigen::MatrixXcd &x,
                               const Eigen::MatrixXcd &y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::InvalidArgument, "operator shapes differ");
  }
  Eigen::Index i = 0, j = 0;
  x.cwiseAbs().maxCoeff(&i, &j);
  auto phase = [](Complex z) {
    return std::abs(z) > 0.0 ? z / std::abs(z) : Complex(1.0);
  };
  return max_abs(x / phase(x(i, j)) - y / phase(y(i, j)));
}

double form_equivalence_residual(const AbcdParams &params,
                                 const TruncationConfig &config) {
  const WorkCutoffPolicy policy = operator_policy(config);
  const int k = config.interior();
  const GaussianUnitary g4 =
      realize_sequence(decompose_reduced(params, Form::Optical), config, policy);
  const GaussianUnitary g3 =
      realize_sequence(decompose_reduced(params, Form::Su11), config, policy);
  return phase_aligned_deviation(g4.compress(k).matrix, g3.compress(k).matrix);
}

double gtso_form_residual(const AbcdParams &params,
                          const TruncationConfig &config) {
  const int k = config.interior();
  const GaussianUnitary a = realize_gtso(params, Form::Optical, config);
  const GaussianUnitary b = realize_gtso(params, Form::Su11, config);
  return phase_aligned_deviation(a.compress(k).matrix, b.compress(k).matrix);
}

FockState vacuum_image(const GaussianUnitary &u) {
  const int w = u.work_cutoff();
  const Eigen::VectorXcd fp = u.plus().left_cols(0).col(0);
  const Eigen::VectorXcd fm = u.minus().left_cols(0).col(0);
  const Eigen::MatrixXcd c = fp * fm.transpose();
  return from_collective(c, w);
}

namespace {

// R psi for one of the four quadratures, on the same cutoff.
FockState apply_quadrature(const FockState &psi, int which) {
  const int n = psi.cutoff;
  const bool mode1 = which == kQ1 || which == kP1;
  const bool momentum = which == kP1 || which == kP2;
  FockState out = FockState::zero(n);
  for (int n1 = 0; n1 <= n; ++n1) {
    for (int n2 = 0; n2 <= n; ++n2) {
      const int m = mode1 ? n1 : n2;
      auto at = [&](int mm) {
        return mode1 ? psi(mm, n2) : psi(n1, mm);
      };
      // (a psi)(m) = sqrt(m+1) psi(m+1), (a^dagger psi)(m) = sqrt(m) psi(m-1)
      const Complex lower = m < n ? std::sqrt(m + 1.0) * at(m + 1) : 0.0;
      const Complex raise = m > 0 ? std::sqrt(double(m)) * at(m - 1) : 0.0;
      out(n1, n2) = momentum ? Complex(0.0, kInvSqrt2) * (raise - lower)
                             : kInvSqrt2 * (lower + raise);
    }
  }
  return out;
}

}  // namespace

Mat4 covariance(const FockState &psi) {
  // Pad by one level so R acts without truncation on the support.
  const FockState padded = restrict_state(psi, psi.cutoff + 1);
  const double norm2 = padded.amplitudes.squaredNorm();
  if (!(norm2 > 0.0)) throw Error(ErrorCode::ZeroState, "zero state");
  std::array<Eigen::VectorXcd, 4> r;
  Eigen::Vector4d mean;
  for (int i = 0; i < 4; ++i) {
    r[i] = apply_quadrature(padded, i).amplitudes;
    mean(i) = padded.amplitudes.dot(r[i]).real() / norm2;
  }
  Mat4 sigma;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      sigma(i, j) = r[i].dot(r[j]).real() / norm2 - mean(i) * mean(j);
    }
  }
  return sigma;
}

Mat4 vacuum_covariance(const GaussianUnitary &u) {
  return covariance(vacuum_image(u));
}

Mat4 predicted_vacuum_covariance(const Mat4 &s) {
  const Mat4 si = s.inverse();
  return 0.5 * si * si.transpose();
}

double covariance_residual(const Mat4 &sigma, const Mat4 &s) {
  return max_abs(sigma - predicted_vacuum_covariance(s));
}

FockState apply_to_state(const GaussianUnitary &u, const FockState &psi,
                         int level) {
  const int w = u.work_cutoff();
  const int r = 2 * level;
  if (r > w) {
    throw Error(ErrorCode::InvalidArgument,
                "working cutoff too small for the requested level");
  }
  const int l = std::min(w, 2 * psi.cutoff);
  const Eigen::MatrixXcd c = to_collective(psi, l);
  const Eigen::MatrixXcd fp = u.plus().top_rows(r).leftCols(l + 1);
  const Eigen::MatrixXcd fm = u.minus().top_rows(r).leftCols(l + 1);
  const Eigen::MatrixXcd out = fp * c * fm.transpose();
  return restrict_state(from_collective(out, r), level);
}

}  // namespace gtso
