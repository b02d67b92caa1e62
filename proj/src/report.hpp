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

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epr.hpp"

namespace gtso {

// Documented thresholds.
namespace threshold {
constexpr double kSymplecticForm = 1e-12;
constexpr double kCompose = 1e-10;
constexpr double kLogIdentity = 1e-12;
constexpr double kCanonical = 1e-12;
constexpr double kHeisenberg = 1e-6;
constexpr double kSu11 = 1e-10;
constexpr double kFormEquivalence = 1e-7;
constexpr double kCovariance = 1e-6;
constexpr double kSchmidt = 1e-8;
constexpr double kEigen = 1e-2;
constexpr double kDbCommutator = 1e-10;
constexpr double kOverlap = 2e-3;
constexpr double kDeficit = 1e-4;
constexpr double kPhase = 1e-3;
constexpr double kRatio = 1e-3;
}  // namespace threshold

// Residuals below this are treated as equal in the convergence rule.
constexpr double kMonotonicityFloor = 1e-12;

// A residual whose size is set by the Fock truncation.
bool is_truncation_limited(std::string_view name);

struct ReportEntry {
  std::string name;
  double value = 0.0;
  // NaN marks an informational entry that does not gate the verdict.
  double threshold = std::nan("");

  bool gated() const { return !std::isnan(threshold); }
  bool passed() const { return !gated() || value <= threshold; }
};

struct Report {
  std::vector<ReportEntry> entries;
  std::vector<std::string> warnings;

  void add(std::string name, double value, double threshold);
  void note(std::string name, double value);
  bool passed() const;
};

enum class FormSelection { Optical, Su11, Both };

struct VerifyOptions {
  AbcdParams params;
  FormSelection forms = FormSelection::Both;
  TruncationConfig config;
  std::optional<Complex> eta;
  std::optional<Complex> xi;
  std::optional<double> lambda;
  std::uint64_t seed = 1;
  // Seeded parameter draws for the exact-layer suite.
  int random_draws = 100;
};

Report verify(const VerifyOptions &options);

// Truncation for a sweep point: margin scaled with n_max at the margin
// fraction of `base`, never below 2.
TruncationConfig sweep_config(const TruncationConfig &base, int n_max);

// Sweep rows in n_max order; rejects lists that are not strictly ascending or
// have fewer than two entries.
std::vector<Report> sweep(const VerifyOptions &base,
                          const std::vector<int> &nmax_list);

// Truncation-limited entries that grow by more than a factor 2 between
// consecutive rows: r_next <= 2 max(r_prev, floor).
std::vector<std::string> monotonicity_violations(
    const std::vector<Report> &rows);

}  // namespace gtso
