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


// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Criterion 11 drives the command-line tool and parses its CSV.

#include <gtso/gtso.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#ifndef GTSO_CLI_PATH
#error "GTSO_CLI_PATH must name the command-line tool"
#endif

namespace {

constexpr std::uint64_t kSeed = 20261018;
constexpr double kLogRange = 0.5;

int g_failures = 0;

void report(int id, const char *title, bool pass, const std::string &detail) {
  std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, title,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

// Converts a failed call into a failing criterion with the library message.
struct CallFailed {
  std::string what;
};

void check(gtso_status s) {
  if (s != GTSO_OK) {
    throw CallFailed{std::string(gtso_status_string(s)) + ": " +
                     gtso_last_error()};
  }
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::vector<gtso_abcd> draws(std::size_t count) {
  std::vector<gtso_abcd> out(count);
  check(gtso_random_abcd(kSeed, kLogRange, count, out.data()));
  return out;
}

template <class F>
void criterion(int id, const char *title, F &&body) {
  try {
    std::string detail;
    const bool pass = body(detail);
    report(id, title, pass, detail);
  } catch (const CallFailed &e) {
    report(id, title, false, e.what);
  }
}

gtso_truncation truncation(int n_max, int margin) {
  return {n_max, margin, 1e-8, 0};
}

std::vector<std::string> split(const std::string &line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

}  // namespace

int main() {
  criterion(1, "symplectic factorization", [](std::string &d) {
    double compose_max = 0.0, form_max = 0.0;
    for (const gtso_abcd &p : draws(100)) {
      double target[16], r = 0.0;
      check(gtso_target_symplectic(&p, target));
      check(gtso_symplectic_residual(target, &r));
      form_max = std::max(form_max, r);
      for (gtso_form form : {GTSO_FORM_OPTICAL, GTSO_FORM_SU11}) {
        gtso_sequence *seq = nullptr;
        check(gtso_decompose(&p, form, &seq));
        double composed[16];
        const gtso_status s = gtso_sequence_compose(seq, composed);
        gtso_sequence_free(seq);
        check(s);
        for (int i = 0; i < 16; ++i) {
          compose_max = std::max(compose_max, std::abs(composed[i] - target[i]));
        }
        check(gtso_symplectic_residual(composed, &r));
        form_max = std::max(form_max, r);
      }
    }
    d = "100 draws, both forms: compose " + sci(compose_max) +
        " (<= 1e-10), SJS^T - J " + sci(form_max) + " (<= 1e-12)";
    return compose_max <= 1e-10 && form_max <= 1e-12;
  });

  criterion(2, "matrix logarithm identity", [](std::string &d) {
    double worst = 0.0;
    for (const gtso_abcd &p : draws(100)) {
      double r = 0.0;
      check(gtso_log_identity_residual(&p, &r));
      worst = std::max(worst, r);
    }
    d = "100 draws: " + sci(worst) + " (<= 1e-12)";
    return worst <= 1e-12;
  });

  criterion(3, "Heisenberg transformation laws", [](std::string &d) {
    const gtso_truncation t = truncation(16, 6);
    double worst = 0.0;
    for (const gtso_abcd &p : draws(20)) {
      for (gtso_form form : {GTSO_FORM_OPTICAL, GTSO_FORM_SU11}) {
        double h[4];
        check(gtso_heisenberg_residual(&p, form, &t, h));
        worst = std::max({worst, h[0], h[1], h[2], h[3]});
      }
    }
    d = "20 draws, both forms, n_max 16 margin 6: " + sci(worst) +
        " (<= 1e-6)";
    return worst <= 1e-6;
  });

  criterion(4, "SU(1,1) commutators", [](std::string &d) {
    double worst = 0.0, printed = 0.0;
    for (int n : {8, 12, 16}) {
      const gtso_truncation t = truncation(n, 4);
      double r[5];
      check(gtso_su11_residuals(&t, r));
      worst = std::max({worst, r[0], r[1], r[2]});
      printed = std::max(printed, r[3]);
    }
    d = "n_max 8,12,16 margin 4: " + sci(worst) +
        " (<= 1e-10); printed [K+,K-] = K0 residual " + sci(printed) +
        " (informational)";
    return worst <= 1e-10;
  });

  criterion(5, "form equivalence", [](std::string &d) {
    const gtso_truncation t = truncation(16, 6);
    double reduced = 0.0, full = 0.0;
    for (const gtso_abcd &p : draws(20)) {
      double r = 0.0;
      check(gtso_form_equivalence_residual(&p, &t, &r));
      reduced = std::max(reduced, r);
      check(gtso_full_form_residual(&p, &t, &r));
      full = std::max(full, r);
    }
    d = "20 draws: reduced " + sci(reduced) + ", full " + sci(full) +
        " (<= 1e-7)";
    return reduced <= 1e-7 && full <= 1e-7;
  });

  criterion(6, "two-mode squeezer special case", [](std::string &d) {
    const gtso_truncation t = truncation(22, 8);
    double h[4], schmidt = 0.0;
    check(gtso_s2_heisenberg_residual(0.3, &t, h));
    check(gtso_schmidt_residual(0.3, &t, &schmidt));
    const double heis = std::max({h[0], h[1], h[2], h[3]});
    d = "lambda 0.3, n_max 22: scaling " + sci(heis) + " (<= 1e-6), Schmidt " +
        sci(schmidt) + " (<= 1e-8)";
    return heis <= 1e-6 && schmidt <= 1e-8;
  });

  criterion(7, "representation transform", [](std::string &d) {
    const gtso_truncation t = truncation(20, 8);
    const double mu = std::exp(0.2);
    gtso_abcd params[2];
    check(gtso_abcd_validate(2, 1, 1, 1, &params[0]));
    check(gtso_abcd_validate(mu, 0, 0, 1 / mu, &params[1]));
    const std::complex<double> labels[] = {{0, 0}, {0.5, 0}, {0, 0.3}};
    double deficit = 0.0, phase = 0.0;
    for (const gtso_abcd &p : params) {
      for (const auto &eta : labels) {
        gtso_comparison c{};
        check(gtso_f2_action_fidelity(eta.real(), eta.imag(), &p, &t, &c));
        deficit = std::max(deficit, c.deficit);
        phase = std::max(phase, c.phase);
      }
    }
    d = "6 cases, n_max 20 margin 8: deficit " + sci(deficit) +
        " (<= 1e-4), phase " + sci(phase) + " rad (<= 1e-3)";
    return deficit <= 1e-4 && phase <= 1e-3;
  });

  criterion(8, "overlap and kernel", [](std::string &d) {
    const gtso_truncation t = truncation(22, 8);
    gtso_abcd p{};
    check(gtso_abcd_validate(2, 1, 1, 1, &p));
    const std::complex<double> labels[] = {
        {0, 0}, {0.5, 0}, {0, 0.3}, {0.8, 0}, {0, -0.8}, {0.4, 0.4}, {-0.6, 0.5}};
    double overlap = 0.0, kernel = 0.0;
    for (const auto &xi : labels) {
      for (const auto &eta : labels) {
        double r = 0.0;
        check(gtso_overlap_residual(xi.real(), xi.imag(), eta.real(),
                                    eta.imag(), &t, &r));
        overlap = std::max(overlap, r);
        check(gtso_kernel_residual(xi.real(), xi.imag(), eta.real(),
                                   eta.imag(), &p, &t, &r));
        kernel = std::max(kernel, r);
      }
    }
    d = "49 label pairs, |label| <= 0.8, n_max 22: overlap " + sci(overlap) +
        ", kernel " + sci(kernel) + " (<= 2e-3)";
    return overlap <= 2e-3 && kernel <= 2e-3;
  });

  criterion(9, "dilation", [](std::string &d) {
    const gtso_truncation t = truncation(22, 8);
    double deficit = 0.0;
    for (double xi : {0.0, 0.4}) {
      gtso_comparison c{};
      check(gtso_dilation_fidelity(std::exp(0.3), xi, 0.0, &t, &c));
      deficit = std::max(deficit, c.deficit);
    }
    d = "a = e^0.3, xi in {0, 0.4}: deficit " + sci(deficit) + " (<= 1e-4)";
    return deficit <= 1e-4;
  });

  criterion(10, "vacuum covariance", [](std::string &d) {
    const gtso_truncation t = truncation(20, 8);
    double worst = 0.0;
    for (const gtso_abcd &p : draws(10)) {
      double r = 0.0;
      check(gtso_covariance_residual(&p, GTSO_FORM_OPTICAL, &t, &r));
      worst = std::max(worst, r);
    }
    d = "10 draws, n_max 20: " + sci(worst) + " (<= 1e-6)";
    return worst <= 1e-6;
  });

  criterion(11, "convergence monotonicity", [](std::string &d) {
    const std::string cmd = std::string("\"") + GTSO_CLI_PATH +
                            "\" sweep --abcd 2,1,1,1 --nmax-list 10,14,18,22 "
                            "--eta 0.5,0 --xi 0,0.3 --lambda 0.3 --draws 0 "
                            "--output csv 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw CallFailed{"cannot start the command-line tool"};
    std::vector<std::string> lines;
    char buf[1 << 16];
    std::string acc;
    while (std::fgets(buf, sizeof buf, pipe)) {
      acc += buf;
      if (!acc.empty() && acc.back() == '\n') {
        acc.pop_back();
        lines.push_back(acc);
        acc.clear();
      }
    }
    pclose(pipe);
    if (lines.size() != 5) {
      d = "expected a header and 4 rows, got " + std::to_string(lines.size()) +
          " lines";
      return false;
    }
    const std::vector<std::string> head = split(lines[0], ',');
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::vector<double> row;
      for (const std::string &cell : split(lines[i], ',')) {
        row.push_back(std::strtod(cell.c_str(), nullptr));
      }
      if (row.size() != head.size()) {
        d = "ragged CSV row " + std::to_string(i);
        return false;
      }
      rows.push_back(row);
    }
    constexpr double kFloor = 1e-12;
    int columns = 0;
    std::string worst_name;
    double worst_growth = 0.0;
    bool pass = true;
    for (std::size_t j = 0; j < head.size(); ++j) {
      if (!gtso_is_truncation_limited(head[j].c_str())) continue;
      ++columns;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        const double growth = rows[i][j] / std::max(rows[i - 1][j], kFloor);
        if (growth > worst_growth) {
          worst_growth = growth;
          worst_name = head[j];
        }
        pass = pass && growth <= 2.0;
      }
    }
    d = "n_max 10,14,18,22, " + std::to_string(columns) +
        " truncation-limited columns: largest step ratio " +
        sci(worst_growth) + " (" + worst_name + ", <= 2 above floor 1e-12)";
    return pass && columns > 0;
  });

  std::printf("%s: %d criteria failed\n", g_failures ? "FAIL" : "PASS",
              g_failures);
  return g_failures ? 1 : 0;
}
