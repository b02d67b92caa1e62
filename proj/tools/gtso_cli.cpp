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


// Command-line front end over the gtso C interface.
//
// Exit codes: 0 all gated residuals pass, 1 a residual exceeds its threshold,
// 2 invalid input.

#include <gtso/gtso.h>

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string abcd = "1,0,0,1";
  std::string form = "both";
  int n_max = 16;
  int margin = 6;
  double tol = 1e-8;
  int work_cutoff = 0;
  std::string eta;
  std::string xi;
  std::string label;
  std::optional<double> lambda;
  std::string output;
  std::uint64_t seed = 1;
  int random_draws = 100;
  double amplitude_floor = 1e-12;
  std::string out;
  std::string nmax_list = "10,14,18,22";
  std::string which;
};

// Locale-independent decimal parsing of a comma-separated list.
std::vector<double> parse_reals(const std::string &text, const char *what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const char *first = text.data() + pos;
    const char *last = text.data() + end;
    if (first != last && *first == '+') ++first;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
      throw InputError(std::string("malformed ") + what + ": '" + text + "'");
    }
    values.push_back(v);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return values;
}

std::vector<int> parse_ints(const std::string &text, const char *what) {
  std::vector<int> values;
  for (double v : parse_reals(text, what)) {
    if (v != std::floor(v) || std::abs(v) > 1e6) {
      throw InputError(std::string("malformed ") + what + ": '" + text + "'");
    }
    values.push_back(static_cast<int>(v));
  }
  return values;
}

struct Label {
  double re = 0.0;
  double im = 0.0;
};

std::optional<Label> parse_label(const std::string &text, const char *what) {
  if (text.empty()) return std::nullopt;
  const std::vector<double> v = parse_reals(text, what);
  if (v.size() != 2 || !std::isfinite(v[0]) || !std::isfinite(v[1])) {
    throw InputError(std::string(what) + " must be re,im with finite parts");
  }
  return Label{v[0], v[1]};
}

void check(gtso_status s) {
  if (s != GTSO_OK) {
    throw InputError(std::string(gtso_status_string(s)) + ": " +
                     gtso_last_error());
  }
}

gtso_abcd parse_abcd(const std::string &text) {
  const std::vector<double> v = parse_reals(text, "--abcd");
  if (v.size() != 4) throw InputError("--abcd expects four values a,b,c,d");
  gtso_abcd p{};
  check(gtso_abcd_validate(v[0], v[1], v[2], v[3], &p));
  return p;
}

gtso_truncation truncation_of(const Options &o) {
  gtso_truncation t{o.n_max, o.margin, o.tol, o.work_cutoff};
  check(gtso_truncation_validate(&t));
  return t;
}

gtso_form_selection forms_of(const std::string &token) {
  if (token == "eq22") return GTSO_FORMS_OPTICAL;
  if (token == "eq25") return GTSO_FORMS_SU11;
  if (token == "both") return GTSO_FORMS_BOTH;
  throw InputError("--form must be eq22, eq25 or both");
}

std::vector<std::pair<gtso_form, const char *>> form_list(
    gtso_form_selection s) {
  std::vector<std::pair<gtso_form, const char *>> out;
  if (s != GTSO_FORMS_SU11) out.emplace_back(GTSO_FORM_OPTICAL, "eq22");
  if (s != GTSO_FORMS_OPTICAL) out.emplace_back(GTSO_FORM_SU11, "eq25");
  return out;
}

gtso_verify_options verify_options_of(const Options &o) {
  gtso_verify_options v = gtso_verify_options_default();
  if (auto eta = parse_label(o.eta, "--eta")) {
    v.has_eta = 1;
    v.eta_re = eta->re;
    v.eta_im = eta->im;
  }
  if (auto xi = parse_label(o.xi, "--xi")) {
    v.has_xi = 1;
    v.xi_re = xi->re;
    v.xi_im = xi->im;
  }
  if (o.lambda) {
    if (!std::isfinite(*o.lambda)) throw InputError("--lambda must be finite");
    v.has_lambda = 1;
    v.lambda = *o.lambda;
  }
  if (o.random_draws < 0) throw InputError("--draws must be >= 0");
  v.seed = o.seed;
  v.random_draws = o.random_draws;
  return v;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", x);
  return buf;
}

Json matrix_json(const double m[16]) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    rows.push_back(Json::array({m[4 * i], m[4 * i + 1], m[4 * i + 2],
                                m[4 * i + 3]}));
  }
  return rows;
}

Json params_json(const gtso_abcd &p) {
  return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}

Json truncation_json(const gtso_truncation &t) {
  return Json{{"n_max", t.n_max},
              {"margin", t.margin},
              {"tol", t.tol},
              {"work_cutoff", t.work_cutoff}};
}

Json threshold_json(double t) { return std::isnan(t) ? Json() : Json(t); }

struct Entry {
  std::string name;
  double value;
  double threshold;
};

std::vector<Entry> entries_of(const gtso_report *r) {
  std::vector<Entry> out;
  for (size_t i = 0; i < gtso_report_size(r); ++i) {
    const char *name = nullptr;
    Entry e{};
    check(gtso_report_entry(r, i, &name, &e.value, &e.threshold));
    e.name = name;
    out.push_back(e);
  }
  return out;
}

void print_warnings(const gtso_report *r) {
  for (size_t i = 0; i < gtso_report_warning_count(r); ++i) {
    std::cerr << "warning: " << gtso_report_warning(r, i) << "\n";
  }
}

std::string csv_row(const std::vector<std::string> &cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + "\n";
}

void emit(const Options &o, const std::string &text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("cannot open --out path '" + o.out + "'");
  f << text;
}

std::string output_format(const Options &o, const char *fallback) {
  const std::string fmt = o.output.empty() ? fallback : o.output;
  if (fmt != "json" && fmt != "csv") {
    throw InputError("--output must be json or csv");
  }
  return fmt;
}

int cmd_decompose(const Options &o) {
  const gtso_abcd p = parse_abcd(o.abcd);
  const gtso_form_selection sel = forms_of(o.form);
  const std::string fmt = output_format(o, "json");
  double target[16];
  check(gtso_target_symplectic(&p, target));
  constexpr double kComposeThreshold = 1e-10;
  Json forms = Json::array();
  Json residuals = Json::object();
  Json thresholds = Json::object();
  std::string csv = csv_row({"form", "index", "kind", "value", "residual"});
  bool pass = true;
  for (const auto &[form, token] : form_list(sel)) {
    gtso_sequence *seq = nullptr;
    check(gtso_decompose(&p, form, &seq));
    Json factors = Json::array();
    for (size_t i = 0; i < gtso_sequence_size(seq); ++i) {
      const char *kind = nullptr;
      double value = 0.0, s[16];
      check(gtso_sequence_factor(seq, i, &kind, &value));
      check(gtso_sequence_factor_symplectic(seq, i, s));
      factors.push_back(
          Json{{"kind", kind}, {"value", value}, {"symplectic", matrix_json(s)}});
      csv += csv_row({token, std::to_string(i), kind, format_real(value), ""});
    }
    double composed[16];
    check(gtso_sequence_compose(seq, composed));
    gtso_sequence_free(seq);
    double dev = 0.0;
    for (int i = 0; i < 16; ++i) {
      dev = std::max(dev, std::abs(composed[i] - target[i]));
    }
    pass = pass && dev <= kComposeThreshold;
    const std::string name = std::string("compose.") + token;
    residuals[name] = dev;
    thresholds[name] = kComposeThreshold;
    forms.push_back(Json{{"form", token},
                         {"factors", factors},
                         {"composed", matrix_json(composed)},
                         {"max_deviation", dev}});
    csv += csv_row({token, "", "composed", "", format_real(dev)});
  }
  if (fmt == "json") {
    const Json out{{"params", params_json(p)},
                   {"form", o.form},
                   {"target", matrix_json(target)},
                   {"sequences", forms},
                   {"residuals", residuals},
                   {"thresholds", thresholds},
                   {"pass", pass}};
    emit(o, out.dump(2) + "\n");
  } else {
    emit(o, csv);
  }
  return pass ? kExitPass : kExitFail;
}

Json report_residuals(const std::vector<Entry> &entries, Json *thresholds) {
  Json residuals = Json::object();
  for (const Entry &e : entries) {
    residuals[e.name] = e.value;
    if (thresholds) (*thresholds)[e.name] = threshold_json(e.threshold);
  }
  return residuals;
}

int cmd_verify(const Options &o) {
  const gtso_abcd p = parse_abcd(o.abcd);
  const gtso_form_selection sel = forms_of(o.form);
  const gtso_truncation t = truncation_of(o);
  const gtso_verify_options v = verify_options_of(o);
  const std::string fmt = output_format(o, "json");
  gtso_report *r = nullptr;
  check(gtso_verify(&p, sel, &t, &v, &r));
  print_warnings(r);
  const std::vector<Entry> entries = entries_of(r);
  const bool pass = gtso_report_passed(r) != 0;
  gtso_report_free(r);
  if (fmt == "json") {
    Json thresholds = Json::object();
    Json residuals = report_residuals(entries, &thresholds);
    const Json out{{"params", params_json(p)},
                   {"form", o.form},
                   {"truncation", truncation_json(t)},
                   {"residuals", residuals},
                   {"thresholds", thresholds},
                   {"pass", pass}};
    emit(o, out.dump(2) + "\n");
  } else {
    std::vector<std::string> head, row;
    for (const Entry &e : entries) {
      head.push_back(e.name);
      row.push_back(format_real(e.value));
    }
    head.push_back("pass");
    row.push_back(pass ? "1" : "0");
    emit(o, csv_row(head) + csv_row(row));
  }
  return pass ? kExitPass : kExitFail;
}

int cmd_state(const Options &o) {
  const gtso_truncation t = truncation_of(o);
  const std::string fmt = output_format(o, "json");
  if (!(o.amplitude_floor >= 0.0)) {
    throw InputError("--amplitude-floor must be >= 0");
  }
  const bool vacuum = o.which == "gtso_vacuum";
  std::optional<Label> label = parse_label(o.label, "--label");
  if (!label && !vacuum) {
    label = parse_label(o.which == "xi" ? o.xi : o.eta,
                        o.which == "xi" ? "--xi" : "--eta");
  }
  if (!vacuum && !label) {
    throw InputError("state " + o.which + " requires --label re,im");
  }
  if (label && !gtso_label_within_envelope(label->re, label->im)) {
    std::cerr << "warning: label modulus "
              << std::hypot(label->re, label->im)
              << " exceeds the accuracy envelope\n";
  }
  const gtso_abcd p = parse_abcd(o.abcd);
  const gtso_form form =
      forms_of(o.form) == GTSO_FORMS_SU11 ? GTSO_FORM_SU11 : GTSO_FORM_OPTICAL;
  gtso_state *s = nullptr;
  if (vacuum) {
    check(gtso_state_vacuum_image(&p, form, &t, &s));
  } else if (o.which == "eta") {
    check(gtso_state_eta(label->re, label->im, &t, &s));
  } else if (o.which == "xi") {
    check(gtso_state_xi(label->re, label->im, &t, &s));
  } else {
    check(gtso_state_eta_db(label->re, label->im, &p, &t, &s));
  }
  Json amplitudes = Json::array();
  std::string csv = csv_row({"kind", "i", "j", "re", "im"});
  const int n = gtso_state_cutoff(s);
  for (int n1 = 0; n1 <= n; ++n1) {
    for (int n2 = 0; n2 <= n; ++n2) {
      double re = 0.0, im = 0.0;
      check(gtso_state_amplitude(s, n1, n2, &re, &im));
      if (std::hypot(re, im) <= o.amplitude_floor) continue;
      amplitudes.push_back(Json{{"n1", n1}, {"n2", n2}, {"re", re}, {"im", im}});
      csv += csv_row({"amp", std::to_string(n1), std::to_string(n2),
                      format_real(re), format_real(im)});
    }
  }
  Json out{{"params", params_json(p)},
           {"state", o.which},
           {"truncation", truncation_json(t)}};
  if (label) out["label"] = Json{{"re", label->re}, {"im", label->im}};
  out["amplitudes"] = amplitudes;
  bool pass = true;
  if (vacuum) {
    double cov[16], residual = 0.0;
    check(gtso_state_covariance(s, cov));
    check(gtso_covariance_residual(&p, form, &t, &residual));
    constexpr double kCovarianceThreshold = 1e-6;
    pass = residual <= kCovarianceThreshold;
    out["form"] = form == GTSO_FORM_OPTICAL ? "eq22" : "eq25";
    out["covariance"] = matrix_json(cov);
    out["residuals"] = Json{{"covariance", residual}};
    out["thresholds"] = Json{{"covariance", kCovarianceThreshold}};
    out["pass"] = pass;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        csv += csv_row({"cov", std::to_string(i), std::to_string(j),
                        format_real(cov[4 * i + j]), format_real(0.0)});
      }
    }
  }
  gtso_state_free(s);
  emit(o, fmt == "json" ? out.dump(2) + "\n" : csv);
  return pass ? kExitPass : kExitFail;
}

int cmd_sweep(const Options &o) {
  const gtso_abcd p = parse_abcd(o.abcd);
  const gtso_form_selection sel = forms_of(o.form);
  const gtso_truncation base = truncation_of(o);
  const gtso_verify_options v = verify_options_of(o);
  const std::string fmt = output_format(o, "csv");
  const std::vector<int> list = parse_ints(o.nmax_list, "--nmax-list");
  gtso_sweep *s = nullptr;
  check(gtso_sweep_run(&p, sel, &base, &v, list.data(), list.size(), &s));
  bool pass = gtso_sweep_violation_count(s) == 0;
  for (size_t i = 0; i < gtso_sweep_violation_count(s); ++i) {
    std::cerr << "non-monotone: " << gtso_sweep_violation(s, i) << "\n";
  }
  std::string csv;
  Json rows = Json::array();
  Json thresholds = Json::object();
  for (size_t i = 0; i < gtso_sweep_rows(s); ++i) {
    const gtso_report *r = gtso_sweep_row(s, i);
    if (i == 0) print_warnings(r);
    gtso_truncation t{};
    check(gtso_sweep_truncation(&base, list[i], &t));
    const std::vector<Entry> entries = entries_of(r);
    const bool row_pass = gtso_report_passed(r) != 0;
    pass = pass && row_pass;
    if (i == 0) {
      std::vector<std::string> head = {"n_max", "margin"};
      for (const Entry &e : entries) head.push_back(e.name);
      head.push_back("pass");
      csv += csv_row(head);
    }
    std::vector<std::string> cells = {std::to_string(t.n_max),
                                      std::to_string(t.margin)};
    for (const Entry &e : entries) cells.push_back(format_real(e.value));
    cells.push_back(row_pass ? "1" : "0");
    csv += csv_row(cells);
    rows.push_back(Json{{"truncation", truncation_json(t)},
                        {"residuals", report_residuals(
                                          entries, i == 0 ? &thresholds : nullptr)},
                        {"pass", row_pass}});
  }
  const bool monotone = gtso_sweep_violation_count(s) == 0;
  gtso_sweep_free(s);
  if (fmt == "json") {
    const Json out{{"params", params_json(p)},
                   {"form", o.form},
                   {"truncation", truncation_json(base)},
                   {"rows", rows},
                   {"thresholds", thresholds},
                   {"monotone", monotone},
                   {"pass", pass}};
    emit(o, out.dump(2) + "\n");
  } else {
    emit(o, csv);
  }
  return pass ? kExitPass : kExitFail;
}

void add_common(CLI::App *cmd, Options &o) {
  cmd->add_option("--abcd", o.abcd, "Parameters a,b,c,d with ad - bc = 1");
  cmd->add_option("--form", o.form, "eq22, eq25 or both");
  cmd->add_option("--output", o.output, "json or csv");
  cmd->add_option("--out", o.out, "Write output to this path");
}

void add_truncation(CLI::App *cmd, Options &o) {
  cmd->add_option("--nmax", o.n_max, "Highest retained level per mode");
  cmd->add_option("--margin", o.margin, "Interior buffer below n_max");
  cmd->add_option("--tol", o.tol, "Interior unitarity tolerance");
  cmd->add_option("--work-cutoff", o.work_cutoff,
                  "Working cutoff per collective mode (0 = automatic)");
}

void add_labels(CLI::App *cmd, Options &o) {
  cmd->add_option("--eta", o.eta, "Entangled-state label re,im");
  cmd->add_option("--xi", o.xi, "Conjugate-state label re,im");
}

void add_suite(CLI::App *cmd, Options &o) {
  add_labels(cmd, o);
  cmd->add_option("--lambda", o.lambda, "Two-mode squeezing parameter");
  cmd->add_option("--seed", o.seed, "Seed of the random parameter suite");
  cmd->add_option("--draws", o.random_draws,
                  "Random parameter draws for the exact-layer suite");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generalized two-mode squeezing operator verification tool"};
  app.require_subcommand(1);
  Options o;

  CLI::App *decompose = app.add_subcommand(
      "decompose", "Emit the factor sequences and their symplectic matrices");
  add_common(decompose, o);

  CLI::App *verify =
      app.add_subcommand("verify", "Run the verification suite");
  add_common(verify, o);
  add_truncation(verify, o);
  add_suite(verify, o);

  CLI::App *state = app.add_subcommand("state", "Export a truncated state");
  state->add_option("which", o.which, "gtso_vacuum, eta, xi or eta_db")
      ->required()
      ->check(CLI::IsMember({"gtso_vacuum", "eta", "xi", "eta_db"}));
  state->add_option("--label", o.label, "State label re,im");
  state->add_option("--amplitude-floor", o.amplitude_floor,
                    "Omit amplitudes with modulus at or below this");
  add_common(state, o);
  add_truncation(state, o);
  add_labels(state, o);

  CLI::App *sweep =
      app.add_subcommand("sweep", "Residuals against truncation size");
  sweep->add_option("--nmax-list", o.nmax_list,
                    "Ascending n_max values, comma separated");
  add_common(sweep, o);
  add_truncation(sweep, o);
  add_suite(sweep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*decompose) return cmd_decompose(o);
    if (*verify) return cmd_verify(o);
    if (*state) return cmd_state(o);
    return cmd_sweep(o);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
