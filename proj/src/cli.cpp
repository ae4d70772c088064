// Copyright 2026 The qinv authors
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

#include "qinv/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qinv/channel_spec.hpp"
#include "qinv/sweep.hpp"

namespace qinv::cli {
namespace {

using spec::ParsedChannel;
using spec::json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open spec file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw schema_error("spec file '" + path + "': " + e.what());
  }
  return doc;
}

void print_matrix(std::ostream& os, const char* name, const Mat3<double>& m) {
  os << name << ":\n";
  for (int r = 0; r < 3; ++r)
    os << "  [" << num(m(r, 0)) << ", " << num(m(r, 1)) << ", " << num(m(r, 2))
       << "]\n";
}

void print_vector(std::ostream& os, const char* name, const Vec3<double>& v) {
  os << name << ": [" << num(v[0]) << ", " << num(v[1]) << ", " << num(v[2])
     << "]\n";
}

int cmd_report(const std::string& spec_path, const std::string& json_path,
               std::ostream& out) {
  const ParsedChannel parsed = spec::parse_channel_spec(load_json(spec_path));
  const auto& ch = parsed.channel;
  const auto res = quasi_inverse(ch);
  const QForm<double> qf = q_form(ch);

  out << "channel kind: " << parsed.kind << " (" << ch.kraus.size()
      << " Kraus operators)\n";
  print_matrix(out, "affine M", ch.affine.M);
  print_vector(out, "translation t", ch.affine.t);
  print_matrix(out, "B matrix", b_matrix(ch));
  print_vector(out, "v vector", qf.v);
  out << "Q form:\n";
  for (int r = 0; r < 4; ++r) {
    out << "  [";
    for (int c = 0; c < 4; ++c)
      out << num(qf.Q(r, c)) << (c == 3 ? "" : ", ");
    out << "]\n";
  }
  out << "average fidelity:   " << num(res.f_before) << "\n";
  out << "lambda_max:         " << num(res.lambda_max) << "\n";
  out << "delta fidelity:     " << num(res.delta_f) << "\n";
  out << "corrected fidelity: " << num(res.f_after) << "\n";
  out << "optimal unitary:    x0 = " << num(res.v_opt.x0) << ", x = ["
      << num(res.v_opt.x[0]) << ", " << num(res.v_opt.x[1]) << ", "
      << num(res.v_opt.x[2]) << "]\n";
  out << "  axis-angle: angle " << num(res.v_opt.angle()) << " about ["
      << num(res.v_opt.axis()[0]) << ", " << num(res.v_opt.axis()[1]) << ", "
      << num(res.v_opt.axis()[2]) << "]\n";
  out << "degenerate: " << (res.degenerate ? "yes" : "no")
      << " (relative gap " << num(res.gap) << ")\n";

  if (!json_path.empty()) {
    const json j = spec::report_json(parsed, res);
    if (json_path == "-") {
      out << j.dump(2) << "\n";
    } else {
      std::ofstream jf(json_path);
      if (!jf) throw schema_error("cannot open output file '" + json_path + "'");
      jf << j.dump(2) << "\n";
    }
  }
  return 0;
}

int cmd_validate(const std::string& spec_path, std::ostream& out) {
  const json doc = load_json(spec_path);
  ParsedChannel parsed;
  try {
    parsed = spec::parse_channel_spec(doc);
  } catch (const validation_error& e) {
    out << "INVALID: " << e.what() << "\n";
    throw;
  }
  const auto& ch = parsed.channel;
  const auto tp = trace_preservation_residual(ch.kraus);
  const auto cp = is_completely_positive(ch);
  out << "channel kind: " << parsed.kind << "\n";
  out << "trace preservation residual: " << num(tp.max()) << " (scalar "
      << num(tp.scalar) << ", vector " << num(tp.vector) << ")\n";
  out << "Choi eigenvalues: [" << num(cp.eigenvalues[0]) << ", "
      << num(cp.eigenvalues[1]) << ", " << num(cp.eigenvalues[2]) << ", "
      << num(cp.eigenvalues[3]) << "]\n";
  out << "completely positive: " << (cp.completely_positive ? "yes" : "no")
      << "\n";
  print_matrix(out, "affine M", ch.affine.M);
  print_vector(out, "translation t", ch.affine.t);
  out << "VALID\n";
  return 0;
}

int cmd_sweep(const sweep::SweepRequest& req, const std::string& out_path,
              std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    sweep::run_sweep(req, out);
  } else {
    std::ofstream f(out_path);
    if (!f) throw schema_error("cannot open output file '" + out_path + "'");
    sweep::run_sweep(req, f);
  }
  return 0;
}

int cmd_verify(const std::string& spec_path, std::uint64_t seed,
               std::int64_t n_mc, std::int64_t n_bf, std::ostream& out) {
  const ParsedChannel parsed = spec::parse_channel_spec(load_json(spec_path));
  const auto& ch = parsed.channel;
  int failures = 0;
  const auto check = [&](bool ok, const std::string& label,
                         const std::string& detail) {
    out << (ok ? "[PASS] " : "[FAIL] ") << label << ": " << detail << "\n";
    if (!ok) ++failures;
  };

  // Closed-form fidelity routes.
  const double aa = kraus_sum_aa(ch);
  const double bb = kraus_sum_bb(ch);
  const double routes[4] = {aa + bb / 3.0, 1.0 - 2.0 / 3.0 * bb,
                            (1.0 + 2.0 * aa) / 3.0,
                            0.5 * (1.0 + ch.affine.M.trace() / 3.0)};
  double spread = 0;
  for (double r : routes)
    for (double s : routes) spread = std::max(spread, r - s);
  check(spread <= 1e-10, "fidelity closed forms",
        "spread " + num(spread) + " <= 1e-10");

  // Trace identity Tr M = 3 - 4 Tr B.
  const double tr_res =
      std::abs(ch.affine.M.trace() - (3.0 - 4.0 * b_matrix(ch).trace()));
  check(tr_res <= 1e-12, "Tr M = 3 - 4 Tr B", "residual " + num(tr_res) + " <= 1e-12");

  // Affine map: trace formulas vs closed form.
  const double aff_diff = affine_distance(affine_of(ch), ch.affine);
  check(aff_diff <= 1e-12, "affine trace-formula route",
        "max deviation " + num(aff_diff) + " <= 1e-12");

  // Q form: Kraus vs affine assembly (q_form throws if the routes differ).
  bool q_ok = true;
  std::string q_detail = "Kraus and affine assemblies agree to 1e-12";
  try {
    q_form(ch);
  } catch (const consistency_error& e) {
    q_ok = false;
    q_detail = e.what();
  }
  check(q_ok, "Q-form routes", q_detail);

  // Monte Carlo vs closed form. The 1e-12 floor covers channels whose
  // integrand is exact up to float rounding (stderr ~ 1e-19).
  const double f_closed = avg_fidelity(ch);
  const auto mc = mc_avg_fidelity(ch, n_mc, seed);
  const double mc_err = std::abs(mc.mean - f_closed);
  const double mc_window = 4.0 * mc.std_error + 1e-12;
  check(mc_err <= mc_window,
        "Monte Carlo fidelity",
        "|" + num(mc.mean) + " - " + num(f_closed) + "| = " + num(mc_err) +
            " <= " + num(mc_window) + " (4 sigma, n=" + std::to_string(mc.samples) + ")");

  // Brute-force search vs eigensolver.
  const auto res = quasi_inverse(ch);
  const auto bf = brute_force_best_unitary(ch, n_bf, 100, seed);
  const double bf_diff = std::abs(bf.delta_f - res.delta_f);
  check(bf_diff <= 1e-5 && bf.delta_f <= res.delta_f + 1e-9,
        "brute-force optimum",
        "|" + num(bf.delta_f) + " - " + num(res.delta_f) + "| = " + num(bf_diff) +
            " <= 1e-5 and never above the eigensolver");

  // Re-derive the corrected fidelity by composing the channels.
  const auto corrected = compose(make_unitary_channel(res.v_opt), ch);
  const double f_comp = avg_fidelity(corrected);
  const double comp_diff = std::abs(f_comp - res.f_after);
  check(comp_diff <= 1e-10, "composed-channel fidelity",
        "|" + num(f_comp) + " - " + num(res.f_after) + "| = " + num(comp_diff) +
            " <= 1e-10");

  if (res.degenerate)
    out << "note: top eigenvalue is degenerate (gap " << num(res.gap)
        << "); the optimizer is one representative of a convex family\n";

  out << (failures == 0 ? "verification: PASS\n" : "verification: FAIL\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qubit channel fidelity and optimal unitary correction", "qinv"};
  app.require_subcommand(1);

  std::string spec_path, json_path, out_path, family;
  std::vector<std::string> grid_tokens;
  std::uint64_t seed = 12345;
  std::int64_t n_mc = 100000, n_bf = 100000;

  auto* report = app.add_subcommand("report", "fidelity and quasi-inverse of a channel");
  report->add_option("spec", spec_path, "channel spec JSON file")->required();
  report->add_option("--json", json_path, "also write a JSON report ('-' for stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep to CSV");
  sweep_cmd->add_option("--family", family, "mixed_rotation or tetrahedron")->required();
  sweep_cmd->add_option("--grid", grid_tokens, "axis spec name=lo:hi:steps (repeatable)");
  sweep_cmd->add_option("--out", out_path, "output CSV file (default stdout)");

  auto* verify = app.add_subcommand("verify", "cross-check closed forms against oracles");
  verify->add_option("spec", spec_path, "channel spec JSON file")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--mc", n_mc, "Monte Carlo samples");
  verify->add_option("--bf", n_bf, "brute-force samples");

  auto* validate = app.add_subcommand("validate", "parse and physically validate a spec");
  validate->add_option("spec", spec_path, "channel spec JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (report->parsed()) return cmd_report(spec_path, json_path, out);
    if (validate->parsed()) return cmd_validate(spec_path, out);
    if (verify->parsed()) return cmd_verify(spec_path, seed, n_mc, n_bf, out);
    if (sweep_cmd->parsed()) {
      sweep::SweepRequest req;
      req.family = family;
      for (const auto& tok : grid_tokens)
        req.axes.push_back(sweep::parse_grid_axis(tok));
      return cmd_sweep(req, out_path, out);
    }
  } catch (const schema_error& e) {
    err << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qinv::cli
