// Copyright 2026 The dzw Authors.
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

// dzw: command-line front end for the workbench.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dzw/errors.hpp"
#include "dzw/symbolic_dynamics.hpp"
#include "dzw/torsion.hpp"
#include "dzw/workbench_io.hpp"
#include "dzw/workbench_sweep.hpp"
#include "dzw/workbench_verify.hpp"

namespace {

struct Options {
  std::string input;
  std::string out;
  std::string orbits;
  std::string kind;
  std::string suite;
  std::string along = "real";
  std::string shift_mode = "telescope";
  double s_fixed = 0.0;
  int degree = -1;
  int wedge = -1;
  dzw::WorkbenchConfig cfg;
};

void add_budget_flags(CLI::App* app, Options& o) {
  app->add_option("--max-length", o.cfg.budget.max_length, "orbit length cutoff")
      ->capture_default_str();
  app->add_option("--max-power", o.cfg.budget.max_power, "iterate cutoff per prime")
      ->capture_default_str();
  app->add_option("--max-sym", o.cfg.budget.max_sym, "symmetric-power cutoff")
      ->capture_default_str();
  app->add_option("--tol", o.cfg.budget.tail_tol, "tail tolerance for the converged flag")
      ->capture_default_str();
  app->add_option("--threads", o.cfg.threads, "worker threads (0: DZW_THREADS or all cores)");
}

void add_grid_flags(CLI::App* app, Options& o) {
  app->add_option("--s-start", o.cfg.grid.start)->capture_default_str();
  app->add_option("--s-stop", o.cfg.grid.stop)->capture_default_str();
  app->add_option("--s-count", o.cfg.grid.count)->capture_default_str();
  app->add_option("--along", o.along, "real: s = x + i*fixed; vertical: s = fixed + i*x")
      ->check(CLI::IsMember({"real", "vertical"}))
      ->capture_default_str();
  app->add_option("--s-fixed", o.s_fixed, "the fixed coordinate of the grid line");
  app->add_option("--out", o.out, "CSV output (default stdout)");
}

void finish_grid(Options& o) {
  o.cfg.grid.along = o.along == "real" ? dzw::GridAxis::kRealAxis : dzw::GridAxis::kVerticalLine;
  o.cfg.grid.fixed = o.s_fixed;
  o.cfg.shift_mode =
      o.shift_mode == "shift2l" ? dzw::ShiftMode::kShift2l : dzw::ShiftMode::kTelescoping;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dzw::Error(dzw::ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

void emit_rows(const std::string& path, const std::vector<dzw::SweepRow>& rows) {
  std::ostringstream ss;
  dzw::write_sweep_csv(ss, rows);
  emit(path, ss.str());
}

int run_gen_sft(Options& o) {
  const dzw::SftSystem sys = dzw::load_sft(o.input);
  const int words = std::max(1, static_cast<int>(o.cfg.budget.max_length / sys.min_weight()));
  emit(o.out, dzw::dump_orbit_catalog(dzw::sft_catalog(sys, words)));
  return 0;
}

int run_zeta(Options& o) {
  finish_grid(o);
  const dzw::OrbitCatalog catalog = dzw::load_orbit_catalog(o.input);
  dzw::SweepCommand command = dzw::SweepCommand::kOrbitZeta;
  if (o.kind == "ruelle") command = dzw::SweepCommand::kRuelle;
  if (o.kind == "selberg") command = dzw::SweepCommand::kSelberg;
  if (o.kind == "wedge") command = dzw::SweepCommand::kRuelleFromSelberg;
  if (o.wedge >= 0) o.cfg.sigma = dzw::SigmaChoice{dzw::SigmaMode::kWedge, o.wedge};
  emit_rows(o.out, dzw::sweep(command, catalog, o.cfg));
  return 0;
}

int run_regdet(Options& o) {
  finish_grid(o);
  const dzw::LaplacianSpectra spectra = dzw::load_spectra(o.input);
  int p = o.degree;
  if (p < 0) {
    // Default: the highest degree with a nonempty spectrum.
    for (const auto& [deg, model] : spectra.per_degree()) {
      if (!model.empty()) p = deg;
    }
  }
  if (p < 0) throw dzw::Error(dzw::ErrorCode::kInvalidArgument, "spectrum file has no degrees");
  emit_rows(o.out, dzw::sweep(spectra.degree(p), o.cfg));
  return 0;
}

int run_torsion(Options& o) {
  const dzw::LaplacianSpectra spectra = dzw::load_spectra(o.input);
  const dzw::Torsion tau = dzw::analytic_torsion(spectra);
  std::string text = fmt::format("{{\n  \"log_tau\": {:.17g},\n  \"tau\": {:.17g}", tau.log,
                                 tau.value);
  if (!o.orbits.empty()) {
    const dzw::OrbitCatalog catalog = dzw::load_orbit_catalog(o.orbits);
    const dzw::Complex r =
        dzw::fried_residual(spectra, catalog, o.cfg.budget, o.cfg.sign_convention);
    text += fmt::format(",\n  \"sign_convention\": {},\n  \"fried_residual\": [{:.17g}, {:.17g}]",
                        o.cfg.sign_convention, r.real(), r.imag());
  }
  emit(o.out, text + "\n}\n");
  return 0;
}

int run_verify(Options& o) {
  std::vector<dzw::VerifyReport> reports;
  if (o.suite == "all") {
    for (const dzw::VerifySuite s : dzw::all_verify_suites()) {
      reports.push_back(dzw::verify(s, o.cfg));
    }
  } else {
    reports.push_back(dzw::verify(dzw::parse_verify_suite(o.suite), o.cfg));
  }
  bool ok = true;
  for (const dzw::VerifyReport& r : reports) {
    ok = ok && r.passed();
    std::size_t failures = 0;
    for (const dzw::VerifyCheck& c : r.checks) failures += c.asserted && !c.passed;
    std::cerr << fmt::format("{}: {} ({} checks, {} failed)\n", r.suite,
                             r.passed() ? "pass" : "FAIL", r.checks.size(), failures);
  }
  emit(o.out, reports.size() == 1 ? reports.front().to_json() : dzw::reports_to_json(reports));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dzw: dynamical zeta workbench"};
  app.require_subcommand(1);
  Options o;

  CLI::App* orbits = app.add_subcommand("orbits", "orbit catalog utilities");
  orbits->require_subcommand(1);
  CLI::App* gen = orbits->add_subcommand("gen-sft", "prime orbits of an SFT suspension");
  gen->add_option("sft", o.input, "sft.json")->required()->check(CLI::ExistingFile);
  gen->add_option("--out", o.out, "orbits.json output (default stdout)");
  add_budget_flags(gen, o);

  CLI::App* zeta = app.add_subcommand("zeta", "sweep an orbit zeta function over an s-grid");
  zeta->add_option("kind", o.kind, "orbit | ruelle | selberg | wedge")
      ->required()
      ->check(CLI::IsMember({"orbit", "ruelle", "selberg", "wedge"}));
  zeta->add_option("orbits", o.input, "orbits.json")->required()->check(CLI::ExistingFile);
  zeta->add_option("--shift-mode", o.shift_mode, "shift for the wedge decomposition")
      ->check(CLI::IsMember({"shift2l", "telescope"}))
      ->capture_default_str();
  zeta->add_option("--wedge", o.wedge, "selberg: use sigma = wedge^l of the unstable rotation");
  add_budget_flags(zeta, o);
  add_grid_flags(zeta, o);

  CLI::App* regdet = app.add_subcommand("regdet", "log det(Delta_p + s) over an s-grid");
  regdet->add_option("spectrum", o.input, "spectrum.json")->required()->check(CLI::ExistingFile);
  regdet->add_option("--degree", o.degree, "form degree p (default: highest present)");
  add_grid_flags(regdet, o);

  CLI::App* torsion = app.add_subcommand("torsion", "analytic torsion and Fried residual");
  torsion->add_option("spectrum", o.input, "spectrum.json")->required()->check(CLI::ExistingFile);
  torsion->add_option("--orbits", o.orbits, "orbits.json for the Fried comparison")
      ->check(CLI::ExistingFile);
  torsion->add_option("--sign-convention", o.cfg.sign_convention)
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  torsion->add_option("--out", o.out, "JSON output (default stdout)");
  add_budget_flags(torsion, o);

  CLI::App* verify = app.add_subcommand("verify", "run a built-in identity suite");
  verify->add_option("suite", o.suite,
                     "sft-lefschetz | telescoping | hurwitz-det | torsion-fried | odd-poly | "
                     "census | all")
      ->required();
  verify->add_option("--sign-convention", o.cfg.sign_convention)
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  verify->add_option("--out", o.out, "JSON report (default stdout)");
  add_budget_flags(verify, o);

  // regdet sweeps start at the unshifted operator by default.
  regdet->preparse_callback([&](std::size_t) {
    o.cfg.grid.start = 0.0;
    o.cfg.grid.stop = 0.0;
    o.cfg.grid.count = 1;
  });

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen_sft(o);
    if (zeta->parsed()) return run_zeta(o);
    if (regdet->parsed()) return run_regdet(o);
    if (torsion->parsed()) return run_torsion(o);
    if (verify->parsed()) return run_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "dzw: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
