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

#include "dzw/workbench_verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <random>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "dzw/errors.hpp"
#include "dzw/polynomial.hpp"
#include "dzw/symbolic_dynamics.hpp"
#include "dzw/torsion.hpp"

namespace dzw {
namespace {

using ojson = nlohmann::ordered_json;

VerifyCheck check(std::string name, double residual, double tolerance, std::string detail = {}) {
  VerifyCheck c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = std::isfinite(residual) && residual <= tolerance;
  c.detail = std::move(detail);
  return c;
}

VerifyCheck failed(std::string name, double tolerance, const std::exception& e) {
  VerifyCheck c;
  c.name = std::move(name);
  c.residual = std::nan("");
  c.tolerance = tolerance;
  c.passed = false;
  c.detail = e.what();
  return c;
}

void sft_lefschetz(const WorkbenchConfig& cfg, VerifyReport& report) {
  const std::pair<const char*, SftSystem> systems[] = {{"golden-mean", golden_mean_system()},
                                                       {"full-2-shift", full_shift_system(2)}};
  for (const auto& [label, sys] : systems) {
    const int words = std::max(1, static_cast<int>(cfg.budget.max_length / sys.min_weight()));
    const OrbitCatalog catalog = sft_catalog(sys, words);
    const double sigma0 = sft_abscissa(sys) + 0.5;
    std::vector<Complex> points;
    for (int i = 0; i < 10; ++i) points.emplace_back(sigma0 + 0.2 * i, 0.0);
    for (int i = 0; i < 10; ++i) points.emplace_back(sigma0 + 0.5, -3.0 + 6.0 * i / 9.0);
    for (const Complex s : points) {
      const std::string name = fmt::format("{} s={:.4g}{:+.4g}i", label, s.real(), s.imag());
      try {
        const SeriesValue series = orbit_zeta(catalog, s, cfg.budget);
        const Complex exact = exact_orbit_sum(sys, s);
        report.checks.push_back(check(name, std::abs(series.value - exact),
                                      std::max(1e-8, series.tail_bound)));
      } catch (const std::exception& e) {
        report.checks.push_back(failed(name, 1e-8, e));
      }
    }
  }
}

void telescoping(const WorkbenchConfig& cfg, VerifyReport& report) {
  TruncationBudget budget = cfg.budget;
  budget.max_sym = std::max(budget.max_sym, 60);
  const double lengths[] = {0.5, 0.9, 1.7, 3.0};
  const double angles[] = {0.0, 0.7, 2.4};
  const Complex s{2.0, 0.5};
  for (const double length : lengths) {
    for (const double theta : angles) {
      PrimeOrbit p;
      p.prime_length = length;
      p.rotation_angles = std::vector<double>{theta};
      p.poincare = constant_curvature_poincare(length, *p.rotation_angles, 3);
      const OrbitCatalog catalog(3, {p});
      budget.max_length = std::max(cfg.budget.max_length, 40.0 * length);
      const std::string name = fmt::format("l={} theta={}", length, theta);
      try {
        const Complex ruelle = ruelle_log(catalog, s, budget).value;
        const Complex tele = ruelle_from_selberg(catalog, s, ShiftMode::kTelescoping, budget).value;
        const Complex doubled = ruelle_from_selberg(catalog, s, ShiftMode::kShift2l, budget).value;
        report.checks.push_back(check("telescoping " + name, std::abs(tele - ruelle), 1e-9));
        VerifyCheck info = check("shift-2l " + name, std::abs(doubled - ruelle),
                                 std::numeric_limits<double>::infinity(), "reported, not asserted");
        info.asserted = false;
        info.passed = true;
        report.checks.push_back(std::move(info));
      } catch (const std::exception& e) {
        report.checks.push_back(failed("telescoping " + name, 1e-9, e));
      }
    }
  }
}

void hurwitz_det(VerifyReport& report) {
  auto run = [&](const std::string& name, auto&& compute, double expected) {
    try {
      report.checks.push_back(check(name, std::abs(compute() - expected), 1e-9));
    } catch (const std::exception& e) {
      report.checks.push_back(failed(name, 1e-9, e));
    }
  };
  run("circle a=1/2 det", [] { return reg_det(circle_model(0.5).spectra.degree(1)).value.real(); },
      4.0);
  run("circle a=1/4 det",
      [] { return reg_det(circle_model(0.25).spectra.degree(1)).value.real(); }, 2.0);
  run("lambda_n=n det",
      [] { return reg_det(SpectrumModel({}, {HurwitzFamily{1.0, 1.0, 1, 1}})).value.real(); },
      std::sqrt(2.0 * kPi));
}

void torsion_fried(const WorkbenchConfig& cfg, VerifyReport& report) {
  for (const double a : {0.25, 1.0 / 3.0, 0.37}) {
    const std::string name = fmt::format("circle a={:.6g} fried", a);
    try {
      const CircleModel m = circle_model(a);
      const Complex r = fried_residual(m.spectra, m.catalog, cfg.budget, cfg.sign_convention);
      report.checks.push_back(check(name, std::abs(r), 1e-8));
    } catch (const std::exception& e) {
      report.checks.push_back(failed(name, 1e-8, e));
    }
  }
  try {
    const double tau = analytic_torsion(circle_model(0.25).spectra).value;
    report.checks.push_back(check("circle a=1/4 tau", std::abs(tau - 0.5), 1e-9));
  } catch (const std::exception& e) {
    report.checks.push_back(failed("circle a=1/4 tau", 1e-9, e));
  }
}

void odd_poly(VerifyReport& report) {
  std::mt19937_64 rng(20260415);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (const int d : {3, 5}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Polynomial> family(static_cast<std::size_t>(d));
      for (int l = 0; l <= (d - 1) / 2; ++l) {
        std::vector<Complex> c(8, Complex{0.0, 0.0});
        for (std::size_t p = 1; p < c.size(); p += 2) c[p] = coeff(rng);
        family[l] = Polynomial(c);
        family[d - 1 - l] = family[l];
      }
      const Polynomial sum = alternating_shift_sum(family, d);
      double worst = 0.0;
      const auto& cs = sum.coefficients();
      for (std::size_t p = 0; p < cs.size(); p += 2) worst = std::max(worst, std::abs(cs[p]));
      report.checks.push_back(check(fmt::format("d={} trial={}", d, trial), worst, 1e-6));
    }
  }
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

void census(VerifyReport& report) {
  constexpr int kMaxN = 12;
  std::mt19937_64 rng(7);
  std::bernoulli_distribution edge(0.45);
  std::uniform_int_distribution<int> size(1, 5);
  for (int g = 0; g < 10; ++g) {
    std::vector<SftEdge> edges;
    int n_vertices = 0;
    while (edges.empty()) {
      n_vertices = size(rng);
      for (int i = 0; i < n_vertices; ++i) {
        for (int j = 0; j < n_vertices; ++j) {
          if (!edge(rng)) continue;
          SftEdge e;
          e.from = i;
          e.to = j;
          edges.push_back(e);
        }
      }
    }
    const SftSystem sys(n_vertices, edges);
    const std::vector<CycleWord> cycles = enumerate_prime_cycles(sys, kMaxN);
    std::map<int, std::int64_t> primes_of_length;
    for (const CycleWord& w : cycles) ++primes_of_length[static_cast<int>(w.word_length())];

    // Traces of A^n by integer matrix powers.
    const auto adj = sys.adjacency();
    std::vector<std::vector<std::int64_t>> power(n_vertices, std::vector<std::int64_t>(n_vertices));
    for (int i = 0; i < n_vertices; ++i) power[i][i] = 1;
    std::vector<std::int64_t> trace(kMaxN + 1, 0);
    for (int n = 1; n <= kMaxN; ++n) {
      std::vector<std::vector<std::int64_t>> next(n_vertices,
                                                  std::vector<std::int64_t>(n_vertices, 0));
      for (int i = 0; i < n_vertices; ++i) {
        for (int k = 0; k < n_vertices; ++k) {
          for (int j = 0; j < n_vertices; ++j) {
            next[i][j] += power[i][k] * static_cast<std::int64_t>(adj[k][j]);
          }
        }
      }
      power = std::move(next);
      for (int i = 0; i < n_vertices; ++i) trace[n] += power[i][i];
    }

    std::int64_t worst_necklace = 0;
    std::int64_t worst_trace = 0;
    for (int n = 1; n <= kMaxN; ++n) {
      std::int64_t mobius_sum = 0;
      std::int64_t weighted = 0;
      for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        mobius_sum += mobius(n / d) * trace[d];
        weighted += d * primes_of_length[d];
      }
      worst_necklace = std::max<std::int64_t>(
          worst_necklace, std::llabs(mobius_sum - n * primes_of_length[n]));
      worst_trace = std::max<std::int64_t>(worst_trace, std::llabs(weighted - trace[n]));
    }
    const std::string label = fmt::format("graph {} ({} vertices, {} edges)", g, n_vertices,
                                          edges.size());
    report.checks.push_back(check(label + " necklace", static_cast<double>(worst_necklace), 0.0));
    report.checks.push_back(check(label + " trace", static_cast<double>(worst_trace), 0.0));
  }
}

}  // namespace

VerifySuite parse_verify_suite(std::string_view name) {
  for (const VerifySuite s : all_verify_suites()) {
    if (verify_suite_name(s) == name) return s;
  }
  throw Error(ErrorCode::kInvalidArgument, fmt::format("unknown verify suite '{}'", name));
}

std::string_view verify_suite_name(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::kSftLefschetz: return "sft-lefschetz";
    case VerifySuite::kTelescoping: return "telescoping";
    case VerifySuite::kHurwitzDet: return "hurwitz-det";
    case VerifySuite::kTorsionFried: return "torsion-fried";
    case VerifySuite::kOddPoly: return "odd-poly";
    case VerifySuite::kCensus: return "census";
  }
  return "unknown";
}

std::vector<VerifySuite> all_verify_suites() {
  return {VerifySuite::kSftLefschetz, VerifySuite::kTelescoping, VerifySuite::kHurwitzDet,
          VerifySuite::kTorsionFried, VerifySuite::kOddPoly,     VerifySuite::kCensus};
}

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return !c.asserted || c.passed; });
}

namespace {

ojson report_json(const VerifyReport& r) {
  ojson doc;
  doc["suite"] = r.suite;
  doc["passed"] = r.passed();
  ojson checks = ojson::array();
  for (const VerifyCheck& c : r.checks) {
    ojson cj;
    cj["name"] = c.name;
    // JSON has no inf/nan; those are written as null.
    cj["residual"] = std::isfinite(c.residual) ? ojson(c.residual) : ojson(nullptr);
    cj["tolerance"] = std::isfinite(c.tolerance) ? ojson(c.tolerance) : ojson(nullptr);
    cj["asserted"] = c.asserted;
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

}  // namespace

std::string VerifyReport::to_json() const { return report_json(*this).dump(2) + "\n"; }

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
  ojson doc = ojson::array();
  for (const VerifyReport& r : reports) doc.push_back(report_json(r));
  return doc.dump(2) + "\n";
}

VerifyReport verify(VerifySuite suite, const WorkbenchConfig& cfg) {
  cfg.budget.validate();
  VerifyReport report;
  report.suite = std::string(verify_suite_name(suite));
  switch (suite) {
    case VerifySuite::kSftLefschetz: sft_lefschetz(cfg, report); break;
    case VerifySuite::kTelescoping: telescoping(cfg, report); break;
    case VerifySuite::kHurwitzDet: hurwitz_det(report); break;
    case VerifySuite::kTorsionFried: torsion_fried(cfg, report); break;
    case VerifySuite::kOddPoly: odd_poly(report); break;
    case VerifySuite::kCensus: census(report); break;
  }
  return report;
}

}  // namespace dzw
