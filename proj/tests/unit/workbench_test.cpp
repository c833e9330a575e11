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

#include <cmath>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "dzw/errors.hpp"
#include "dzw/workbench_io.hpp"
#include "dzw/workbench_sweep.hpp"
#include "dzw/workbench_verify.hpp"

namespace dzw {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no dzw::Error thrown";
  return ErrorCode::kInvalidArgument;
}

std::string error_text(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const std::filesystem::path kData = DZW_TEST_DATA_DIR;

TEST(OrbitJson, MinimalFile) {
  const OrbitCatalog c = parse_orbit_catalog(R"({"dimension": 0, "primes": [{"prime_length": 1.5}]})");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_DOUBLE_EQ(c.complete_to(), 1.5);
  EXPECT_EQ(c.primes()[0].holonomy, HolonomyRep::trivial());
}

TEST(OrbitJson, HyperbolicityViolation) {
  const char* text = R"({"dimension": 0, "mode": "generic", "primes": [
    {"prime_length": 1.0, "unstable_eigenvalues": [[0.9, 0.0]], "stable_eigenvalues": []}]})";
  EXPECT_EQ(code_of([&] { parse_orbit_catalog(text); }), ErrorCode::kInvariantError);
}

TEST(OrbitJson, SchemaDiagnostics) {
  const std::string missing = error_text([] { parse_orbit_catalog(R"({"primes": []})"); });
  EXPECT_NE(missing.find("SchemaError"), std::string::npos);
  EXPECT_NE(missing.find("dimension"), std::string::npos);

  const std::string wrong_type = error_text([] {
    parse_orbit_catalog(R"({"dimension": 0, "primes": [{"prime_length": 1}, {"prime_length": "x"}]})");
  });
  EXPECT_NE(wrong_type.find("primes[1].prime_length"), std::string::npos) << wrong_type;

  const std::string malformed = error_text([] { parse_orbit_catalog("{\n  \"dimension\": ,\n}"); });
  EXPECT_NE(malformed.find(":2:"), std::string::npos) << malformed;

  const std::string holonomy = error_text([] {
    parse_orbit_catalog(
        R"({"dimension": 0, "primes": [{"prime_length": 1, "holonomy": {"type": "spinor"}}]})");
  });
  EXPECT_NE(holonomy.find("primes[0].holonomy.type"), std::string::npos) << holonomy;
}

TEST(OrbitJson, GoldenMeanRoundTrip) {
  const OrbitCatalog original = sft_catalog(golden_mean_system(), 10);
  const std::string text = dump_orbit_catalog(original);
  const OrbitCatalog reloaded = parse_orbit_catalog(text);
  EXPECT_EQ(reloaded, original);
  EXPECT_EQ(dump_orbit_catalog(reloaded), text);
}

TEST(OrbitJson, ConstantCurvatureRoundTrip) {
  std::vector<PrimeOrbit> primes;
  for (int i = 0; i < 4; ++i) {
    PrimeOrbit p;
    p.prime_length = 0.7 + 0.31 * i;
    p.rotation_angles = std::vector<double>{0.1 * i, 1.0 / 3.0};
    p.poincare = constant_curvature_poincare(p.prime_length, *p.rotation_angles, 5);
    p.holonomy = HolonomyRep::traces(2, {{1, Complex{0.5, 0.25}}, {2, Complex{-1.0, 0.0}}});
    p.bundle_holonomy = HolonomyRep::scalar(std::polar(1.0, 0.1 * i));
    primes.push_back(p);
  }
  const OrbitCatalog original(5, primes);
  const std::string text = dump_orbit_catalog(original);
  EXPECT_NE(text.find("constant_curvature"), std::string::npos);
  EXPECT_EQ(parse_orbit_catalog(text), original);
  EXPECT_EQ(dump_orbit_catalog(parse_orbit_catalog(text)), text);
}

TEST(SpectrumJson, RoundTripAndValues) {
  const LaplacianSpectra spectra = load_spectra(kData / "circle_a025_spectrum.json");
  EXPECT_EQ(spectra, circle_model(0.25).spectra);
  const std::string text = dump_spectra(spectra);
  EXPECT_EQ(dump_spectra(parse_spectra(text)), text);
  const LaplacianSpectra mixed(2, {{1, SpectrumModel({{2.5, 3}}, {HurwitzFamily{1.0, 1.0, 2, 1}})}});
  EXPECT_EQ(parse_spectra(dump_spectra(mixed)), mixed);
  EXPECT_EQ(code_of([] { parse_spectra(R"({"dim": 1, "degrees": {"one": {}}})"); }),
            ErrorCode::kSchemaError);
  EXPECT_EQ(code_of([] { parse_spectra(R"({"dim": 1, "degrees": {"1": {"explicit": [[0, 1]]}}})"); }),
            ErrorCode::kZeroMode);
}

TEST(SftJson, RoundTrip) {
  const SftSystem sys = load_sft(kData / "golden_mean_sft.json");
  EXPECT_EQ(sys, golden_mean_system());
  Eigen::MatrixXcd rot(2, 2);
  rot << 0, 1, -1, 0;
  SftEdge e;
  e.weight = 0.75;
  e.holonomy = HolonomyRep::matrix(rot);
  e.expansion = 1.5;
  const SftSystem twisted(1, {e, e});
  EXPECT_EQ(parse_sft(dump_sft(twisted)), twisted);
  EXPECT_EQ(code_of([] { parse_sft(R"({"vertices": 1, "edges": [{"from": 0}]})"); }),
            ErrorCode::kSchemaError);
}

TEST(FileIo, SaveLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "dzw_workbench_test";
  std::filesystem::create_directories(dir);
  const OrbitCatalog c = circle_model(0.3).catalog;
  save_orbit_catalog(c, dir / "orbits.json");
  EXPECT_EQ(load_orbit_catalog(dir / "orbits.json"), c);
  EXPECT_THROW(load_orbit_catalog(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}

TEST(Sweep, FullShiftAgainstClosedForm) {
  WorkbenchConfig cfg;
  cfg.grid = SGrid{1.5, 3.0, 7};
  const std::vector<SweepRow> rows =
      sweep(SweepCommand::kOrbitZeta, sft_catalog(full_shift_system(2), 20), cfg);
  ASSERT_EQ(rows.size(), 7u);
  for (const SweepRow& r : rows) {
    const double exact = -std::log(1.0 - 2.0 * std::exp(-r.s.real()));
    EXPECT_LE(std::abs(r.value - exact), std::max(1e-12, r.tail_bound));
    EXPECT_TRUE(r.error.empty());
  }
}

TEST(Sweep, EmptyCatalogAndSinglePoint) {
  WorkbenchConfig cfg;
  cfg.grid = SGrid{0.5, 2.0, 4};
  for (const SweepRow& r : sweep(SweepCommand::kRuelle, OrbitCatalog{}, cfg)) {
    EXPECT_EQ(r.value, Complex(0.0, 0.0));
  }
  cfg.grid.count = 1;
  EXPECT_EQ(sweep(SweepCommand::kRuelle, OrbitCatalog{}, cfg).size(), 1u);
  cfg.grid.count = 0;
  EXPECT_THROW(sweep(SweepCommand::kRuelle, OrbitCatalog{}, cfg), Error);
}

TEST(Sweep, ErrorsAreRecordedPerPoint) {
  WorkbenchConfig cfg;
  cfg.grid = SGrid{-0.5, 1.0, 4};
  const std::vector<SweepRow> rows = sweep(SweepCommand::kOrbitZeta, circle_model(0.3).catalog, cfg);
  EXPECT_NE(rows[0].error.find("Diverging"), std::string::npos);
  EXPECT_TRUE(rows[3].error.empty());
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  EXPECT_EQ(csv.str().rfind("s_re,s_im,value_re,value_im,tail_bound,converged,error\n", 0), 0u);
}

TEST(Sweep, BranchContinuityAlongVerticalLine) {
  // log det(A + s) for A = {1}: log(1 + s) winds as Im s grows; feed a
  // function that returns principal values and check the unwrapping.
  WorkbenchConfig cfg;
  cfg.grid = SGrid{0.0, 60.0, 121, GridAxis::kVerticalLine, -0.9};
  const std::vector<SweepRow> rows = sweep(
      [](Complex s) { return SeriesValue{2.0 * std::log(s + 1.0) + std::log(s + 0.95), 0.0, true}; },
      cfg);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(std::abs(rows[i].value.imag() - rows[i - 1].value.imag()), kPi);
  }
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const OrbitCatalog c = sft_catalog(golden_mean_system(), 14);
  WorkbenchConfig cfg;
  cfg.grid = SGrid{0.2, 1.8, 17, GridAxis::kVerticalLine, 1.2};
  std::string reference;
  for (int threads : {1, 2, 5}) {
    cfg.threads = threads;
    std::ostringstream csv;
    write_sweep_csv(csv, sweep(SweepCommand::kRuelle, c, cfg));
    if (reference.empty()) reference = csv.str();
    EXPECT_EQ(csv.str(), reference) << threads;
  }
}

TEST(Sweep, RegDetAlongRealAxis) {
  WorkbenchConfig cfg;
  cfg.grid = SGrid{0.0, 1.0, 3};
  const std::vector<SweepRow> rows = sweep(circle_model(0.5).spectra.degree(1), cfg);
  EXPECT_NEAR(rows[0].value.real(), std::log(4.0), 1e-12);
  // det over Z of ((n+1/2)^2 + 1) = 4 cosh^2(pi).
  EXPECT_NEAR(rows[2].value.real(), std::log(4.0 * std::pow(std::cosh(kPi), 2)), 1e-11);
}

TEST(Verify, AllSuitesPass) {
  WorkbenchConfig cfg;
  for (const VerifySuite suite : all_verify_suites()) {
    const VerifyReport r = verify(suite, cfg);
    EXPECT_TRUE(r.passed()) << r.to_json();
    EXPECT_FALSE(r.checks.empty());
  }
  EXPECT_EQ(parse_verify_suite("odd-poly"), VerifySuite::kOddPoly);
  EXPECT_THROW(parse_verify_suite("nope"), Error);
}

TEST(Verify, WrongSignConventionFails) {
  WorkbenchConfig cfg;
  cfg.sign_convention = 1;
  const VerifyReport r = verify(VerifySuite::kTorsionFried, cfg);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.to_json().find("\"passed\": false"), std::string::npos);
}

}  // namespace
}  // namespace dzw
