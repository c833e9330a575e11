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


#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dzw/workbench_sweep.hpp"

namespace dzw {

enum class VerifySuite { kSftLefschetz, kTelescoping, kHurwitzDet, kTorsionFried, kOddPoly, kCensus };

VerifySuite parse_verify_suite(std::string_view name);
std::string_view verify_suite_name(VerifySuite suite);
std::vector<VerifySuite> all_verify_suites();

struct VerifyCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  // Reported-only checks never fail the suite.
  bool asserted = true;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool passed() const noexcept;
  std::string to_json() const;
};

/// Runs one built-in suite. Budget fields of cfg bound the truncations; the
/// grid is fixed per suite.
VerifyReport verify(VerifySuite suite, const WorkbenchConfig& cfg);

/// JSON array of several reports.
std::string reports_to_json(const std::vector<VerifyReport>& reports);

}  // namespace dzw
