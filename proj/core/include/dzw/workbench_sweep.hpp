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

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "dzw/orbit_model.hpp"
#include "dzw/spectral_zeta.hpp"
#include "dzw/zeta_series.hpp"

namespace dzw {

enum class GridAxis {
  kRealAxis,      // s = x + i * fixed
  kVerticalLine,  // s = fixed + i * x
};

struct SGrid {
  double start = 1.0;
  double stop = 2.0;
  int count = 11;
  GridAxis along = GridAxis::kRealAxis;
  double fixed = 0.0;

  /// Grid points in order; count == 1 gives {start}.
  std::vector<Complex> points() const;
};

struct WorkbenchConfig {
  SGrid grid;
  TruncationBudget budget;
  ShiftMode shift_mode = ShiftMode::kTelescoping;
  SigmaChoice sigma;
  int sign_convention = -1;
  // 0 = DZW_THREADS if set, else hardware concurrency.
  int threads = 0;

  void validate() const;
};

enum class SweepCommand { kOrbitZeta, kRuelle, kSelberg, kRuelleFromSelberg, kRegDet };

struct SweepRow {
  Complex s;
  Complex value;
  double tail_bound = 0.0;
  bool converged = false;
  std::string error;  // empty on success
};

/// Worker count for a config: explicit, then DZW_THREADS, then hardware.
int resolve_threads(int requested);

/// Evaluates f on the grid, in parallel, then fixes the log branch in grid
/// order: each imaginary part is moved by a multiple of 2 pi to lie within
/// pi of the previous successful point. Errors become rows with the message
/// in `error`.
std::vector<SweepRow> sweep(const std::function<SeriesValue(Complex)>& f,
                            const WorkbenchConfig& cfg);

std::vector<SweepRow> sweep(SweepCommand command, const OrbitCatalog& catalog,
                            const WorkbenchConfig& cfg);

/// log det(A + s) along the grid.
std::vector<SweepRow> sweep(const SpectrumModel& model, const WorkbenchConfig& cfg);

/// CSV: s_re,s_im,value_re,value_im,tail_bound,converged,error
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace dzw
