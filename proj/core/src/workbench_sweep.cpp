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

#include "dzw/workbench_sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <thread>

#include <fmt/format.h>

#include "dzw/errors.hpp"

namespace dzw {
namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::vector<Complex> SGrid::points() const {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "grid count must be >= 1");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double x = count == 1 ? start : start + (stop - start) * i / (count - 1);
    out.push_back(along == GridAxis::kRealAxis ? Complex{x, fixed} : Complex{fixed, x});
  }
  return out;
}

void WorkbenchConfig::validate() const {
  if (grid.count < 1) throw Error(ErrorCode::kInvalidArgument, "grid count must be >= 1");
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop) || !std::isfinite(grid.fixed)) {
    throw Error(ErrorCode::kInvalidArgument, "grid bounds must be finite");
  }
  budget.validate();
  if (sign_convention != 1 && sign_convention != -1) {
    throw Error(ErrorCode::kInvalidArgument, "sign convention must be +1 or -1");
  }
  if (threads < 0) throw Error(ErrorCode::kInvalidArgument, "threads must be >= 0");
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DZW_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<SweepRow> sweep(const std::function<SeriesValue(Complex)>& f,
                            const WorkbenchConfig& cfg) {
  cfg.validate();
  const std::vector<Complex> points = cfg.grid.points();
  std::vector<SweepRow> rows(points.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      SweepRow& row = rows[i];
      row.s = points[i];
      try {
        const SeriesValue v = f(points[i]);
        row.value = v.value;
        row.tail_bound = v.tail_bound;
        row.converged = v.converged;
      } catch (const std::exception& e) {
        row.value = {std::nan(""), std::nan("")};
        row.tail_bound = std::nan("");
        row.converged = false;
        row.error = e.what();
      }
    }
  };
  const int threads = std::min<int>(resolve_threads(cfg.threads), static_cast<int>(points.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  // Branch continuity is a sequential pass so the result is independent of
  // scheduling.
  const double two_pi = 2.0 * kPi;
  std::optional<double> previous;
  for (SweepRow& row : rows) {
    if (!row.error.empty()) continue;
    if (previous) {
      const double turns = std::round((*previous - row.value.imag()) / two_pi);
      row.value += Complex{0.0, turns * two_pi};
    }
    previous = row.value.imag();
  }
  return rows;
}

std::vector<SweepRow> sweep(SweepCommand command, const OrbitCatalog& catalog,
                            const WorkbenchConfig& cfg) {
  const TruncationBudget& b = cfg.budget;
  switch (command) {
    case SweepCommand::kOrbitZeta:
      return sweep([&](Complex s) { return orbit_zeta(catalog, s, b); }, cfg);
    case SweepCommand::kRuelle:
      return sweep([&](Complex s) { return ruelle_log(catalog, s, b); }, cfg);
    case SweepCommand::kSelberg:
      return sweep([&](Complex s) { return selberg_log(catalog, cfg.sigma, s, b); }, cfg);
    case SweepCommand::kRuelleFromSelberg:
      return sweep([&](Complex s) { return ruelle_from_selberg(catalog, s, cfg.shift_mode, b); },
                   cfg);
    case SweepCommand::kRegDet:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "regdet sweeps take a spectrum, not a catalog");
}

std::vector<SweepRow> sweep(const SpectrumModel& model, const WorkbenchConfig& cfg) {
  return sweep([&](Complex s) { return SeriesValue{reg_det(model, s).log, 0.0, true}; }, cfg);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "s_re,s_im,value_re,value_im,tail_bound,converged,error\n";
  for (const SweepRow& r : rows) {
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{}\n", r.s.real(), r.s.imag(),
                       r.value.real(), r.value.imag(), r.tail_bound, r.converged ? 1 : 0,
                       csv_field(r.error));
  }
}

}  // namespace dzw
