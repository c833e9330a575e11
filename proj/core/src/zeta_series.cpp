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

#include "dzw/zeta_series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "dzw/errors.hpp"
#include "dzw/summation.hpp"

namespace dzw {
namespace {

constexpr double kEnvelopeSafety = 10.0;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Bound for the unknown primes (length >= from) of an incomplete catalog:
// integrating a per-orbit bound weight * e^{-sigma x} against the envelope
// dN <= safety * C * h e^{hx} dx gives safety * C * sigma e^{(h-sigma) from} / (sigma - h).
double unknown_prime_tail(const OrbitCatalog& catalog, double sigma, double weight) {
  if (catalog.is_complete() || catalog.empty()) return 0.0;
  const GrowthEnvelope env = estimate_growth(catalog);
  const double from = catalog.complete_to();
  if (!(sigma > env.entropy)) {
    throw Error(ErrorCode::kDiverging,
                fmt::format("Re(s) = {} is below the estimated abscissa {}", sigma, env.entropy));
  }
  return kEnvelopeSafety * env.constant * weight * sigma *
         std::exp((env.entropy - sigma) * from) / (sigma - env.entropy);
}

// sum_{k >= k0} e^{-sigma k l} / k <= e^{-sigma k0 l} / (k0 (1 - e^{-sigma l})).
double power_tail(double sigma, double length, int k0) {
  return std::exp(-sigma * length * k0) / (k0 * -std::expm1(-sigma * length));
}

// sum_{N > max} C(N + n - 1, n - 1) r^N, the S^N tail for n eigenvalues of modulus <= r.
double sym_tail(int n, double r, int max) {
  if (n == 0 || r == 0.0) return 0.0;
  double total = 0.0;
  for (int N = max + 1;; ++N) {
    const double term = binomial(N + n - 1, n - 1) * std::pow(r, N);
    total += term;
    const double ratio = r * (N + n) / (N + 1.0);
    if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-17 * std::max(total, 1e-300)) break;
    if (N > max + 100000) break;
  }
  return total;
}

void require_nonempty_half_plane(const OrbitCatalog& catalog, double sigma, ErrorCode code) {
  if (!catalog.empty() && !(sigma > 0.0)) {
    throw Error(code, fmt::format("Re(s) = {} does not give |e^{{-s l}}| < 1", sigma));
  }
}

SeriesValue finish(Complex value, double tail, const TruncationBudget& budget) {
  return SeriesValue{value, tail, tail <= budget.tail_tol};
}

// Shared accumulation so that Selberg with trivial weights reproduces the
// Ruelle sum operation for operation.
inline void add_log_term(CompensatedComplexSum& acc, Complex w, int k, int count) {
  Complex term = -w / static_cast<double>(k);
  if (count != 1) term *= static_cast<double>(count);
  acc.add(term);
}

struct SigmaWeights {
  std::vector<Complex> traces;  // tr sigma^k, k = 1..K
  double bound = 1.0;           // |tr sigma^k| <= bound
};

SigmaWeights sigma_weights(const PrimeOrbit& p, SigmaChoice sigma, int max_power) {
  SigmaWeights w;
  w.traces.reserve(max_power);
  if (sigma.mode == SigmaMode::kBundleHolonomy) {
    const HolonomyRep& h = p.bundle_holonomy ? *p.bundle_holonomy : HolonomyRep::trivial();
    w.bound = h.dimension();
    for (int k = 1; k <= max_power; ++k) w.traces.push_back(holonomy_trace(h, k));
    return w;
  }
  if (!p.rotation_angles) {
    throw Error(ErrorCode::kMissingPoincare, "wedge mode needs rotation angles on every prime");
  }
  const auto& angles = *p.rotation_angles;
  const int n = static_cast<int>(2 * angles.size());
  if (sigma.wedge_degree < 0 || sigma.wedge_degree > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                fmt::format("wedge degree {} outside [0, {}]", sigma.wedge_degree, n));
  }
  w.bound = binomial(n, sigma.wedge_degree);
  for (int k = 1; k <= max_power; ++k) {
    const auto rot = rotation_eigenvalues(angles, k);
    w.traces.push_back(ext_power_trace(rot, sigma.wedge_degree));
  }
  return w;
}

}  // namespace

void TruncationBudget::validate() const {
  if (!(max_length > 0.0) || !std::isfinite(max_length) || max_power < 1 || max_sym < 0 ||
      !(tail_tol > 0.0) || !(tail_tol < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "budget needs max_length > 0, max_power >= 1, max_sym >= 0, 0 < tail_tol < 1");
  }
}

GrowthEnvelope estimate_growth(const OrbitCatalog& catalog) {
  std::vector<double> lengths;
  std::vector<double> counts;
  double running = 0.0;
  for (const PrimeOrbit& p : catalog.primes()) {
    running += p.count;
    if (!lengths.empty() && lengths.back() == p.prime_length) {
      counts.back() = running;
    } else {
      lengths.push_back(p.prime_length);
      counts.push_back(running);
    }
  }
  GrowthEnvelope env;
  if (lengths.empty()) return env;
  const std::size_t m = lengths.size();
  if (m >= 4) {
    // Least squares on the upper half, where the asymptotic rate dominates.
    // Prime counts grow like e^{hL}/(hL), so fit log(L N(L)).
    const std::size_t first = m / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double cnt = static_cast<double>(m - first);
    for (std::size_t j = first; j < m; ++j) {
      const double x = lengths[j];
      const double y = std::log(counts[j] * x);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double denom = cnt * sxx - sx * sx;
    env.entropy = denom > 0.0 ? std::max(0.0, (cnt * sxy - sx * sy) / denom) : 0.0;
  } else {
    env.entropy = std::log1p(counts.back()) / lengths.back();
  }
  for (std::size_t j = 0; j < m; ++j) {
    env.constant = std::max(env.constant, counts[j] * std::exp(-env.entropy * lengths[j]));
  }
  return env;
}

SeriesValue orbit_zeta(const OrbitCatalog& catalog, Complex s, const TruncationBudget& budget) {
  budget.validate();
  const double sigma = s.real();
  require_nonempty_half_plane(catalog, sigma, ErrorCode::kDiverging);

  CompensatedComplexSum acc;
  for (const OrbitPower& op : expand_powers(catalog, budget.max_length)) {
    const double weight = op.fuller_index.to_double() * op.count;
    acc.add(weight * op.holonomy_trace * std::exp(-s * op.length));
  }

  CompensatedSum tail;
  for (const PrimeOrbit& p : catalog.primes()) {
    int k0 = 1;
    while (k0 * p.prime_length <= budget.max_length) ++k0;
    tail.add(p.count * p.holonomy.dimension() * power_tail(sigma, p.prime_length, k0));
  }
  if (!catalog.is_complete()) {
    const double from = catalog.complete_to();
    tail.add(unknown_prime_tail(catalog, sigma,
                                catalog.max_holonomy_dimension() / -std::expm1(-sigma * from)));
  }
  return finish(acc.value(), tail.value(), budget);
}

SeriesValue ruelle_log(const OrbitCatalog& catalog, Complex s, const TruncationBudget& budget) {
  budget.validate();
  const double sigma = s.real();
  require_nonempty_half_plane(catalog, sigma, ErrorCode::kSingularFactor);

  CompensatedComplexSum acc;
  CompensatedSum tail;
  for (const PrimeOrbit& p : catalog.primes()) {
    const double dim = p.holonomy.dimension();
    if (p.prime_length > budget.max_length) {
      tail.add(-p.count * dim * std::log1p(-std::exp(-sigma * p.prime_length)));
      continue;
    }
    for (int k = 1; k <= budget.max_power; ++k) {
      const Complex tr_phi = holonomy_trace(p.holonomy, k);
      const Complex w = tr_phi * std::exp(-s * (k * p.prime_length));
      add_log_term(acc, w, k, p.count);
    }
    tail.add(p.count * dim * power_tail(sigma, p.prime_length, budget.max_power + 1));
  }
  if (!catalog.is_complete()) {
    const double from = catalog.complete_to();
    tail.add(unknown_prime_tail(catalog, sigma,
                                catalog.max_holonomy_dimension() / -std::expm1(-sigma * from)));
  }
  return finish(acc.value(), tail.value(), budget);
}

SeriesValue selberg_log(const OrbitCatalog& catalog, SigmaChoice sigma_choice, Complex s,
                        const TruncationBudget& budget) {
  budget.validate();
  const double sigma = s.real();
  require_nonempty_half_plane(catalog, sigma, ErrorCode::kDiverging);

  CompensatedComplexSum acc;
  CompensatedSum tail;
  double worst_factor = 1.0;  // (1 - r)^{-n} over the catalog
  double sigma_bound = 1.0;
  for (const PrimeOrbit& p : catalog.primes()) {
    const auto& unstable = p.poincare.unstable();
    if (unstable.empty()) {
      throw Error(ErrorCode::kMissingPoincare, "prime orbit has no unstable Poincare data");
    }
    const int n = static_cast<int>(unstable.size());
    double r = 0.0;
    for (const Complex& mu : unstable) r = std::max(r, 1.0 / std::abs(mu));
    const double dim_phi = p.holonomy.dimension();

    if (p.prime_length > budget.max_length) {
      const SigmaWeights sw = sigma_weights(p, sigma_choice, 1);
      tail.add(-p.count * sw.bound * dim_phi * std::pow(1.0 - r, -n) *
               std::log1p(-std::exp(-sigma * p.prime_length)));
      worst_factor = std::max(worst_factor, std::pow(1.0 - r, -n));
      sigma_bound = std::max(sigma_bound, sw.bound);
      continue;
    }

    const SigmaWeights sw = sigma_weights(p, sigma_choice, budget.max_power);
    worst_factor = std::max(worst_factor, std::pow(1.0 - r, -n));
    sigma_bound = std::max(sigma_bound, sw.bound);
    std::vector<Complex> inverse(unstable.size());
    for (int k = 1; k <= budget.max_power; ++k) {
      for (std::size_t j = 0; j < unstable.size(); ++j) {
        inverse[j] = 1.0 / integer_power(unstable[j], k);
      }
      const auto h = sym_power_traces(inverse, budget.max_sym);
      CompensatedComplexSum inner_sum;
      for (const Complex& hn : h) inner_sum.add(hn);
      const Complex inner = inner_sum.value();

      const Complex tr_sigma = sw.traces[k - 1];
      const Complex tr_phi = holonomy_trace(p.holonomy, k);
      const Complex w = tr_sigma * tr_phi * inner * std::exp(-s * (k * p.prime_length));
      add_log_term(acc, w, k, p.count);

      const double rk = std::pow(r, k);
      tail.add(p.count * sw.bound * dim_phi * std::exp(-sigma * k * p.prime_length) / k *
               sym_tail(n, rk, budget.max_sym));
    }
    const int K1 = budget.max_power + 1;
    tail.add(p.count * sw.bound * dim_phi * std::pow(1.0 - std::pow(r, K1), -n) *
             power_tail(sigma, p.prime_length, K1));
  }
  if (!catalog.is_complete()) {
    const double from = catalog.complete_to();
    tail.add(unknown_prime_tail(catalog, sigma,
                                sigma_bound * catalog.max_holonomy_dimension() * worst_factor /
                                    -std::expm1(-sigma * from)));
  }
  return finish(acc.value(), tail.value(), budget);
}

SeriesValue ruelle_from_selberg(const OrbitCatalog& catalog, Complex s, ShiftMode mode,
                                const TruncationBudget& budget) {
  const int d = catalog.dimension();
  if (d < 3 || d % 2 == 0) {
    throw Error(ErrorCode::kBadDimension,
                "wedge decomposition needs a constant-curvature catalog of odd dimension");
  }
  for (const PrimeOrbit& p : catalog.primes()) {
    if (!p.rotation_angles || p.rotation_angles->size() != static_cast<std::size_t>((d - 1) / 2)) {
      throw Error(ErrorCode::kMissingPoincare,
                  "wedge decomposition needs (d-1)/2 rotation angles on every prime");
    }
  }
  CompensatedComplexSum acc;
  double tail = 0.0;
  bool converged = true;
  for (int l = 0; l <= d - 1; ++l) {
    const double shift = mode == ShiftMode::kShift2l ? 2.0 * l : static_cast<double>(l);
    const SeriesValue z =
        selberg_log(catalog, SigmaChoice{SigmaMode::kWedge, l}, s + shift, budget);
    acc.add(l % 2 == 0 ? z.value : -z.value);
    tail += z.tail_bound;
    converged = converged && z.converged;
  }
  return SeriesValue{acc.value(), tail, converged && tail <= budget.tail_tol};
}

RegularizedSum regularized_orbit_sum(const OrbitCatalog& catalog, RegularizationMethod method,
                                     const TruncationBudget& budget,
                                     const ExtrapolationGrid& grid) {
  if (method == RegularizationMethod::kClosedForm) {
    RegularizedSum out;
    if (catalog.exact_model()) {
      try {
        out.value = catalog.exact_model()->evaluate({0.0, 0.0});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSingularFactor) throw;
        throw Error(ErrorCode::kPoleAtZero,
                    "orbit series is singular at s = 0 (non-acyclic analogue)");
      }
      out.branch = "closed form: " + catalog.exact_model()->describe() +
                   "; principal log per transfer eigenvalue, reduced to Im in (-pi, pi]";
    } else if (catalog.is_complete()) {
      CompensatedComplexSum acc;
      for (const PrimeOrbit& p : catalog.primes()) {
        if (!p.holonomy.is_matrix()) {
          throw Error(ErrorCode::kUnsupportedModel,
                      "closed form needs matrix holonomies (trace sequences given)");
        }
        int sign = 1;
        if (!p.poincare.empty()) {
          sign = lefschetz_index(p.poincare);
          if (lefschetz_index(p.poincare.power(2)) != sign) {
            throw Error(ErrorCode::kUnsupportedModel,
                        "Lefschetz index alternates along iterates; no product closed form");
          }
        }
        for (const Complex& lambda : p.holonomy.eigenvalues()) {
          const Complex factor = 1.0 - lambda;
          if (std::abs(factor) < 1e-12) {
            throw Error(ErrorCode::kPoleAtZero,
                        "holonomy has eigenvalue 1: the Euler factor vanishes at s = 0");
          }
          acc.add(-static_cast<double>(sign * p.count) * std::log(factor));
        }
      }
      out.value = acc.value();
      out.branch = "closed form: finite Euler product; principal log per holonomy eigenvalue, "
                   "reduced to Im in (-pi, pi]";
    } else {
      throw Error(ErrorCode::kUnsupportedModel,
                  "closed_form needs an attached exact model or a complete catalog");
    }
    out.value = reduce_mod_2pi_i(out.value);
    out.error_estimate = 1e-14 * std::max(1.0, std::abs(out.value));
    return out;
  }

  if (grid.count < 3 || !(grid.start > 0.0) || !(grid.stop > grid.start)) {
    throw Error(ErrorCode::kInvalidArgument, "extrapolation grid needs count >= 3, 0 < start < stop");
  }
  // Neville extrapolation of grid values to s = 0.
  const int n = grid.count;
  std::vector<double> xs(n);
  std::vector<Complex> table(n);
  double tail = 0.0;
  for (int j = 0; j < n; ++j) {
    xs[j] = grid.start + (grid.stop - grid.start) * j / (n - 1);
    const SeriesValue v = orbit_zeta(catalog, {xs[j], 0.0}, budget);
    if (!v.converged) {
      throw Error(ErrorCode::kDiverging,
                  fmt::format("orbit series not converged at s = {} (tail {:.3e})", xs[j],
                              v.tail_bound));
    }
    table[j] = v.value;
    tail = std::max(tail, v.tail_bound);
  }
  Complex previous = table[0];
  Complex current = table[0];
  for (int m = 1; m < n; ++m) {
    for (int j = 0; j < n - m; ++j) {
      table[j] = ((0.0 - xs[j + m]) * table[j] + (xs[j] - 0.0) * table[j + 1]) / (xs[j] - xs[j + m]);
    }
    previous = current;
    current = table[0];
  }
  RegularizedSum out;
  out.value = reduce_mod_2pi_i(current);
  out.error_estimate = std::abs(current - previous) + tail;
  out.branch = fmt::format(
      "polynomial extrapolation from real grid [{}, {}] ({} points), reduced to Im in (-pi, pi]",
      grid.start, grid.stop, n);
  return out;
}

}  // namespace dzw
