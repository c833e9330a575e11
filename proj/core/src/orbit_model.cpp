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

#include "dzw/orbit_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "dzw/errors.hpp"

namespace dzw {
namespace {

constexpr double kUnitaryTol = 1e-12;
constexpr double kDegeneracyTol = 1e-12;
constexpr double kImaginaryResidueTol = 1e-10;
constexpr double kConjugatePairTol = 1e-9;

bool is_real(Complex z) { return std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z)); }

// Every non-real eigenvalue must be matched by a distinct conjugate partner.
bool conjugate_closed(const std::vector<Complex>& values) {
  std::vector<bool> used(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (used[i] || is_real(values[i])) continue;
    bool matched = false;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j == i || used[j]) continue;
      const double scale = std::max(1.0, std::abs(values[i]));
      if (std::abs(values[j] - std::conj(values[i])) <= kConjugatePairTol * scale) {
        used[i] = used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int k) {
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  Eigen::MatrixXcd base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

PoincareSpectrum::PoincareSpectrum(std::vector<Complex> unstable, std::vector<Complex> stable)
    : unstable_(std::move(unstable)), stable_(std::move(stable)) {
  for (const Complex& mu : unstable_) {
    if (!(std::abs(mu) > 1.0)) {
      throw Error(ErrorCode::kInvariantError,
                  fmt::format("hyperbolicity: unstable eigenvalue ({}, {}) has modulus {} <= 1",
                              mu.real(), mu.imag(), std::abs(mu)));
    }
  }
  for (const Complex& mu : stable_) {
    if (!(std::abs(mu) < 1.0)) {
      throw Error(ErrorCode::kInvariantError,
                  fmt::format("hyperbolicity: stable eigenvalue ({}, {}) has modulus {} >= 1",
                              mu.real(), mu.imag(), std::abs(mu)));
    }
  }
  if (!conjugate_closed(unstable_) || !conjugate_closed(stable_)) {
    throw Error(ErrorCode::kInvariantError,
                "conjugate pairing: non-real Poincare eigenvalues must come in conjugate pairs");
  }
}

PoincareSpectrum PoincareSpectrum::power(int k) const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "power index must be >= 1");
  PoincareSpectrum out;
  out.unstable_.reserve(unstable_.size());
  out.stable_.reserve(stable_.size());
  for (const Complex& mu : unstable_) out.unstable_.push_back(integer_power(mu, k));
  for (const Complex& mu : stable_) out.stable_.push_back(integer_power(mu, k));
  return out;
}

HolonomyRep HolonomyRep::trivial(int dimension) {
  if (dimension < 1) throw Error(ErrorCode::kInvalidArgument, "holonomy dimension must be >= 1");
  return matrix(Eigen::MatrixXcd::Identity(dimension, dimension));
}

HolonomyRep HolonomyRep::scalar(Complex u) {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = u;
  return matrix(std::move(m));
}

HolonomyRep HolonomyRep::matrix(Eigen::MatrixXcd m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "holonomy matrix must be square and nonempty");
  }
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  const double defect = (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  if (defect > kUnitaryTol) {
    throw Error(ErrorCode::kInvariantError,
                fmt::format("unitarity: holonomy columns not orthonormal (defect {:.3e})", defect));
  }
  HolonomyRep h;
  h.dimension_ = static_cast<int>(m.rows());
  h.is_matrix_ = true;
  h.matrix_ = std::move(m);
  return h;
}

HolonomyRep HolonomyRep::traces(int dimension, std::map<int, Complex> values) {
  if (dimension < 1) throw Error(ErrorCode::kInvalidArgument, "holonomy dimension must be >= 1");
  for (const auto& [k, tr] : values) {
    if (k < 1) throw Error(ErrorCode::kInvalidArgument, "trace sequence keys start at k = 1");
    if (std::abs(tr) > dimension + kUnitaryTol) {
      throw Error(ErrorCode::kInvariantError,
                  fmt::format("unitary bound: |tr h^{}| = {} exceeds dimension {}", k,
                              std::abs(tr), dimension));
    }
  }
  HolonomyRep h;
  h.dimension_ = dimension;
  h.is_matrix_ = false;
  h.traces_ = std::move(values);
  return h;
}

const Eigen::MatrixXcd& HolonomyRep::matrix_form() const {
  if (!is_matrix_) {
    throw Error(ErrorCode::kUnsupportedModel, "holonomy is stored as a trace sequence");
  }
  return matrix_;
}

std::vector<Complex> HolonomyRep::eigenvalues() const {
  const Eigen::MatrixXcd& m = matrix_form();
  if (m.rows() == 1) return {m(0, 0)};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

HolonomyRep HolonomyRep::compose(const HolonomyRep& rhs) const {
  const Eigen::MatrixXcd& a = matrix_form();
  const Eigen::MatrixXcd& b = rhs.matrix_form();
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kBadDimension, "cannot compose holonomies of different dimension");
  }
  HolonomyRep h;
  h.dimension_ = dimension_;
  h.is_matrix_ = true;
  h.matrix_ = a * b;
  return h;
}

bool operator==(const HolonomyRep& a, const HolonomyRep& b) {
  if (a.dimension_ != b.dimension_ || a.is_matrix_ != b.is_matrix_) return false;
  if (a.is_matrix_) return a.matrix_ == b.matrix_;
  return a.traces_ == b.traces_;
}

OrbitCatalog::OrbitCatalog(int dimension, std::vector<PrimeOrbit> primes, double complete_to)
    : dimension_(dimension), complete_to_(complete_to) {
  if (dimension != 0 && (dimension < 3 || dimension % 2 == 0)) {
    throw Error(ErrorCode::kBadDimension,
                fmt::format("catalog dimension must be odd and >= 3 (or 0), got {}", dimension));
  }
  if (!(complete_to > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "complete_to must be positive");
  }
  for (const PrimeOrbit& p : primes) {
    if (!(p.prime_length > 0.0) || !std::isfinite(p.prime_length)) {
      throw Error(ErrorCode::kInvariantError, "prime_length must be positive and finite");
    }
    if (p.count < 1) throw Error(ErrorCode::kInvariantError, "orbit count must be >= 1");
  }
  std::stable_sort(primes.begin(), primes.end(),
                   [](const PrimeOrbit& a, const PrimeOrbit& b) {
                     return a.prime_length < b.prime_length;
                   });
  // Merge orbits identical in every field but count.
  for (PrimeOrbit& p : primes) {
    bool merged = false;
    for (auto it = primes_.rbegin(); it != primes_.rend() && it->prime_length == p.prime_length;
         ++it) {
      PrimeOrbit probe = p;
      probe.count = it->count;
      if (probe == *it) {
        it->count += p.count;
        merged = true;
        break;
      }
    }
    if (!merged) primes_.push_back(std::move(p));
  }
}

OrbitCatalog OrbitCatalog::with_exact_model(std::shared_ptr<const ExactOrbitZeta> model) const {
  OrbitCatalog copy = *this;
  copy.exact_ = std::move(model);
  return copy;
}

int OrbitCatalog::max_holonomy_dimension() const noexcept {
  int dim = 0;
  for (const PrimeOrbit& p : primes_) dim = std::max(dim, p.holonomy.dimension());
  return dim;
}

bool operator==(const OrbitCatalog& a, const OrbitCatalog& b) {
  return a.dimension_ == b.dimension_ && a.complete_to_ == b.complete_to_ &&
         a.primes_ == b.primes_;
}

int lefschetz_index(const PoincareSpectrum& p) {
  // Accumulate only the phase of det(1 - P) so long orbits cannot overflow.
  Complex phase{1.0, 0.0};
  auto absorb = [&](const Complex& mu) {
    const Complex factor = 1.0 - mu;
    const double mag = std::abs(factor);
    if (mag < kDegeneracyTol) {
      throw Error(ErrorCode::kDegenerateOrbit,
                  fmt::format("Poincare eigenvalue ({}, {}) is within {} of 1", mu.real(),
                              mu.imag(), kDegeneracyTol));
    }
    phase *= factor / mag;
  };
  for (const Complex& mu : p.unstable()) absorb(mu);
  for (const Complex& mu : p.stable()) absorb(mu);
  if (std::abs(phase.imag()) > kImaginaryResidueTol) {
    throw Error(ErrorCode::kInvariantError,
                fmt::format("det(1 - P) has imaginary residue {:.3e}", phase.imag()));
  }
  return phase.real() > 0.0 ? 1 : -1;
}

Rational fuller_index(int lefschetz, int multiplicity) {
  if (multiplicity < 1) throw Error(ErrorCode::kInvalidArgument, "multiplicity must be >= 1");
  if (lefschetz != 1 && lefschetz != -1) {
    throw Error(ErrorCode::kInvalidArgument, "Lefschetz index must be +1 or -1");
  }
  return Rational(lefschetz, multiplicity);
}

Complex holonomy_trace(const HolonomyRep& h, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "trace power must be >= 1");
  if (!h.is_matrix()) {
    const auto& seq = h.trace_form();
    const auto it = seq.find(k);
    if (it == seq.end()) {
      throw Error(ErrorCode::kMissingTrace, fmt::format("trace sequence lacks k = {}", k));
    }
    return it->second;
  }
  const Eigen::MatrixXcd& m = h.matrix_form();
  if (m.rows() == 1) return integer_power(m(0, 0), k);
  return matrix_power(m, k).trace();
}

std::vector<Complex> sym_power_traces(std::span<const Complex> eigenvalues, int max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::kInvalidArgument, "degree must be >= 0");
  // h_N(x_1..x_j) = h_N(x_1..x_{j-1}) + x_j h_{N-1}(x_1..x_j), one variable at a time.
  std::vector<Complex> h(static_cast<std::size_t>(max_degree) + 1, Complex{0.0, 0.0});
  h[0] = 1.0;
  for (const Complex& x : eigenvalues) {
    for (int n = 1; n <= max_degree; ++n) h[n] += x * h[n - 1];
  }
  return h;
}

Complex sym_power_trace(std::span<const Complex> eigenvalues, int degree) {
  return sym_power_traces(eigenvalues, degree).back();
}

std::vector<Complex> ext_power_traces(std::span<const Complex> eigenvalues) {
  std::vector<Complex> e(eigenvalues.size() + 1, Complex{0.0, 0.0});
  e[0] = 1.0;
  std::size_t used = 0;
  for (const Complex& x : eigenvalues) {
    ++used;
    for (std::size_t l = used; l >= 1; --l) e[l] += x * e[l - 1];
  }
  return e;
}

Complex ext_power_trace(std::span<const Complex> eigenvalues, int degree) {
  if (degree < 0 || static_cast<std::size_t>(degree) > eigenvalues.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                fmt::format("exterior degree {} outside [0, {}]", degree, eigenvalues.size()));
  }
  return ext_power_traces(eigenvalues)[static_cast<std::size_t>(degree)];
}

PoincareSpectrum constant_curvature_poincare(double length,
                                             std::span<const double> rotation_angles, int d) {
  if (d < 3 || d % 2 == 0) {
    throw Error(ErrorCode::kBadDimension, fmt::format("dimension {} is not odd and >= 3", d));
  }
  if (rotation_angles.size() != static_cast<std::size_t>((d - 1) / 2)) {
    throw Error(ErrorCode::kBadDimension,
                fmt::format("expected {} rotation angles for d = {}, got {}", (d - 1) / 2, d,
                            rotation_angles.size()));
  }
  if (!(length > 0.0)) throw Error(ErrorCode::kInvalidArgument, "length must be positive");
  std::vector<Complex> unstable;
  std::vector<Complex> stable;
  for (const double theta : rotation_angles) {
    for (const double sign : {1.0, -1.0}) {
      unstable.push_back(std::polar(std::exp(length), sign * theta));
      stable.push_back(std::polar(std::exp(-length), sign * theta));
    }
  }
  return PoincareSpectrum(std::move(unstable), std::move(stable));
}

std::vector<Complex> rotation_eigenvalues(std::span<const double> rotation_angles, int k) {
  std::vector<Complex> out;
  out.reserve(2 * rotation_angles.size());
  for (const double theta : rotation_angles) {
    out.push_back(std::polar(1.0, k * theta));
    out.push_back(std::polar(1.0, -k * theta));
  }
  return out;
}

std::vector<OrbitPower> expand_powers(const OrbitCatalog& catalog, double max_length) {
  if (!(max_length > 0.0)) throw Error(ErrorCode::kInvalidArgument, "max_length must be positive");
  std::vector<OrbitPower> out;
  const auto primes = catalog.primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const PrimeOrbit& p = primes[i];
    for (int k = 1; k * p.prime_length <= max_length; ++k) {
      OrbitPower entry;
      entry.prime_index = i;
      entry.k = k;
      entry.length = k * p.prime_length;
      entry.multiplicity = k;
      entry.lefschetz = p.poincare.empty() ? 1 : lefschetz_index(p.poincare.power(k));
      entry.fuller_index = fuller_index(entry.lefschetz, k);
      entry.holonomy_trace = holonomy_trace(p.holonomy, k);
      entry.count = p.count;
      out.push_back(std::move(entry));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const OrbitPower& a, const OrbitPower& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.prime_index != b.prime_index) return a.prime_index < b.prime_index;
    return a.k < b.k;
  });
  return out;
}

}  // namespace dzw
