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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dzw/special_functions.hpp"

namespace dzw {

// Exact rational number with a positive, reduced denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator*(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Eigenvalues of the linear Poincare map restricted to the unstable and
/// stable bundles. Construction enforces hyperbolicity (|mu| > 1 on the
/// unstable side, |mu| < 1 on the stable side) and conjugate pairing.
class PoincareSpectrum {
 public:
  PoincareSpectrum() = default;
  PoincareSpectrum(std::vector<Complex> unstable, std::vector<Complex> stable);

  const std::vector<Complex>& unstable() const noexcept { return unstable_; }
  const std::vector<Complex>& stable() const noexcept { return stable_; }
  bool empty() const noexcept { return unstable_.empty() && stable_.empty(); }

  /// Spectrum of the k-th iterate.
  PoincareSpectrum power(int k) const;

  friend bool operator==(const PoincareSpectrum&, const PoincareSpectrum&) = default;

 private:
  std::vector<Complex> unstable_;
  std::vector<Complex> stable_;
};

/// Unitary holonomy of a flat bundle along a closed orbit, held either as a
/// matrix or as the sequence of traces tr(h^k), k >= 1.
class HolonomyRep {
 public:
  static HolonomyRep trivial(int dimension = 1);
  static HolonomyRep scalar(Complex u);
  static HolonomyRep matrix(Eigen::MatrixXcd m);
  static HolonomyRep traces(int dimension, std::map<int, Complex> values);

  int dimension() const noexcept { return dimension_; }
  bool is_matrix() const noexcept { return is_matrix_; }
  const Eigen::MatrixXcd& matrix_form() const;
  const std::map<int, Complex>& trace_form() const noexcept { return traces_; }

  /// Eigenvalues of the matrix form.
  std::vector<Complex> eigenvalues() const;

  /// Left product (*this) * rhs; both must be matrix form.
  HolonomyRep compose(const HolonomyRep& rhs) const;

  friend bool operator==(const HolonomyRep& a, const HolonomyRep& b);

 private:
  HolonomyRep() = default;

  int dimension_ = 0;
  bool is_matrix_ = false;
  Eigen::MatrixXcd matrix_;
  std::map<int, Complex> traces_;
};

struct PrimeOrbit {
  double prime_length = 0.0;
  PoincareSpectrum poincare;
  HolonomyRep holonomy = HolonomyRep::trivial();
  std::optional<HolonomyRep> bundle_holonomy;
  // Rotation part of the Poincare map for constant-curvature orbits.
  std::optional<std::vector<double>> rotation_angles;
  // Copies of this orbit in the length spectrum (duplicates merged).
  int count = 1;

  friend bool operator==(const PrimeOrbit&, const PrimeOrbit&) = default;
};

/// Closed-form value of the orbit series attached to a generated catalog.
class ExactOrbitZeta {
 public:
  virtual ~ExactOrbitZeta() = default;
  /// Value at s, on the branch continuous from Re(s) -> +inf factor by
  /// factor. Throws SingularFactor where a factor vanishes.
  virtual Complex evaluate(Complex s) const = 0;
  virtual std::string describe() const = 0;
};

class OrbitCatalog {
 public:
  static constexpr double kComplete = std::numeric_limits<double>::infinity();

  OrbitCatalog() = default;
  /// `complete_to`: every prime of length below it is present. kComplete
  /// means the list is the whole length spectrum.
  OrbitCatalog(int dimension, std::vector<PrimeOrbit> primes,
               double complete_to = kComplete);

  int dimension() const noexcept { return dimension_; }
  std::span<const PrimeOrbit> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  double complete_to() const noexcept { return complete_to_; }
  bool is_complete() const noexcept { return complete_to_ == kComplete; }

  const std::shared_ptr<const ExactOrbitZeta>& exact_model() const noexcept {
    return exact_;
  }
  OrbitCatalog with_exact_model(std::shared_ptr<const ExactOrbitZeta> model) const;

  /// Largest holonomy dimension over all primes.
  int max_holonomy_dimension() const noexcept;

  friend bool operator==(const OrbitCatalog& a, const OrbitCatalog& b);

 private:
  int dimension_ = 0;
  std::vector<PrimeOrbit> primes_;
  double complete_to_ = kComplete;
  std::shared_ptr<const ExactOrbitZeta> exact_;
};

/// One iterate c^k of a prime orbit, as produced by expand_powers.
struct OrbitPower {
  std::size_t prime_index = 0;
  int k = 1;
  double length = 0.0;
  int multiplicity = 1;
  int lefschetz = 1;
  Rational fuller_index;
  Complex holonomy_trace;
  int count = 1;
};

int lefschetz_index(const PoincareSpectrum& p);

Rational fuller_index(int lefschetz, int multiplicity);

/// tr(h^k); throws MissingTrace when a trace-sequence holonomy lacks k.
Complex holonomy_trace(const HolonomyRep& h, int k);

/// Complete homogeneous symmetric polynomials h_0 .. h_{max_degree}.
std::vector<Complex> sym_power_traces(std::span<const Complex> eigenvalues,
                                      int max_degree);
Complex sym_power_trace(std::span<const Complex> eigenvalues, int degree);

/// Elementary symmetric polynomials e_0 .. e_n of all n eigenvalues.
std::vector<Complex> ext_power_traces(std::span<const Complex> eigenvalues);
Complex ext_power_trace(std::span<const Complex> eigenvalues, int degree);

/// Geodesic-flow Poincare data on a curvature -1 manifold of odd dimension d.
PoincareSpectrum constant_curvature_poincare(double length,
                                             std::span<const double> rotation_angles,
                                             int d);

/// Rotation eigenvalues e^{+-i k theta_j} of the k-th iterate.
std::vector<Complex> rotation_eigenvalues(std::span<const double> rotation_angles,
                                          int k);

std::vector<OrbitPower> expand_powers(const OrbitCatalog& catalog, double max_length);

}  // namespace dzw
