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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dzw/orbit_model.hpp"

namespace dzw {

struct SftEdge {
  int from = 0;
  int to = 0;
  double weight = 1.0;  // roof time
  HolonomyRep holonomy = HolonomyRep::trivial();
  std::optional<double> expansion;  // unstable stretch factor, > 1

  friend bool operator==(const SftEdge&, const SftEdge&) = default;
};

/// Suspension flow over the edge shift of a finite labeled digraph.
/// Vertices are numbered 0 .. vertices-1; edge order defines the alphabet
/// order used for canonical cycle words.
class SftSystem {
 public:
  SftSystem(int vertices, std::vector<SftEdge> edges);

  int vertices() const noexcept { return vertices_; }
  std::span<const SftEdge> edges() const noexcept { return edges_; }
  int holonomy_dimension() const noexcept { return holonomy_dim_; }
  bool has_expansion() const noexcept { return has_expansion_; }
  bool scalar_holonomy() const noexcept { return holonomy_dim_ == 1; }
  double min_weight() const noexcept;

  /// Strong connectivity of the vertex graph restricted to vertices that
  /// carry at least one edge; systems without edges count as irreducible.
  bool is_irreducible() const;

  /// Edge-count adjacency A[to][from].
  std::vector<std::vector<std::uint64_t>> adjacency() const;

  friend bool operator==(const SftSystem&, const SftSystem&) = default;

 private:
  int vertices_ = 0;
  std::vector<SftEdge> edges_;
  int holonomy_dim_ = 1;
  bool has_expansion_ = false;
};

/// A primitive closed edge path rooted at its lexicographically least
/// rotation (a Lyndon word over the edge alphabet).
struct CycleWord {
  std::vector<int> edges;

  std::size_t word_length() const noexcept { return edges.size(); }
  friend bool operator==(const CycleWord&, const CycleWord&) = default;
};

/// All primitive cycles of word length 1 .. max_word_length, ordered by
/// length and then lexicographically.
std::vector<CycleWord> enumerate_prime_cycles(const SftSystem& sys, int max_word_length);

/// tr(A^n) in exact integer arithmetic.
std::uint64_t period_point_count(const SftSystem& sys, int n);

PrimeOrbit cycle_to_orbit(const SftSystem& sys, const CycleWord& word);

/// Catalog of all primes with word length <= max_word_length; complete for
/// lengths below (max_word_length + 1) * min_weight, with the exact
/// transfer-determinant model attached.
OrbitCatalog sft_catalog(const SftSystem& sys, int max_word_length);

/// Edge-indexed block matrix with U_e e^{-s w_e} in block (e', e) whenever
/// e.to == e'.from.
Eigen::MatrixXcd transfer_matrix(const SftSystem& sys, Complex s);

/// Vertex-indexed matrix sum_{e: u -> v} U_e e^{-s w_e}; scalar holonomy only.
Eigen::MatrixXcd vertex_transfer_matrix(const SftSystem& sys, Complex s);

/// det(I - B(s)).
Complex transfer_determinant(const SftSystem& sys, Complex s);

/// Abscissa of convergence: the sigma with spectral radius of the weighted
/// adjacency sum_e e^{-sigma w_e} equal to 1 (-inf without cycles).
double sft_abscissa(const SftSystem& sys);

/// Exact value of the orbit series sum_c ind_F(c) tr phi(c) e^{-s l(c)}:
/// -log det(I - B(s)) taken factor by factor over the eigenvalues of B(s),
/// which is the branch the series converges to. With expansion data every
/// orbit has ind_L = -1 and the sign flips.
Complex exact_orbit_sum(const SftSystem& sys, Complex s);

// Built-in systems used by tests, fixtures and the CLI.
SftSystem golden_mean_system();
SftSystem full_shift_system(int symbols);

}  // namespace dzw
