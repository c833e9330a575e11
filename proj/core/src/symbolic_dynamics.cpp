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

#include "dzw/symbolic_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>

#include <fmt/format.h>

#include "dzw/errors.hpp"
#include "dzw/summation.hpp"

namespace dzw {
namespace {

constexpr double kSingularTol = 1e-12;

using IntMatrix = std::vector<std::vector<std::uint64_t>>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t prod = 0;
        if (__builtin_mul_overflow(a[i][k], b[k][j], &prod) ||
            __builtin_add_overflow(c[i][j], prod, &c[i][j])) {
          throw Error(ErrorCode::kInvalidArgument, "period point count overflows 64 bits");
        }
      }
    }
  }
  return c;
}

double spectral_radius(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXd weighted_adjacency(const SftSystem& sys, double sigma) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(sys.vertices(), sys.vertices());
  for (const SftEdge& e : sys.edges()) m(e.to, e.from) += std::exp(-sigma * e.weight);
  return m;
}

std::vector<Complex> transfer_eigenvalues(const SftSystem& sys, Complex s) {
  const Eigen::MatrixXcd b =
      sys.scalar_holonomy() ? vertex_transfer_matrix(sys, s) : transfer_matrix(sys, s);
  if (b.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(b, /*computeEigenvectors=*/false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// -sum_i log(1 - lambda_i(s)), each log principal.
Complex factorwise_log_sum(const SftSystem& sys, Complex s) {
  CompensatedComplexSum sum;
  for (const Complex& lambda : transfer_eigenvalues(sys, s)) {
    const Complex factor = 1.0 - lambda;
    if (std::abs(factor) < kSingularTol) {
      throw Error(ErrorCode::kSingularFactor,
                  fmt::format("det(I - B(s)) vanishes at s = ({}, {})", s.real(), s.imag()));
    }
    sum.add(-std::log(factor));
  }
  const Complex value = sum.value();
  return sys.has_expansion() ? -value : value;
}

class SftExactZeta final : public ExactOrbitZeta {
 public:
  explicit SftExactZeta(SftSystem sys) : sys_(std::move(sys)) {}
  Complex evaluate(Complex s) const override { return factorwise_log_sum(sys_, s); }
  std::string describe() const override {
    return fmt::format("SFT transfer determinant ({} vertices, {} edges)", sys_.vertices(),
                       sys_.edges().size());
  }

 private:
  SftSystem sys_;
};

}  // namespace

SftSystem::SftSystem(int vertices, std::vector<SftEdge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  if (vertices < 1) throw Error(ErrorCode::kInvalidArgument, "SFT needs at least one vertex");
  std::size_t with_expansion = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const SftEdge& e = edges_[i];
    if (e.from < 0 || e.from >= vertices || e.to < 0 || e.to >= vertices) {
      throw Error(ErrorCode::kInvariantError, fmt::format("edge {} has endpoint out of range", i));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorCode::kInvariantError, fmt::format("edge {} weight must be > 0", i));
    }
    if (i > 0 && e.holonomy.dimension() != edges_[0].holonomy.dimension()) {
      throw Error(ErrorCode::kBadDimension, "all edge holonomies must share one dimension");
    }
    if (!e.holonomy.is_matrix()) {
      throw Error(ErrorCode::kUnsupportedModel, "edge holonomies must be matrices");
    }
    if (e.expansion) {
      if (!(*e.expansion > 1.0)) {
        throw Error(ErrorCode::kInvariantError,
                    fmt::format("edge {} expansion must exceed 1", i));
      }
      ++with_expansion;
    }
  }
  if (with_expansion != 0 && with_expansion != edges_.size()) {
    throw Error(ErrorCode::kInvariantError,
                "expansion factors must be given on all edges or on none");
  }
  holonomy_dim_ = edges_.empty() ? 1 : edges_[0].holonomy.dimension();
  has_expansion_ = with_expansion != 0;
}

double SftSystem::min_weight() const noexcept {
  double w = std::numeric_limits<double>::infinity();
  for (const SftEdge& e : edges_) w = std::min(w, e.weight);
  return w;
}

bool SftSystem::is_irreducible() const {
  if (edges_.empty()) return true;
  std::vector<bool> active(vertices_, false);
  std::vector<std::vector<int>> fwd(vertices_), bwd(vertices_);
  for (const SftEdge& e : edges_) {
    active[e.from] = active[e.to] = true;
    fwd[e.from].push_back(e.to);
    bwd[e.to].push_back(e.from);
  }
  const int root = static_cast<int>(std::find(active.begin(), active.end(), true) - active.begin());
  auto reach = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(vertices_, false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  };
  const auto f = reach(fwd);
  const auto b = reach(bwd);
  for (int v = 0; v < vertices_; ++v) {
    if (active[v] && !(f[v] && b[v])) return false;
  }
  return true;
}

std::vector<std::vector<std::uint64_t>> SftSystem::adjacency() const {
  IntMatrix a(vertices_, std::vector<std::uint64_t>(vertices_, 0));
  for (const SftEdge& e : edges_) a[e.to][e.from] += 1;
  return a;
}

std::vector<CycleWord> enumerate_prime_cycles(const SftSystem& sys, int max_word_length) {
  if (max_word_length < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_word_length must be >= 1");
  }
  const auto edges = sys.edges();
  const int alphabet = static_cast<int>(edges.size());
  std::vector<CycleWord> out;
  if (alphabet == 0) return out;

  auto composable = [&](int first, int second) { return edges[first].to == edges[second].from; };

  // Fredricksen-Kessler-Maiorana generation of Lyndon words of length n in
  // lexicographic order. Prefixes that are not edge paths are pruned: no
  // word below them can be a closed path.
  std::vector<int> a;
  int n = 0;
  std::function<void(int, int)> generate = [&](int t, int p) {
    if (t > n) {
      if (p == n && edges[a[n]].to == edges[a[1]].from) {
        out.push_back(CycleWord{std::vector<int>(a.begin() + 1, a.begin() + n + 1)});
      }
      return;
    }
    a[t] = a[t - p];
    if (t == 1 || composable(a[t - 1], a[t])) generate(t + 1, p);
    for (int j = a[t - p] + 1; j < alphabet; ++j) {
      a[t] = j;
      if (t == 1 || composable(a[t - 1], a[t])) generate(t + 1, t);
    }
  };
  for (n = 1; n <= max_word_length; ++n) {
    a.assign(static_cast<std::size_t>(n) + 1, 0);
    generate(1, 1);
  }
  return out;
}

std::uint64_t period_point_count(const SftSystem& sys, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  const IntMatrix a = sys.adjacency();
  IntMatrix result(a.size(), std::vector<std::uint64_t>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) result[i][i] = 1;
  IntMatrix base = a;
  int k = n;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  std::uint64_t trace = 0;
  for (std::size_t i = 0; i < a.size(); ++i) trace += result[i][i];
  return trace;
}

PrimeOrbit cycle_to_orbit(const SftSystem& sys, const CycleWord& word) {
  const auto edges = sys.edges();
  if (word.edges.empty()) throw Error(ErrorCode::kInvalidArgument, "empty cycle word");
  for (std::size_t i = 0; i < word.edges.size(); ++i) {
    const int e = word.edges[i];
    const int next = word.edges[(i + 1) % word.edges.size()];
    if (e < 0 || e >= static_cast<int>(edges.size()) || next < 0 ||
        next >= static_cast<int>(edges.size()) || edges[e].to != edges[next].from) {
      throw Error(ErrorCode::kInvalidArgument, "cycle word is not a closed path");
    }
  }
  CompensatedSum length;
  double stretch = 1.0;
  // Later edges act on the left: hol = U_{e_n} ... U_{e_1}.
  HolonomyRep hol = edges[word.edges[0]].holonomy;
  for (std::size_t i = 0; i < word.edges.size(); ++i) {
    const SftEdge& e = edges[word.edges[i]];
    length.add(e.weight);
    if (e.expansion) stretch *= *e.expansion;
    if (i > 0) hol = e.holonomy.compose(hol);
  }
  PrimeOrbit orbit;
  orbit.prime_length = length.value();
  orbit.holonomy = std::move(hol);
  if (sys.has_expansion()) orbit.poincare = PoincareSpectrum({Complex{stretch, 0.0}}, {});
  return orbit;
}

OrbitCatalog sft_catalog(const SftSystem& sys, int max_word_length) {
  std::vector<PrimeOrbit> primes;
  for (const CycleWord& w : enumerate_prime_cycles(sys, max_word_length)) {
    primes.push_back(cycle_to_orbit(sys, w));
  }
  const double complete_to =
      sys.edges().empty() ? OrbitCatalog::kComplete : (max_word_length + 1) * sys.min_weight();
  return OrbitCatalog(0, std::move(primes), complete_to)
      .with_exact_model(std::make_shared<SftExactZeta>(sys));
}

Eigen::MatrixXcd transfer_matrix(const SftSystem& sys, Complex s) {
  const auto edges = sys.edges();
  const Eigen::Index dim = sys.holonomy_dimension();
  const Eigen::Index n = static_cast<Eigen::Index>(edges.size()) * dim;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Eigen::MatrixXcd block = edges[e].holonomy.matrix_form() * std::exp(-s * edges[e].weight);
    for (std::size_t f = 0; f < edges.size(); ++f) {
      if (edges[e].to != edges[f].from) continue;
      b.block(static_cast<Eigen::Index>(f) * dim, static_cast<Eigen::Index>(e) * dim, dim, dim) =
          block;
    }
  }
  return b;
}

Eigen::MatrixXcd vertex_transfer_matrix(const SftSystem& sys, Complex s) {
  if (!sys.scalar_holonomy()) {
    throw Error(ErrorCode::kUnsupportedModel, "vertex transfer matrix needs scalar holonomy");
  }
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(sys.vertices(), sys.vertices());
  for (const SftEdge& e : sys.edges()) {
    b(e.to, e.from) += e.holonomy.matrix_form()(0, 0) * std::exp(-s * e.weight);
  }
  return b;
}

Complex transfer_determinant(const SftSystem& sys, Complex s) {
  if (sys.edges().empty()) return {1.0, 0.0};
  const Eigen::MatrixXcd b =
      sys.scalar_holonomy() ? vertex_transfer_matrix(sys, s) : transfer_matrix(sys, s);
  const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(b.rows(), b.cols()) - b;
  return m.partialPivLu().determinant();
}

double sft_abscissa(const SftSystem& sys) {
  auto rho = [&](double sigma) { return spectral_radius(weighted_adjacency(sys, sigma)); };
  if (sys.edges().empty() || rho(0.0) < 1e-14) {
    return -std::numeric_limits<double>::infinity();
  }
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
  if (rho(0.0) > 1.0) {
    while (rho(hi) > 1.0) {
      lo = hi;
      hi += step;
      step *= 2.0;
    }
  } else {
    while (rho(lo) <= 1.0) {
      hi = lo;
      lo -= step;
      step *= 2.0;
    }
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (rho(mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Complex exact_orbit_sum(const SftSystem& sys, Complex s) {
  if (sys.edges().empty()) return {0.0, 0.0};
  if (!sys.is_irreducible()) {
    throw Error(ErrorCode::kInvariantError, "oracle requires an irreducible graph");
  }
  const double abscissa = sft_abscissa(sys);
  if (!(s.real() > abscissa)) {
    throw Error(ErrorCode::kConvergenceDomain,
                fmt::format("Re(s) = {} is not above the abscissa {}", s.real(), abscissa));
  }
  return factorwise_log_sum(sys, s);
}

namespace {

SftEdge plain_edge(int from, int to) {
  SftEdge e;
  e.from = from;
  e.to = to;
  return e;
}

}  // namespace

SftSystem golden_mean_system() {
  return SftSystem(2, {plain_edge(0, 0), plain_edge(0, 1), plain_edge(1, 0)});
}

SftSystem full_shift_system(int symbols) {
  if (symbols < 1) throw Error(ErrorCode::kInvalidArgument, "full shift needs >= 1 symbol");
  std::vector<SftEdge> edges(static_cast<std::size_t>(symbols), plain_edge(0, 0));
  return SftSystem(1, std::move(edges));
}

}  // namespace dzw
