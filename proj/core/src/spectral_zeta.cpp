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

#include "dzw/spectral_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "dzw/errors.hpp"
#include "dzw/summation.hpp"

namespace dzw {
namespace {

constexpr double kExponentTol = 1e-12;

bool on_cut(Complex z) { return z.imag() == 0.0 && z.real() <= 0.0; }

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// sum_{n in Z} e^{-c (n+a)^2 t} by Poisson summation.
double two_sided_theta(double a, double c, double t) {
  const double x = c * t;
  CompensatedSum sum;
  sum.add(1.0);
  for (int k = 1;; ++k) {
    const double term = 2.0 * std::exp(-kPi * kPi * k * k / x) * std::cos(2.0 * kPi * k * a);
    sum.add(term);
    if (std::exp(-kPi * kPi * k * k / x) < 1e-18) break;
  }
  return std::sqrt(kPi / x) * sum.value();
}

double direct_family_heat(const HurwitzFamily& f, double t) {
  CompensatedSum sum;
  for (long n = 0;; ++n) {
    const double base = n + f.offset;
    const double lambda = f.scale * (f.power == 2 ? base * base : base);
    const double term = std::exp(-lambda * t);
    sum.add(term);
    if (term < 1e-18 * sum.value() && lambda * t > 1.0) break;
  }
  return f.multiplicity * sum.value();
}

}  // namespace

SpectrumModel::SpectrumModel(std::vector<ExplicitEigenvalue> explicit_part,
                             std::vector<HurwitzFamily> families)
    : explicit_(std::move(explicit_part)), families_(std::move(families)) {
  for (const ExplicitEigenvalue& e : explicit_) {
    if (!(e.value > 0.0) || !std::isfinite(e.value)) {
      throw Error(ErrorCode::kZeroMode,
                  fmt::format("eigenvalue {} is not strictly positive", e.value));
    }
    if (e.multiplicity < 1) throw Error(ErrorCode::kInvariantError, "multiplicity must be >= 1");
  }
  for (const HurwitzFamily& f : families_) {
    if (!(f.offset > 0.0)) {
      throw Error(ErrorCode::kZeroMode,
                  fmt::format("family offset {} must be > 0 (zero mode)", f.offset));
    }
    if (!(f.scale > 0.0)) throw Error(ErrorCode::kInvariantError, "family scale must be > 0");
    if (f.multiplicity < 1) throw Error(ErrorCode::kInvariantError, "multiplicity must be >= 1");
    if (f.power != 1 && f.power != 2) {
      throw Error(ErrorCode::kUnsupportedModel, "family power must be 1 or 2");
    }
  }
}

double SpectrumModel::smallest_eigenvalue() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (const ExplicitEigenvalue& e : explicit_) m = std::min(m, e.value);
  for (const HurwitzFamily& f : families_) m = std::min(m, f.scale * std::pow(f.offset, f.power));
  return m;
}

SpectrumModel SpectrumModel::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(ErrorCode::kInvalidArgument, "scale factor must be > 0");
  SpectrumModel out = *this;
  for (ExplicitEigenvalue& e : out.explicit_) e.value *= factor;
  for (HurwitzFamily& f : out.families_) f.scale *= factor;
  return out;
}

SpectrumModel SpectrumModel::with_finite_rank_change(std::size_t family_index, int drop_leading,
                                                     std::vector<ExplicitEigenvalue> added) const {
  if (family_index >= families_.size() || drop_leading < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "no such family for finite-rank change");
  }
  std::vector<ExplicitEigenvalue> ex = explicit_;
  ex.insert(ex.end(), added.begin(), added.end());
  std::vector<HurwitzFamily> fam = families_;
  fam[family_index].offset += drop_leading;
  return SpectrumModel(std::move(ex), std::move(fam));
}

Complex spectral_zeta(const SpectrumModel& m, Complex s) {
  CompensatedComplexSum sum;
  for (const ExplicitEigenvalue& e : m.explicit_part()) {
    sum.add(static_cast<double>(e.multiplicity) * std::exp(-s * std::log(e.value)));
  }
  for (const HurwitzFamily& f : m.families()) {
    const Complex arg = static_cast<double>(f.power) * s;
    if (std::abs(arg - 1.0) < 1e-12) {
      throw Error(ErrorCode::kPoleHit,
                  fmt::format("spectral zeta pole at s = {}", 1.0 / f.power));
    }
    sum.add(static_cast<double>(f.multiplicity) * std::exp(-s * std::log(f.scale)) *
            hurwitz_zeta(arg, f.offset));
  }
  return sum.value();
}

double spectral_zeta_at_zero(const SpectrumModel& m) {
  CompensatedSum sum;
  for (const ExplicitEigenvalue& e : m.explicit_part()) sum.add(e.multiplicity);
  for (const HurwitzFamily& f : m.families()) sum.add(f.multiplicity * (0.5 - f.offset));
  return sum.value();
}

LogDet reg_det(const SpectrumModel& m, Complex shift) {
  const double half_log_2pi = 0.5 * std::log(2.0 * kPi);
  CompensatedComplexSum log_det;
  for (const ExplicitEigenvalue& e : m.explicit_part()) {
    const Complex z = e.value + shift;
    if (on_cut(z)) {
      throw Error(ErrorCode::kBranchCut,
                  fmt::format("shifted eigenvalue {} lies on (-inf, 0]", z.real()));
    }
    log_det.add(static_cast<double>(e.multiplicity) * std::log(z));
  }
  for (const HurwitzFamily& f : m.families()) {
    const double mu = f.multiplicity;
    const double log_c = std::log(f.scale);
    if (f.power == 1) {
      // c(n+a) + z = c(n+b), b = a + z/c.
      const Complex b = f.offset + shift / f.scale;
      if (on_cut(b)) throw Error(ErrorCode::kBranchCut, "shifted linear family crosses 0");
      log_det.add(mu * ((0.5 - b) * log_c - log_gamma(b) + half_log_2pi));
    } else {
      // c(n+a)^2 + z = c(n + a + i w)(n + a - i w), w = sqrt(z/c); the
      // split into two linear families carries no multiplicative anomaly.
      if (shift.imag() == 0.0 && shift.real() <= -f.scale * f.offset * f.offset) {
        throw Error(ErrorCode::kBranchCut, "shifted quadratic family crosses 0");
      }
      const Complex w = std::sqrt(shift / f.scale);
      const Complex i{0.0, 1.0};
      const Complex bp = f.offset + i * w;
      const Complex bm = f.offset - i * w;
      log_det.add(mu * ((0.5 - f.offset) * log_c + 2.0 * half_log_2pi - log_gamma(bp) -
                        log_gamma(bm)));
    }
  }
  const Complex log = log_det.value();
  return LogDet{log, std::exp(log)};
}

double heat_trace(const SpectrumModel& m, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::kInvalidArgument, "heat trace needs t > 0");
  CompensatedSum sum;
  for (const ExplicitEigenvalue& e : m.explicit_part()) sum.add(e.multiplicity * std::exp(-e.value * t));

  const auto& fams = m.families();
  std::vector<bool> done(fams.size(), false);
  for (std::size_t i = 0; i < fams.size(); ++i) {
    if (done[i]) continue;
    const HurwitzFamily& f = fams[i];
    if (f.power == 1) {
      sum.add(f.multiplicity * std::exp(-f.scale * f.offset * t) / -std::expm1(-f.scale * t));
      done[i] = true;
      continue;
    }
    const bool small_t = f.scale * t < 1.0;
    if (small_t && (f.offset == 0.5 || f.offset == 1.0)) {
      // Symmetric families are half of a two-sided theta sum.
      const double theta = two_sided_theta(f.offset, f.scale, t);
      sum.add(f.multiplicity * 0.5 * (f.offset == 1.0 ? theta - 1.0 : theta));
      done[i] = true;
      continue;
    }
    if (small_t) {
      // Reflection partner a' = 1 - a completes the two-sided sum.
      for (std::size_t j = i + 1; j < fams.size(); ++j) {
        const HurwitzFamily& g = fams[j];
        if (!done[j] && g.power == 2 && g.scale == f.scale &&
            g.multiplicity == f.multiplicity && std::abs(f.offset + g.offset - 1.0) < 1e-15) {
          sum.add(f.multiplicity * two_sided_theta(f.offset, f.scale, t));
          done[i] = done[j] = true;
          break;
        }
      }
      if (done[i]) continue;
    }
    sum.add(direct_family_heat(f, t));
    done[i] = true;
  }
  return sum.value();
}

HeatExpansion::HeatExpansion(std::vector<HeatTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const HeatTerm& a, const HeatTerm& b) { return a.exponent < b.exponent; });
  for (const HeatTerm& t : terms) {
    if (!terms_.empty() && std::abs(terms_.back().exponent - t.exponent) < kExponentTol) {
      terms_.back().coefficient += t.coefficient;
    } else {
      terms_.push_back(t);
    }
  }
}

double HeatExpansion::coefficient(double exponent) const noexcept {
  for (const HeatTerm& t : terms_) {
    if (std::abs(t.exponent - exponent) < kExponentTol) return t.coefficient;
  }
  return 0.0;
}

double HeatExpansion::evaluate(double t, double max_exponent) const noexcept {
  double sum = 0.0;
  for (const HeatTerm& term : terms_) {
    if (term.exponent <= max_exponent + kExponentTol) sum += term.coefficient * std::pow(t, term.exponent);
  }
  return sum;
}

HeatExpansion heat_expansion(const SpectrumModel& m, int max_order) {
  if (max_order < 0) throw Error(ErrorCode::kInvalidArgument, "max_order must be >= 0");
  std::vector<HeatTerm> terms;
  // Finite parts are entire in t: sum mult e^{-lambda t} = sum_k (-lambda t)^k / k!.
  for (const ExplicitEigenvalue& e : m.explicit_part()) {
    for (int k = 0; k <= max_order; ++k) {
      terms.push_back({static_cast<double>(k),
                       e.multiplicity * std::pow(-e.value, k) / factorial(k)});
    }
  }
  for (const HurwitzFamily& f : m.families()) {
    const double mu = f.multiplicity;
    if (f.power == 2) {
      terms.push_back({-0.5, mu * std::sqrt(kPi) / (2.0 * std::sqrt(f.scale))});
    } else {
      terms.push_back({-1.0, mu / f.scale});
    }
    terms.push_back({0.0, mu * (0.5 - f.offset)});
    for (int k = 1; k <= max_order; ++k) {
      const double zeta = hurwitz_zeta_nonpositive(f.power * k, f.offset);
      terms.push_back({static_cast<double>(k), mu * std::pow(-f.scale, k) / factorial(k) * zeta});
    }
  }
  return HeatExpansion(std::move(terms));
}

Complex logdet_asymptotic(const HeatExpansion& h, double s, Branch branch,
                          ConstantTermConvention convention) {
  if (!(s > 0.0)) throw Error(ErrorCode::kInvalidArgument, "asymptotic evaluation needs s > 0");
  const double pm = branch == Branch::kPlus ? 1.0 : -1.0;
  const Complex i{0.0, 1.0};
  const double log_s = std::log(s);
  CompensatedComplexSum sum;
  for (const HeatTerm& term : h.terms()) {
    const double alpha = term.exponent;
    const double c = term.coefficient;
    const double rounded = std::round(alpha);
    const bool integral = std::abs(alpha - rounded) < kExponentTol;
    if (integral && rounded == 0.0) {
      if (convention == ConstantTermConvention::kDisplayed) {
        sum.add(c * (kEulerGamma + log_s + pm * i * (kPi / 2.0)));
      } else {
        sum.add(-c * (log_s + pm * i * (kPi / 2.0)));
      }
    } else if (integral && rounded < 0.0) {
      const int k = static_cast<int>(-rounded);
      double harmonic = 0.0;
      for (int j = 1; j <= k; ++j) harmonic += 1.0 / j;
      const Complex unit = integer_power(-pm * i, k);  // (-+i)^k
      sum.add(c * unit / factorial(k) * (harmonic - log_s - pm * i * (kPi / 2.0)) *
              std::pow(s, k));
    } else {
      // (+-i)^{-alpha} = e^{-+ i pi alpha / 2}
      const Complex unit = std::polar(1.0, -pm * kPi * alpha / 2.0);
      sum.add(c * unit * std::tgamma(alpha) * std::pow(s, -alpha));
    }
  }
  return sum.value();
}

DetTypeFit det_type_fit(std::span<const DetSample> samples, const SpectrumModel& m,
                        int max_degree, double threshold) {
  const Eigen::Index n = static_cast<Eigen::Index>(samples.size());
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    rhs(j) = samples[j].log_f - reg_det(m, samples[j].s).log;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int deg = 0; deg <= max_degree && n >= deg + 2; ++deg) {
    Eigen::MatrixXcd v(n, deg + 1);
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex power{1.0, 0.0};
      for (int p = 0; p <= deg; ++p) {
        v(j, p) = power;
        power *= samples[j].s;
      }
    }
    const Eigen::VectorXcd coeffs = v.colPivHouseholderQr().solve(rhs);
    const double residual = (v * coeffs - rhs).cwiseAbs().maxCoeff();
    best = std::min(best, residual);
    if (residual <= threshold) {
      return DetTypeFit{Polynomial(std::vector<Complex>(coeffs.data(), coeffs.data() + coeffs.size())),
                        residual};
    }
  }
  throw Error(ErrorCode::kFitFailure,
              fmt::format("no polynomial of degree <= {} fits below {:.1e} (best residual {:.3e})",
                          max_degree, threshold, best));
}

}  // namespace dzw
