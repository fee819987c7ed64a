// Copyright 2026 The phaseret Authors.
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

#include "phaseret/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "phaseret/errors.hpp"

namespace phaseret {
namespace {

constexpr double kPi = std::numbers::pi;

void check_gaussian_triple(const MeasurementRecord& rec1, const MeasurementRecord& rec2,
                           const MeasurementRecord& rec3) {
  if (!std::holds_alternative<mask::Gauss>(rec1.mask()) ||
      !std::holds_alternative<mask::GaussDeriv>(rec2.mask()) ||
      !std::holds_alternative<mask::GaussAffine>(rec3.mask())) {
    throw InvalidArgument("expected records for masks (gauss, gauss_deriv, gauss_affine), got (" +
                          mask_tag(rec1.mask()) + ", " + mask_tag(rec2.mask()) + ", " +
                          mask_tag(rec3.mask()) + ")");
  }
  if (!rec1.grid().compatible_with(rec2.grid()) || !rec1.grid().compatible_with(rec3.grid())) {
    throw InvalidArgument("records live on different grids");
  }
}

std::vector<double> central_difference(const std::vector<double>& s, double step) {
  const std::size_t n = s.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  if (n == 2) {
    d[0] = d[1] = (s[1] - s[0]) / step;
    return d;
  }
  for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (s[j + 1] - s[j - 1]) / (2.0 * step);
  d[0] = (-3.0 * s[0] + 4.0 * s[1] - s[2]) / (2.0 * step);
  d[n - 1] = (3.0 * s[n - 1] - 4.0 * s[n - 2] + s[n - 3]) / (2.0 * step);
  return d;
}

// sum of |z|^2 over a range, used for relative misfits
double misfit(const GridSignal& psi, Complex c, const GridSignal& ref) {
  double acc = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) acc += std::norm(psi[k] - c * ref[k]);
  return std::sqrt(acc * psi.grid().spacing());
}

Complex unit_phase(Complex z) {
  const double a = std::abs(z);
  if (a == 0.0) return Complex(1.0, 0.0);
  return z / a;
}

}  // namespace

std::string to_string(EquivalenceKind kind) {
  switch (kind) {
    case EquivalenceKind::kGlobalPhase:
      return "GlobalPhase";
    case EquivalenceKind::kConjugateReflection:
      return "ConjugateReflection";
    case EquivalenceKind::kDistinct:
      return "Distinct";
  }
  return "Distinct";
}

EquivalenceKind equivalence_kind_from_string(const std::string& name) {
  if (name == "GlobalPhase") return EquivalenceKind::kGlobalPhase;
  if (name == "ConjugateReflection") return EquivalenceKind::kConjugateReflection;
  if (name == "Distinct") return EquivalenceKind::kDistinct;
  throw InvalidArgument("unknown verdict kind '" + name + "'");
}

std::vector<Complex> recover_fprime_fbar(const MeasurementRecord& rec1,
                                         const MeasurementRecord& rec2,
                                         const MeasurementRecord& rec3, DerivativeScheme scheme) {
  check_gaussian_triple(rec1, rec2, rec3);
  const std::size_t n = rec1.size();
  const auto& r1 = rec1.magnitudes();
  const auto& r2 = rec2.magnitudes();
  const auto& r3 = rec3.magnitudes();

  std::vector<double> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = r1[j] * r1[j];
  const double step = rec1.frequency_grid().spacing();

  std::vector<double> ds;
  if (scheme == DerivativeScheme::kSpectral) {
    ds = detail::periodic_derivative(s);
    for (double& v : ds) v /= step;
  } else {
    ds = central_difference(s, step);
  }

  // The magnitudes carry absolute rounding errors of order eps * peak, so
  // differences below that level are noise and are set to zero.
  const double peak = std::max({rec1.max_magnitude(), rec2.max_magnitude(), rec3.max_magnitude()});
  const double noise = 4.0 * std::numeric_limits<double>::epsilon() * peak;
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double im = 0.5 * (r3[j] * r3[j] - s[j] - r2[j] * r2[j]);
    if (std::abs(im) <= noise * (r1[j] + r2[j] + r3[j])) im = 0.0;
    out[j] = Complex(0.5 * ds[j], im);
  }
  return out;
}

Spectrum integrate_phase(const std::vector<Complex>& fprime_fbar, const MeasurementRecord& rec1,
                         const PhaseIntegrationOptions& options) {
  const std::size_t n = rec1.size();
  if (fprime_fbar.size() != n) {
    throw InvalidArgument("fprime_fbar has " + std::to_string(fprime_fbar.size()) +
                          " samples, record has " + std::to_string(n));
  }
  if (!(options.zero_tol > 0.0)) throw InvalidArgument("zero_tol must be positive");
  const std::size_t up = options.upsample;
  if (up < 2 || up % 2 != 0) throw InvalidArgument("upsample factor must be even and >= 2");

  const auto& r1 = rec1.magnitudes();
  const double peak = rec1.max_magnitude();
  const double threshold = options.zero_tol * peak;

  // longest run strictly above threshold
  std::size_t best_begin = 0;
  std::size_t best_len = 0;
  for (std::size_t j = 0; j < n;) {
    if (!(r1[j] > threshold) || peak == 0.0) {
      ++j;
      continue;
    }
    std::size_t k = j;
    while (k < n && r1[k] > threshold) ++k;
    if (k - j > best_len) {
      best_len = k - j;
      best_begin = j;
    }
    j = k;
  }
  if (best_len == 0) throw DegenerateSignal("record 1 vanishes: no frequency carries phase");

  Spectrum out{rec1.frequency_grid(), {}, {}, best_begin, best_begin + best_len - 1};
  out.F.assign(n, Complex(0.0, 0.0));
  out.Fprime.assign(n, Complex(0.0, 0.0));

  std::vector<double> s(n);
  std::vector<double> im(n);
  double s_max = 0.0;
  double fpf_max = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    s[j] = r1[j] * r1[j];
    im[j] = fprime_fbar[j].imag();
    s_max = std::max(s_max, s[j]);
    fpf_max = std::max(fpf_max, std::abs(fprime_fbar[j]));
  }
  // Tikhonov floor for the quotient Im / S; well below any sample retained
  // by the threshold but keeps the refined tails finite.
  const double lambda = 10.0 * std::numeric_limits<double>::epsilon() * (s_max + fpf_max);
  const double lambda2 = lambda * lambda;
  auto quotient = [lambda2](double num, double den) { return num * den / (den * den + lambda2); };

  const std::vector<double> s_fine = detail::upsample_periodic(s, up);
  const std::vector<double> im_fine = detail::upsample_periodic(im, up);
  const double fine_step = out.grid.spacing() / static_cast<double>(up);

  std::vector<double> theta(n, 0.0);
  for (std::size_t j = out.interval_begin; j < out.interval_end; ++j) {
    // composite Simpson over the up fine intervals between coarse j and j+1
    double acc = 0.0;
    const std::size_t base = j * up;
    for (std::size_t i = 0; i < up; i += 2) {
      const double f0 = quotient(im_fine[base + i], s_fine[base + i]);
      const double f1 = quotient(im_fine[base + i + 1], s_fine[base + i + 1]);
      const double f2 = quotient(im_fine[base + i + 2], s_fine[base + i + 2]);
      acc += f0 + 4.0 * f1 + f2;
    }
    theta[j + 1] = theta[j] + acc * fine_step / 3.0;
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (out.extrapolated(j)) {
      out.F[j] = Complex(r1[j], 0.0);
      continue;
    }
    out.F[j] = std::polar(r1[j], theta[j]);
    out.Fprime[j] = fprime_fbar[j] * out.F[j] * (s[j] / (s[j] * s[j] + lambda2));
  }
  return out;
}

GridSignal reconstruct_three(const MeasurementRecord& rec1, const MeasurementRecord& rec2,
                             const MeasurementRecord& rec3, const ReconstructOptions& options) {
  const std::vector<Complex> fpf = recover_fprime_fbar(rec1, rec2, rec3, options.derivative);
  const Spectrum spectrum = integrate_phase(fpf, rec1, options.phase);
  const GridSignal masked = inverse_fourier(GridSignal(spectrum.grid, spectrum.F));
  const Grid& time = masked.grid();
  const std::size_t n = time.size();

  std::vector<double> gamma(n);
  double noise = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = time.point(k);
    gamma[k] = std::exp(-kPi * t * t);
    if (gamma[k] < options.mask_floor) noise = std::max(noise, std::abs(masked[k]));
  }
  const double gate = options.noise_factor * noise;

  std::vector<Complex> phi(n, Complex(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    if (gamma[k] < options.mask_floor) continue;
    if (options.noise_factor > 0.0 && !(std::abs(masked[k]) > gate)) continue;
    phi[k] = masked[k] / gamma[k];
  }
  return GridSignal(time, std::move(phi));
}

GridSignal reconstruct_three(const RecordTriple& records, const ReconstructOptions& options) {
  return reconstruct_three(records[0], records[1], records[2], options);
}

EquivalenceVerdict classify_pair(const GridSignal& phi, const GridSignal& psi, double tol) {
  if (!phi.grid().compatible_with(psi.grid())) throw InvalidArgument("signals on different grids");
  if (!(tol >= 0.0)) throw InvalidArgument("tolerance must be nonnegative");
  const double phi_norm = phi.norm();
  if (phi_norm == 0.0) {
    if (psi.norm() == 0.0) return {EquivalenceKind::kGlobalPhase, Complex(1.0, 0.0), 0.0};
    return {EquivalenceKind::kDistinct, Complex(1.0, 0.0), 1.0};
  }
  const GridSignal phi_star = conjugate_reflection(phi);
  const Complex c1 = unit_phase(inner_product(phi, psi));
  const Complex c2 = unit_phase(inner_product(phi_star, psi));
  const double r1 = misfit(psi, c1, phi) / phi_norm;
  const double r2 = misfit(psi, c2, phi_star) / phi_norm;
  if (r1 <= tol) return {EquivalenceKind::kGlobalPhase, c1, r1};
  if (r2 <= tol) return {EquivalenceKind::kConjugateReflection, c2, r2};
  if (r1 <= r2) return {EquivalenceKind::kDistinct, c1, r1};
  return {EquivalenceKind::kDistinct, c2, r2};
}

double aligned_relative_error(const GridSignal& reference, const GridSignal& estimate) {
  if (!reference.grid().compatible_with(estimate.grid())) {
    throw InvalidArgument("signals on different grids");
  }
  const double ref_norm = reference.norm();
  if (ref_norm == 0.0) return estimate.norm() == 0.0 ? 0.0 : 1.0;
  const Complex c = unit_phase(inner_product(reference, estimate));
  return misfit(estimate, c, reference) / ref_norm;
}

SineCounterexample sine_rational_counterexample(const GridSignal& phi, const Rational& a,
                                                std::int64_t p, std::int64_t q, ShiftMode mode) {
  if (q == 0) throw InvalidArgument("q must be nonzero");
  if (a.num <= 0) throw InvalidArgument("a must be positive");
  const Rational ratio = Rational::make(p, q);
  if (ratio.num <= 0) throw InvalidArgument("p/q must be positive so that b > 0");
  const Rational b = ratio * a;
  const Rational beta = Rational::make(q, 1) / a;
  const double bv = beta.value();

  const Grid& grid = phi.grid();
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  std::vector<Complex> shifted(n, Complex(0.0, 0.0));

  if (mode == ShiftMode::kGridMultiple) {
    const double steps = bv / h;
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, std::abs(steps))) {
      throw InvalidArgument("shift beta = " + beta.to_string() +
                            " is not a multiple of the grid spacing");
    }
    const auto s = static_cast<std::int64_t>(rounded);
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t src = static_cast<std::int64_t>(k) + s;
      if (src >= 0 && src < static_cast<std::int64_t>(n)) shifted[k] = phi[src];
    }
  } else {
    GridSignal spec = fourier(phi);
    const Grid& fgrid = spec.grid();
    for (std::size_t j = 0; j < n; ++j) {
      spec.mutable_values()[j] *= std::exp(Complex(0.0, 2.0 * kPi * bv * fgrid.point(j)));
    }
    shifted = inverse_fourier(spec).values();
    // keep only the translated support of phi
    std::size_t lo = n;
    std::size_t hi = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (phi[k] != Complex(0.0, 0.0)) {
        lo = std::min(lo, k);
        hi = k;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double src = grid.point(k) + bv;
      const bool inside = lo <= hi && src >= grid.point(lo) - h && src <= grid.point(hi) + h;
      if (!inside) shifted[k] = Complex(0.0, 0.0);
    }
  }

  std::vector<Complex> psi(n, Complex(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    if (shifted[k] == Complex(0.0, 0.0)) continue;
    const double t = grid.point(k);
    psi[k] = std::exp(-2.0 * kPi * bv * t - kPi * bv * bv) * shifted[k];
  }
  return SineCounterexample{GridSignal(grid, std::move(psi)), b, beta};
}

std::vector<GradientSample> gradient_modulus_witness(const GridSignal& phi,
                                                     const std::vector<Complex>& points,
                                                     double step) {
  if (!(step > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  const GridSignal masked = pointwise(eval_mask(mask::Gauss{}, phi.grid()), phi);
  auto mod = [&masked](Complex z) { return std::abs(fourier_at(masked, z)); };
  std::vector<GradientSample> out;
  out.reserve(points.size());
  for (const Complex& z : points) {
    const double dx = (mod(z + step) - mod(z - step)) / (2.0 * step);
    const Complex istep(0.0, step);
    const double dy = (mod(z + istep) - mod(z - istep)) / (2.0 * step);
    out.push_back({z, std::hypot(dx, dy), std::abs(fourier_derivative_at(masked, z))});
  }
  return out;
}

}  // namespace phaseret
