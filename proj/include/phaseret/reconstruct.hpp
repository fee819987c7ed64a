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

#ifndef PHASERET_RECONSTRUCT_HPP_
#define PHASERET_RECONSTRUCT_HPP_

#include <cstddef>
#include <vector>

#include "phaseret/equivalence.hpp"
#include "phaseret/grid_signal.hpp"
#include "phaseret/measurement.hpp"

namespace phaseret {

/// Samples of F = F[gamma_1 phi] and F' on the frequency grid, valid on the
/// closed index range [interval_begin, interval_end]. Outside that range F is
/// the measured modulus with zero phase (extrapolated) and F' is zero.
struct Spectrum {
  Grid grid;  // frequency grid
  std::vector<Complex> F;
  std::vector<Complex> Fprime;
  std::size_t interval_begin = 0;
  std::size_t interval_end = 0;

  bool extrapolated(std::size_t j) const { return j < interval_begin || j > interval_end; }
};

enum class DerivativeScheme {
  // Exact derivative of the trigonometric interpolant of rec1^2.
  kSpectral,
  // Second-order centered differences, one-sided at both ends.
  kCentralDifference,
};

struct PhaseIntegrationOptions {
  // Indices with rec1 <= zero_tol * max(rec1) are treated as zeros.
  double zero_tol = 1e-10;
  // Band-limited refinement factor of the frequency grid used for the
  // quadrature of the phase derivative. Must be even.
  std::size_t upsample = 64;
};

struct ReconstructOptions {
  PhaseIntegrationOptions phase;
  DerivativeScheme derivative = DerivativeScheme::kSpectral;
  // Time samples with gamma_1 below this value are zeroed.
  double mask_floor = 1e-12;
  // Time samples of the recovered gamma_1 * phi whose modulus does not exceed
  // noise_factor times the noise level (the largest modulus seen where
  // gamma_1 < mask_floor) are zeroed as well. 0 disables the gate.
  double noise_factor = 3.0;
};

/// Samples of F' conj(F) from the three Gaussian records:
///   Re = (|F|^2)' / 2 (derivative of rec1^2 / 2 on the frequency grid),
///   Im = (rec3^2 - rec1^2 - rec2^2) / 2.
/// Records must be ordered (Gauss, GaussDeriv, GaussAffine) on one grid.
std::vector<Complex> recover_fprime_fbar(const MeasurementRecord& rec1,
                                         const MeasurementRecord& rec2,
                                         const MeasurementRecord& rec3,
                                         DerivativeScheme scheme = DerivativeScheme::kSpectral);

/// Integrates the phase derivative Im{F' conj F} / |F|^2 over the longest run
/// of frequency samples where rec1 exceeds zero_tol * max(rec1), anchored at
/// phase 0 on the left end of the run. Throws DegenerateSignal when no
/// sample exceeds the threshold.
Spectrum integrate_phase(const std::vector<Complex>& fprime_fbar, const MeasurementRecord& rec1,
                         const PhaseIntegrationOptions& options = {});

/// Recovers phi, up to one unimodular constant, from the three Gaussian
/// coded diffraction patterns.
GridSignal reconstruct_three(const MeasurementRecord& rec1, const MeasurementRecord& rec2,
                             const MeasurementRecord& rec3, const ReconstructOptions& options = {});
GridSignal reconstruct_three(const RecordTriple& records, const ReconstructOptions& options = {});

/// Decides whether psi = c phi (GlobalPhase), psi = c phi* (ConjugateReflection)
/// with phi*(t) = conj(phi(-t)), or neither, at relative tolerance `tol`.
EquivalenceVerdict classify_pair(const GridSignal& phi, const GridSignal& psi, double tol = 1e-6);

/// Relative L2 distance min_{|c|=1} ||psi - c phi|| / ||phi||.
double aligned_relative_error(const GridSignal& reference, const GridSignal& estimate);

enum class ShiftMode {
  // The shift beta must be a whole number of grid steps.
  kGridMultiple,
  // Band-limited translation through the Fourier transform.
  kInterpolate,
};

struct SineCounterexample {
  GridSignal signal;  // psi
  Rational b;         // (p/q) a
  Rational beta;      // q / a
};

/// psi(t) = e^{-2 pi beta t - pi beta^2} phi(t + beta) with beta = q/a. The
/// sine records for (a, b = (p/q) a) of phi and psi coincide although psi is
/// not a constant multiple of phi.
SineCounterexample sine_rational_counterexample(const GridSignal& phi, const Rational& a,
                                                std::int64_t p, std::int64_t q,
                                                ShiftMode mode = ShiftMode::kGridMultiple);

struct GradientSample {
  Complex z;
  double gradient_modulus = 0.0;    // |grad |F|(z)| by central differences
  double derivative_modulus = 0.0;  // |F'(z)|
};

/// Compares |grad |F|| with |F'| for F the analytic continuation of
/// F[gamma_1 phi], at each requested complex frequency.
std::vector<GradientSample> gradient_modulus_witness(const GridSignal& phi,
                                                     const std::vector<Complex>& points,
                                                     double step = 1e-5);

}  // namespace phaseret

#endif  // PHASERET_RECONSTRUCT_HPP_
