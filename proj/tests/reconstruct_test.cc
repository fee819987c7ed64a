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

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "phaseret/errors.hpp"
#include "test_util.hpp"

namespace phaseret {
namespace {

using testing::default_grid;
using testing::kPi;

GridSignal gauss_masked(const GridSignal& phi) {
  return pointwise(eval_mask(mask::Gauss{}, phi.grid()), phi);
}

// Relative L2 distance after the best global phase, over an index range.
double aligned_error(const std::vector<Complex>& truth, const std::vector<Complex>& est,
                     std::size_t begin, std::size_t end) {
  Complex inner(0.0, 0.0);
  double norm = 0.0;
  for (std::size_t j = begin; j <= end; ++j) {
    inner += std::conj(truth[j]) * est[j];
    norm += std::norm(truth[j]);
  }
  const Complex c = inner / std::abs(inner);
  double diff = 0.0;
  for (std::size_t j = begin; j <= end; ++j) diff += std::norm(est[j] - c * truth[j]);
  return std::sqrt(diff / norm);
}

TEST(RecoverFprimeFbarTest, ZeroRecords) {
  const auto recs = three_gaussian_measurements(GridSignal(default_grid()));
  for (const Complex& z : recover_fprime_fbar(recs[0], recs[1], recs[2])) EXPECT_EQ(z, Complex(0, 0));
}

TEST(RecoverFprimeFbarTest, MatchesComplexSpectrum) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3; ++trial) {
    const GridSignal phi = random_gaussian_polynomial(default_grid(), 3, rng);
    const auto recs = three_gaussian_measurements(phi);
    const auto fpf = recover_fprime_fbar(recs[0], recs[1], recs[2]);
    const GridSignal masked = gauss_masked(phi);
    const Grid freq = phi.grid().dual();
    double worst = 0.0;
    double peak = 0.0;
    for (std::size_t j = 0; j < freq.size(); ++j) {
      const Complex z(freq.point(j), 0.0);
      const Complex F = fourier_at(masked, z);
      worst = std::max(worst, std::abs(fpf[j] - fourier_derivative_at(masked, z) * std::conj(F)));
      peak = std::max(peak, std::norm(F));
    }
    EXPECT_LE(worst, 1e-5 * peak);
  }
}

TEST(RecoverFprimeFbarTest, CentralDifferenceRealPartIsExact) {
  std::mt19937_64 rng(22);
  const GridSignal phi = random_hermite_combination(default_grid(), 4, rng);
  const auto recs = three_gaussian_measurements(phi);
  const auto fpf =
      recover_fprime_fbar(recs[0], recs[1], recs[2], DerivativeScheme::kCentralDifference);
  const auto& r = recs[0].magnitudes();
  const double h = recs[0].frequency_grid().spacing();
  for (std::size_t j = 1; j + 1 < r.size(); ++j) {
    const double expected = 0.5 * ((r[j + 1] * r[j + 1] - r[j - 1] * r[j - 1]) / (2.0 * h));
    EXPECT_EQ(fpf[j].real(), expected);
  }
  // determinism
  EXPECT_EQ(fpf, recover_fprime_fbar(recs[0], recs[1], recs[2], DerivativeScheme::kCentralDifference));
}

TEST(RecoverFprimeFbarTest, ImaginaryPartFormula) {
  std::mt19937_64 rng(23);
  const auto recs = three_gaussian_measurements(random_gaussian_polynomial(default_grid(), 2, rng));
  const auto fpf = recover_fprime_fbar(recs[0], recs[1], recs[2]);
  const double peak =
      std::max({recs[0].max_magnitude(), recs[1].max_magnitude(), recs[2].max_magnitude()});
  for (std::size_t j = 0; j < fpf.size(); j += 11) {
    const double a = recs[0].magnitudes()[j];
    const double b = recs[1].magnitudes()[j];
    const double c = recs[2].magnitudes()[j];
    const double im = 0.5 * (c * c - a * a - b * b);
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * peak * (a + b + c);
    EXPECT_EQ(fpf[j].imag(), std::abs(im) <= floor ? 0.0 : im);
  }
}

TEST(RecoverFprimeFbarTest, RejectsMismatchedInputs) {
  std::mt19937_64 rng(24);
  const GridSignal phi = random_gaussian_polynomial(default_grid(), 2, rng);
  const auto recs = three_gaussian_measurements(phi);
  EXPECT_THROW(recover_fprime_fbar(recs[1], recs[0], recs[2]), InvalidArgument);
  const auto other = three_gaussian_measurements(GridSignal(Grid(1024, 16.0)));
  EXPECT_THROW(recover_fprime_fbar(recs[0], other[1], recs[2]), InvalidArgument);
  EXPECT_THROW(reconstruct_three(recs[0], recs[1], other[2]), InvalidArgument);
}

TEST(IntegratePhaseTest, RealEvenSignalHasZeroPhase) {
  const GridSignal gauss = eval_mask(mask::Gauss{}, default_grid());
  const auto recs = three_gaussian_measurements(gauss);
  const Spectrum s = integrate_phase(recover_fprime_fbar(recs[0], recs[1], recs[2]), recs[0]);
  for (std::size_t j = 0; j < s.F.size(); ++j) {
    EXPECT_EQ(s.F[j], Complex(recs[0].magnitudes()[j], 0.0));
  }
}

TEST(IntegratePhaseTest, RecoversComplexSpectrum) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    const GridSignal phi = random_gaussian_polynomial(default_grid(), 1 + trial % 3, rng);
    const auto recs = three_gaussian_measurements(phi);
    const Spectrum s = integrate_phase(recover_fprime_fbar(recs[0], recs[1], recs[2]), recs[0]);
    const GridSignal truth = fourier(gauss_masked(phi));
    EXPECT_LE(aligned_error(truth.values(), s.F, s.interval_begin, s.interval_end), 1e-4);
    for (std::size_t j = s.interval_begin; j <= s.interval_end; ++j) {
      EXPECT_NEAR(std::abs(s.F[j]), recs[0].magnitudes()[j], 1e-14);
    }
    EXPECT_NEAR(std::arg(s.F[s.interval_begin]), 0.0, 1e-15);
  }
}

TEST(IntegratePhaseTest, DerivativeConsistentWithSpectrum) {
  std::mt19937_64 rng(32);
  const GridSignal phi = random_gaussian_polynomial(default_grid(), 2, rng);
  const auto recs = three_gaussian_measurements(phi);
  const Spectrum s = integrate_phase(recover_fprime_fbar(recs[0], recs[1], recs[2]), recs[0]);
  // centered differences of F against Fprime, away from the interval ends
  const double h = s.grid.spacing();
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t j = s.interval_begin + 1; j < s.interval_end; ++j) {
    const Complex fd = (s.F[j + 1] - s.F[j - 1]) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - s.Fprime[j]));
    scale = std::max(scale, std::abs(s.Fprime[j]));
  }
  // second-order truncation error with third derivatives of size O(scale)
  EXPECT_LE(worst, 20.0 * h * h * scale);
}

TEST(IntegratePhaseTest, DegenerateAndInvalid) {
  const auto recs = three_gaussian_measurements(GridSignal(default_grid()));
  const auto fpf = recover_fprime_fbar(recs[0], recs[1], recs[2]);
  EXPECT_THROW(integrate_phase(fpf, recs[0]), DegenerateSignal);
  EXPECT_THROW(reconstruct_three(recs), DegenerateSignal);
  const auto good = three_gaussian_measurements(eval_mask(mask::Gauss{}, default_grid()));
  PhaseIntegrationOptions bad;
  bad.zero_tol = 0.0;
  EXPECT_THROW(integrate_phase(fpf, good[0], bad), InvalidArgument);
  EXPECT_THROW(integrate_phase(std::vector<Complex>(3), good[0]), InvalidArgument);
}

TEST(IntegratePhaseTest, ExtrapolatedSamplesOutsideInterval) {
  const auto recs = three_gaussian_measurements(eval_mask(mask::Gauss{}, default_grid()));
  PhaseIntegrationOptions opt;
  opt.zero_tol = 1e-3;
  const Spectrum s = integrate_phase(recover_fprime_fbar(recs[0], recs[1], recs[2]), recs[0], opt);
  EXPECT_GT(s.interval_begin, 0u);
  EXPECT_TRUE(s.extrapolated(0));
  EXPECT_FALSE(s.extrapolated(1024));
  EXPECT_EQ(s.F[0], Complex(recs[0].magnitudes()[0], 0.0));
}

TEST(ReconstructThreeTest, Gauss) {
  const GridSignal gauss = eval_mask(mask::Gauss{}, default_grid());
  const GridSignal est = reconstruct_three(three_gaussian_measurements(gauss));
  EXPECT_LE(aligned_relative_error(gauss, est), 1e-6);
}

TEST(ReconstructThreeTest, HermiteCombination) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 3; ++trial) {
    const GridSignal phi = random_hermite_combination(default_grid(), 8, rng);
    const GridSignal est = reconstruct_three(three_gaussian_measurements(phi));
    EXPECT_LE(aligned_relative_error(phi, est), 1e-3);
  }
}

TEST(ReconstructThreeTest, RoundTripClassifiesAsGlobalPhase) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    const GridSignal phi = random_gaussian_polynomial(default_grid(), 1 + trial % 3, rng);
    const GridSignal est = reconstruct_three(three_gaussian_measurements(phi));
    const EquivalenceVerdict v = classify_pair(phi, est, 1e-3);
    EXPECT_EQ(v.kind, EquivalenceKind::kGlobalPhase);
    EXPECT_LE(v.residual, 1e-3);
  }
}

TEST(ClassifyPairTest, GlobalPhase) {
  std::mt19937_64 rng(51);
  const GridSignal phi = random_gaussian_polynomial(default_grid(), 3, rng);
  const EquivalenceVerdict v = classify_pair(phi, Complex(0.0, 1.0) * phi);
  EXPECT_EQ(v.kind, EquivalenceKind::kGlobalPhase);
  EXPECT_NEAR(std::abs(v.constant - Complex(0.0, 1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(v.constant), 1.0, 1e-10);
}

TEST(ClassifyPairTest, BargmannPairIsConjugateReflection) {
  const auto [plus, minus] = bargmann_pair(default_grid());
  const EquivalenceVerdict v = classify_pair(plus, minus);
  EXPECT_EQ(v.kind, EquivalenceKind::kConjugateReflection);
  EXPECT_NEAR(std::abs(v.constant), 1.0, 1e-10);
  EXPECT_LE(v.residual, 1e-6);
}

TEST(ClassifyPairTest, ReflectedRandomSignal) {
  std::mt19937_64 rng(52);
  const GridSignal phi = random_gaussian_polynomial(default_grid(), 3, rng);
  const Complex c = std::polar(1.0, -2.0);
  const EquivalenceVerdict v = classify_pair(phi, c * conjugate_reflection(phi));
  EXPECT_EQ(v.kind, EquivalenceKind::kConjugateReflection);
  EXPECT_NEAR(std::abs(v.constant - c), 0.0, 1e-12);
}

TEST(ClassifyPairTest, GaussAgainstDerivativeMasked) {
  const Grid g = default_grid();
  const GridSignal phi = eval_mask(mask::Gauss{}, g);
  const GridSignal psi = eval_mask(mask::GaussDeriv{}, g);
  const EquivalenceVerdict v = classify_pair(phi, psi);
  EXPECT_EQ(v.kind, EquivalenceKind::kDistinct);
  // oracle: psi is odd and phi even, so <phi, psi> = 0 and the misfit is
  // sqrt(||psi||^2 + ||phi||^2) / ||phi||, with ||phi||^2 = 1/sqrt(2) and
  // ||psi||^2 = 4 pi^2 int t^2 e^{-2 pi t^2} dt = pi/sqrt(2).
  double phi2 = 0.0;
  double psi2 = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    phi2 += std::norm(phi[k]);
    psi2 += std::norm(psi[k]);
  }
  EXPECT_NEAR(v.residual, std::sqrt((phi2 + psi2) / phi2), 1e-10);
  EXPECT_NEAR(phi2 * g.spacing(), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(psi2 * g.spacing(), kPi / std::sqrt(2.0), 1e-12);
}

TEST(ClassifyPairTest, ZeroConventions) {
  const GridSignal zero(default_grid());
  const EquivalenceVerdict both = classify_pair(zero, zero);
  EXPECT_EQ(both.kind, EquivalenceKind::kGlobalPhase);
  EXPECT_EQ(both.constant, Complex(1.0, 0.0));
  const EquivalenceVerdict one = classify_pair(zero, eval_mask(mask::Gauss{}, default_grid()));
  EXPECT_EQ(one.kind, EquivalenceKind::kDistinct);
  EXPECT_EQ(one.residual, 1.0);
  EXPECT_THROW(classify_pair(zero, GridSignal(Grid(64, 4.0))), InvalidArgument);
}

TEST(SineCounterexampleTest, BumpWithUnitShift) {
  const Grid g = default_grid();
  const GridSignal phi = bump(g, 0.0, 1.0);
  const Rational a = Rational::make(1, 1);
  const SineCounterexample cx = sine_rational_counterexample(phi, a, 1, 1);
  EXPECT_EQ(cx.b, Rational::make(1, 1));
  EXPECT_EQ(cx.beta, Rational::make(1, 1));
  const auto rp = sine_measurements(phi, a, cx.b);
  const auto rq = sine_measurements(cx.signal, a, cx.b);
  for (int i = 0; i < 3; ++i) EXPECT_LE(max_abs_difference(rp[i], rq[i]), 1e-8);
  const EquivalenceVerdict v = classify_pair(phi, cx.signal);
  EXPECT_EQ(v.kind, EquivalenceKind::kDistinct);
  EXPECT_GT(v.residual, 0.1);
}

TEST(SineCounterexampleTest, NonTrivialRatio) {
  const Grid g = default_grid();
  const GridSignal phi = bump(g, 0.25, 0.75);
  const Rational a = Rational::make(1, 2);
  // beta = q / a = 1, b = (3/1) a = 3/2
  const SineCounterexample cx = sine_rational_counterexample(phi, a, 3, 1);
  EXPECT_EQ(cx.b, Rational::make(3, 2));
  const auto rp = sine_measurements(phi, a, cx.b);
  const auto rq = sine_measurements(cx.signal, a, cx.b);
  for (int i = 0; i < 3; ++i) EXPECT_LE(max_abs_difference(rp[i], rq[i]), 1e-8);
  EXPECT_EQ(classify_pair(phi, cx.signal).kind, EquivalenceKind::kDistinct);
}

TEST(SineCounterexampleTest, EqualFrequencies) {
  const GridSignal phi = bump(default_grid(), 0.0, 1.0);
  const SineCounterexample cx = sine_rational_counterexample(phi, Rational::make(2, 1), 5, 5);
  EXPECT_EQ(cx.b, Rational::make(2, 1));
  const auto rq = sine_measurements(cx.signal, Rational::make(2, 1), cx.b);
  EXPECT_EQ(rq[1].magnitudes(), rq[2].magnitudes());
}

TEST(SineCounterexampleTest, ZeroSignal) {
  const SineCounterexample cx =
      sine_rational_counterexample(GridSignal(default_grid()), Rational::make(1, 1), 1, 1);
  for (const Complex& z : cx.signal.values()) EXPECT_EQ(z, Complex(0.0, 0.0));
}

TEST(SineCounterexampleTest, InvalidParameters) {
  const GridSignal phi = bump(default_grid(), 0.0, 1.0);
  EXPECT_THROW(sine_rational_counterexample(phi, Rational::make(1, 1), 1, 0), InvalidArgument);
  EXPECT_THROW(sine_rational_counterexample(phi, Rational::make(1, 1), -1, 1), InvalidArgument);
  // beta = 1/3 is not a multiple of 1/128
  EXPECT_THROW(sine_rational_counterexample(phi, Rational::make(3, 1), 1, 1), InvalidArgument);
}

TEST(SineCounterexampleTest, InterpolatedShift) {
  const GridSignal phi = bump(default_grid(), 0.0, 1.0);
  const Rational a = Rational::make(3, 1);
  const SineCounterexample cx = sine_rational_counterexample(phi, a, 2, 1, ShiftMode::kInterpolate);
  const auto rp = sine_measurements(phi, a, cx.b);
  const auto rq = sine_measurements(cx.signal, a, cx.b);
  for (int i = 0; i < 3; ++i) EXPECT_LE(max_abs_difference(rp[i], rq[i]), 1e-6 * rp[i].max_magnitude());
  EXPECT_EQ(classify_pair(phi, cx.signal).kind, EquivalenceKind::kDistinct);
}

TEST(GradientModulusTest, OffAxisPoints) {
  std::mt19937_64 rng(61);
  const GridSignal phi = random_gaussian_polynomial(default_grid(), 3, rng);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(0.1, 1.0);
  std::vector<Complex> pts;
  for (int i = 0; i < 20; ++i) pts.emplace_back(re(rng), (i % 2 ? -1.0 : 1.0) * im(rng));
  for (const GradientSample& s : gradient_modulus_witness(phi, pts)) {
    EXPECT_NEAR(s.gradient_modulus, s.derivative_modulus, 1e-4 * std::max(1.0, s.derivative_modulus));
  }
}

TEST(EquivalenceKindTest, NamesRoundTrip) {
  for (auto k : {EquivalenceKind::kGlobalPhase, EquivalenceKind::kConjugateReflection,
                 EquivalenceKind::kDistinct}) {
    EXPECT_EQ(equivalence_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(equivalence_kind_from_string("Other"), InvalidArgument);
}

}  // namespace
}  // namespace phaseret
