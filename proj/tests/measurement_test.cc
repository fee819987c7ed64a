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

#include "phaseret/measurement.hpp"

#include <gtest/gtest.h>

#include <random>

#include "phaseret/errors.hpp"
#include "test_util.hpp"

namespace phaseret {
namespace {

using testing::default_grid;
using testing::direct_transform;
using testing::kPi;

GridSignal sample_signal(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_gaussian_polynomial(default_grid(), 3, rng);
}

void expect_all_zero(const MeasurementRecord& r) {
  for (double m : r.magnitudes()) EXPECT_EQ(m, 0.0);
}

TEST(MeasurementRecordTest, ValidatesMagnitudes) {
  const Grid g(4, 1.0);
  EXPECT_THROW(MeasurementRecord(mask::Gauss{}, g, {1.0, 2.0, 3.0}), InvalidArgument);
  EXPECT_THROW(MeasurementRecord(mask::Gauss{}, g, {1.0, -2.0, 3.0, 0.0}), InvalidArgument);
  EXPECT_THROW(MeasurementRecord(mask::Gauss{}, g, {1.0, std::nan(""), 3.0, 0.0}), InvalidArgument);
}

TEST(CodedDiffractionTest, ZeroSignal) {
  expect_all_zero(coded_diffraction(GridSignal(default_grid()), mask::GaussAffine{}));
  for (const auto& r : three_gaussian_measurements(GridSignal(default_grid()))) expect_all_zero(r);
}

TEST(CodedDiffractionTest, GlobalPhaseInvariance) {
  const GridSignal phi = sample_signal(1);
  const Complex c = std::polar(1.0, 0.77);
  for (const MaskKind& m : {MaskKind{mask::Gauss{}}, MaskKind{mask::GaussDeriv{}},
                            MaskKind{mask::GaussAffine{}},
                            MaskKind{mask::GaussSine{SineFrequency::from_real(1.5)}}}) {
    const auto a = coded_diffraction(phi, m);
    const auto b = coded_diffraction(c * phi, m);
    EXPECT_LE(max_abs_difference(a, b), 1e-12 * (1.0 + a.max_magnitude()));
  }
}

TEST(CodedDiffractionTest, BargmannPairGaussMasked) {
  const auto [plus, minus] = bargmann_pair(default_grid());
  EXPECT_LE(max_abs_difference(coded_diffraction(plus, mask::Gauss{}),
                               coded_diffraction(minus, mask::Gauss{})),
            1e-10);
}

TEST(ThreeGaussianTest, OrderOfMasks) {
  const auto recs = three_gaussian_measurements(sample_signal(2));
  EXPECT_EQ(mask_tag(recs[0].mask()), "gauss");
  EXPECT_EQ(mask_tag(recs[1].mask()), "gauss_deriv");
  EXPECT_EQ(mask_tag(recs[2].mask()), "gauss_affine");
}

// record 2 against a finite-difference derivative of F[gamma_1 phi].
TEST(ThreeGaussianTest, SecondRecordIsDerivativeModulus) {
  const GridSignal phi = sample_signal(3);
  const auto recs = three_gaussian_measurements(phi);
  const GridSignal masked = pointwise(eval_mask(mask::Gauss{}, phi.grid()), phi);
  const Grid freq = phi.grid().dual();
  const double d = 1e-4;
  double worst = 0.0;
  for (std::size_t j = 0; j < freq.size(); j += 7) {
    const double xi = freq.point(j);
    const Complex fd = (direct_transform(masked, xi + d) - direct_transform(masked, xi - d)) / (2.0 * d);
    worst = std::max(worst, std::abs(std::abs(fd) - recs[1].magnitudes()[j]));
  }
  EXPECT_LE(worst, 1e-6);
}

// |F + iF'|^2 expanded against the complex spectrum. With the transform
// e^{-2 pi i x xi}, F' = -i F[gamma_2 phi] and the cross term enters with a
// plus sign: rec3^2 = rec1^2 + rec2^2 + 2 Im{F' conj F}.
TEST(ThreeGaussianTest, ThirdRecordExpansion) {
  const GridSignal phi = sample_signal(4);
  const auto recs = three_gaussian_measurements(phi);
  const GridSignal masked = pointwise(eval_mask(mask::Gauss{}, phi.grid()), phi);
  const Grid freq = phi.grid().dual();
  double worst = 0.0;
  for (std::size_t j = 0; j < freq.size(); j += 5) {
    const Complex z(freq.point(j), 0.0);
    const Complex F = fourier_at(masked, z);
    const Complex Fp = fourier_derivative_at(masked, z);
    const double lhs = std::pow(recs[2].magnitudes()[j], 2);
    const double rhs = std::pow(recs[0].magnitudes()[j], 2) + std::pow(recs[1].magnitudes()[j], 2) +
                       2.0 * (Fp * std::conj(F)).imag();
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(ThreeGaussianTest, ConjugateReflectionSharesFirstTwoRecords) {
  for (std::uint64_t seed = 10; seed < 15; ++seed) {
    const GridSignal phi = sample_signal(seed);
    const auto a = three_gaussian_measurements(phi);
    const auto b = three_gaussian_measurements(conjugate_reflection(phi));
    EXPECT_LE(max_abs_difference(a[0], b[0]), 1e-10);
    EXPECT_LE(max_abs_difference(a[1], b[1]), 1e-10);
    EXPECT_GT(max_abs_difference(a[2], b[2]), 1e-3 * a[2].max_magnitude());
  }
}

TEST(SelfAdjointTest, ZeroAndUnrolledDefinition) {
  const Grid g = default_grid();
  expect_all_zero(selfadjoint_measurement(GridSignal(g.dual()), mask::Gauss{}));
  const GridSignal psi = sample_signal(5);
  for (const MaskKind& m : {MaskKind{mask::Gauss{}}, MaskKind{mask::GaussAffine{}}}) {
    EXPECT_LE(max_abs_difference(selfadjoint_measurement(fourier(psi), m), coded_diffraction(psi, m)),
              1e-8);
  }
}

TEST(SelfAdjointTest, QuadraticFormIsReal) {
  std::mt19937_64 rng(6);
  const GridSignal phi = random_hermite_combination(default_grid().dual(), 6, rng);
  for (const MaskKind& m : {MaskKind{mask::Gauss{}}, MaskKind{mask::GaussDeriv{}},
                            MaskKind{mask::GaussSine{SineFrequency::from_real(0.5)}}}) {
    const Complex q = inner_product(phi, selfadjoint_apply(phi, m));
    EXPECT_LE(std::abs(q.imag()), 1e-10 * (1.0 + std::abs(q)));
  }
}

TEST(SelfAdjointTest, ComplexMaskRejected) {
  const Grid g(8, 4.0);
  std::vector<Complex> v(8, Complex(0.0, 1.0));
  EXPECT_THROW(selfadjoint_measurement(GridSignal(g.dual()), mask::Custom{v}), InvalidArgument);
}

TEST(SineMeasurementsTest, ZeroSignalAndPositivity) {
  for (const auto& r :
       sine_measurements(GridSignal(default_grid()), Rational::make(1, 1), Rational::make(2, 1))) {
    expect_all_zero(r);
  }
  EXPECT_THROW(sine_measurements(sample_signal(1), Rational::make(0, 1), Rational::make(1, 1)),
               InvalidArgument);
  EXPECT_THROW(sine_measurements(sample_signal(1), Rational::make(1, 1), Rational::make(-1, 2)),
               InvalidArgument);
}

TEST(SineMeasurementsTest, EqualFrequenciesGiveEqualRecords) {
  const auto r = sine_measurements(sample_signal(7), Rational::make(3, 2), Rational::make(3, 2));
  EXPECT_EQ(r[1].magnitudes(), r[2].magnitudes());
}

TEST(SineMeasurementsTest, ModulationIsTranslation) {
  const GridSignal phi = sample_signal(8);
  const Rational a = Rational::make(3, 4);
  const auto recs = sine_measurements(phi, a, Rational::make(1, 1));
  const GridSignal masked = pointwise(eval_mask(mask::Gauss{}, phi.grid()), phi);
  const Grid freq = phi.grid().dual();
  const double half = 0.5 * a.value();
  double worst = 0.0;
  for (std::size_t j = 0; j < freq.size(); j += 3) {
    const double x = freq.point(j);
    const double expected =
        0.5 * std::abs(direct_transform(masked, x - half) - direct_transform(masked, x + half));
    worst = std::max(worst, std::abs(expected - recs[1].magnitudes()[j]));
  }
  EXPECT_LE(worst, 1e-8);
}

}  // namespace
}  // namespace phaseret
