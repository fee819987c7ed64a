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

#include <algorithm>
#include <cmath>

#include "phaseret/errors.hpp"

namespace phaseret {

MeasurementRecord::MeasurementRecord(MaskKind mask, Grid grid, std::vector<double> magnitudes)
    : mask_(std::move(mask)), grid_(grid), magnitudes_(std::move(magnitudes)) {
  if (magnitudes_.size() != grid_.size()) {
    throw InvalidArgument("record length does not match grid size");
  }
  for (double m : magnitudes_) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw InvalidArgument("record magnitudes must be finite and nonnegative");
    }
  }
  if (const auto* c = std::get_if<mask::Custom>(&mask_)) {
    if (c->values.size() != grid_.size()) {
      throw InvalidArgument("custom mask length does not match grid");
    }
  }
}

double MeasurementRecord::max_magnitude() const {
  return magnitudes_.empty() ? 0.0 : *std::max_element(magnitudes_.begin(), magnitudes_.end());
}

MeasurementRecord coded_diffraction(const GridSignal& phi, const MaskKind& mask) {
  const GridSignal masked = pointwise(eval_mask(mask, phi.grid()), phi);
  const GridSignal spectrum = fourier(masked);
  std::vector<double> mags(spectrum.size());
  for (std::size_t j = 0; j < mags.size(); ++j) mags[j] = std::abs(spectrum[j]);
  return MeasurementRecord(mask, phi.grid(), std::move(mags));
}

RecordTriple three_gaussian_measurements(const GridSignal& phi) {
  return {coded_diffraction(phi, mask::Gauss{}), coded_diffraction(phi, mask::GaussDeriv{}),
          coded_diffraction(phi, mask::GaussAffine{})};
}

GridSignal selfadjoint_apply(const GridSignal& phi, const MaskKind& mask) {
  if (!mask_is_real(mask)) {
    throw InvalidArgument("self-adjoint measurement needs a real-valued mask");
  }
  const GridSignal time = inverse_fourier(phi);
  return fourier(pointwise(eval_mask(mask, time.grid()), time));
}

MeasurementRecord selfadjoint_measurement(const GridSignal& phi, const MaskKind& mask) {
  if (!mask_is_real(mask)) {
    throw InvalidArgument("self-adjoint measurement needs a real-valued mask");
  }
  return coded_diffraction(inverse_fourier(phi), mask);
}

RecordTriple sine_measurements(const GridSignal& phi, const Rational& a, const Rational& b) {
  if (a.num <= 0 || b.num <= 0) {
    throw InvalidArgument("sine mask frequencies must be positive");
  }
  return {coded_diffraction(phi, mask::Gauss{}),
          coded_diffraction(phi, mask::GaussSine{SineFrequency::from_rational(a)}),
          coded_diffraction(phi, mask::GaussSine{SineFrequency::from_rational(b)})};
}

double max_abs_difference(const MeasurementRecord& x, const MeasurementRecord& y) {
  if (!x.grid().compatible_with(y.grid())) {
    throw InvalidArgument("records live on incompatible grids");
  }
  double d = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    d = std::max(d, std::abs(x.magnitudes()[j] - y.magnitudes()[j]));
  }
  return d;
}

}  // namespace phaseret
