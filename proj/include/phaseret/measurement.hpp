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

#ifndef PHASERET_MEASUREMENT_HPP_
#define PHASERET_MEASUREMENT_HPP_

#include <array>
#include <vector>

#include "phaseret/grid_signal.hpp"

namespace phaseret {

/// Phaseless coded diffraction pattern |F[mask * phi]|. `grid` is the time
/// grid of the measured signal; magnitudes live on grid.dual().
class MeasurementRecord {
 public:
  MeasurementRecord(MaskKind mask, Grid grid, std::vector<double> magnitudes);

  const MaskKind& mask() const { return mask_; }
  const Grid& grid() const { return grid_; }
  Grid frequency_grid() const { return grid_.dual(); }
  const std::vector<double>& magnitudes() const { return magnitudes_; }
  std::size_t size() const { return magnitudes_.size(); }
  double max_magnitude() const;

 private:
  MaskKind mask_;
  Grid grid_;
  std::vector<double> magnitudes_;
};

using RecordTriple = std::array<MeasurementRecord, 3>;

/// |fourier(eval_mask(mask) * phi)|.
MeasurementRecord coded_diffraction(const GridSignal& phi, const MaskKind& mask);

/// Records for gamma_1, gamma_2, gamma_3 in that order.
RecordTriple three_gaussian_measurements(const GridSignal& phi);

/// |F[mask * F^{-1} phi]|, i.e. the modulus of the self-adjoint operator
/// F m_gamma F^* applied to phi. `phi` lives on a frequency grid. The mask
/// must be real.
MeasurementRecord selfadjoint_measurement(const GridSignal& phi, const MaskKind& mask);

/// The operator F m_gamma F^* itself (complex output, for adjointness checks).
GridSignal selfadjoint_apply(const GridSignal& phi, const MaskKind& mask);

/// Records for gamma, sin(a pi t) gamma, sin(b pi t) gamma. Requires a, b > 0.
RecordTriple sine_measurements(const GridSignal& phi, const Rational& a, const Rational& b);

/// sup_j |x_j - y_j| over two records on compatible grids.
double max_abs_difference(const MeasurementRecord& x, const MeasurementRecord& y);

}  // namespace phaseret

#endif  // PHASERET_MEASUREMENT_HPP_
