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

#ifndef PHASERET_TESTS_TEST_UTIL_HPP_
#define PHASERET_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "phaseret/grid_signal.hpp"

namespace phaseret::testing {

inline constexpr double kPi = std::numbers::pi;

// Direct O(n^2) quadrature sum at one frequency, independent of the FFT path.
inline Complex direct_transform(const GridSignal& f, double xi) {
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    acc += f[k] * std::polar(1.0, -2.0 * kPi * f.grid().point(k) * xi);
  }
  return acc * f.grid().spacing();
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const std::vector<Complex>& a) {
  double m = 0.0;
  for (const Complex& z : a) m = std::max(m, std::abs(z));
  return m;
}

inline Grid default_grid() { return Grid(2048, 16.0); }

}  // namespace phaseret::testing

#endif  // PHASERET_TESTS_TEST_UTIL_HPP_
