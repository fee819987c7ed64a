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

#ifndef PHASERET_SRC_FFT_HPP_
#define PHASERET_SRC_FFT_HPP_

#include <complex>
#include <vector>

namespace phaseret::detail {

// out_m = sum_k in_k e^{-2 pi i k m / n}
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in);
// out_k = sum_m in_m e^{+2 pi i k m / n}, no 1/n factor.
std::vector<std::complex<double>> idft_unscaled(const std::vector<std::complex<double>>& in);

// Band-limited interpolation of a real n-periodic sequence onto n * factor
// points: result[j * factor] == x[j] up to roundoff. The Nyquist term is split
// symmetrically so real input stays real.
std::vector<double> upsample_periodic(const std::vector<double>& x, std::size_t factor);

// Exact derivative d/dj of the trigonometric interpolant of a real
// n-periodic sequence, evaluated at the integer nodes.
std::vector<double> periodic_derivative(const std::vector<double>& x);

}  // namespace phaseret::detail

#endif  // PHASERET_SRC_FFT_HPP_
