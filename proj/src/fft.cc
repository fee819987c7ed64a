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

#include "fft.hpp"

#include <numbers>

#include <unsupported/Eigen/FFT>

namespace phaseret::detail {

using Complex = std::complex<double>;

std::vector<Complex> dft(const std::vector<Complex>& in) {
  if (in.empty()) return {};
  Eigen::FFT<double> fft;
  std::vector<Complex> out;
  fft.fwd(out, in);
  return out;
}

std::vector<Complex> idft_unscaled(const std::vector<Complex>& in) {
  if (in.empty()) return {};
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<Complex> out;
  fft.inv(out, in);
  return out;
}

std::vector<double> upsample_periodic(const std::vector<double>& x, std::size_t factor) {
  const std::size_t n = x.size();
  if (factor <= 1 || n == 0) return x;
  std::vector<Complex> cx(x.begin(), x.end());
  const std::vector<Complex> c = dft(cx);

  const std::size_t m = n * factor;
  std::vector<Complex> padded(m, Complex(0.0, 0.0));
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < (n + 1) / 2; ++k) padded[k] = c[k];
  for (std::size_t k = half + 1; k < n; ++k) padded[m - n + k] = c[k];
  if (n % 2 == 0) {
    padded[half] += 0.5 * c[half];
    padded[m - half] += 0.5 * c[half];
  }
  const std::vector<Complex> fine = idft_unscaled(padded);
  std::vector<double> out(m);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < m; ++j) out[j] = fine[j].real() * scale;
  return out;
}

std::vector<double> periodic_derivative(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  std::vector<Complex> cx(x.begin(), x.end());
  std::vector<Complex> c = dft(cx);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Signed frequency; the Nyquist mode has no well-defined real derivative.
    const double freq = (2 * k < n) ? static_cast<double>(k)
                        : (2 * k == n) ? 0.0
                                       : static_cast<double>(k) - static_cast<double>(n);
    c[k] *= Complex(0.0, w * freq);
  }
  const std::vector<Complex> d = idft_unscaled(c);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = d[j].real() / static_cast<double>(n);
  return out;
}

}  // namespace phaseret::detail
