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

#ifndef PHASERET_GRID_SIGNAL_HPP_
#define PHASERET_GRID_SIGNAL_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace phaseret {

using Complex = std::complex<double>;

/// Uniform sampling of the interval [-extent/2, extent/2) with an even
/// number of points. The dual (frequency) grid of Grid(n, T) is Grid(n, n/T),
/// so dual().dual() gives back the original grid.
class Grid {
 public:
  /// Throws InvalidArgument unless n is even, n >= 2 and extent > 0.
  Grid(std::int64_t n, double extent);

  std::size_t size() const { return n_; }
  double extent() const { return extent_; }
  double spacing() const { return spacing_; }

  double point(std::size_t k) const {
    return -0.5 * extent_ + static_cast<double>(k) * spacing_;
  }
  std::vector<double> points() const;

  Grid dual() const;

  /// Same sample count and extents equal to 1e-12 relative.
  bool compatible_with(const Grid& other) const;

  bool operator==(const Grid& other) const = default;

 private:
  std::size_t n_;
  double extent_;
  double spacing_;
};

Grid make_grid(std::int64_t n, double extent);

/// Complex samples on a Grid.
class GridSignal {
 public:
  GridSignal(Grid grid, std::vector<Complex> values);
  /// All-zero signal.
  explicit GridSignal(Grid grid);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  std::vector<Complex>& mutable_values() { return values_; }
  const Complex& operator[](std::size_t k) const { return values_[k]; }

  /// Riemann sum of |f|^2 on the grid.
  double norm_squared() const;
  double norm() const;

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

/// <f, g> = spacing * sum conj(f_k) g_k. Grids must be compatible.
Complex inner_product(const GridSignal& f, const GridSignal& g);

GridSignal operator*(Complex c, const GridSignal& f);
GridSignal operator+(const GridSignal& f, const GridSignal& g);
GridSignal operator-(const GridSignal& f, const GridSignal& g);
/// Pointwise product.
GridSignal pointwise(const GridSignal& f, const GridSignal& g);

/// f*(t) = conj(f(-t)); on the grid index k maps to (n - k) mod n.
GridSignal conjugate_reflection(const GridSignal& f);

// ---------------------------------------------------------------------------
// Masks

/// Exact rational number with positive denominator in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  /// Parses "p/q" or "p".
  static Rational parse(const std::string& text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  bool operator==(const Rational& other) const = default;
};

/// Modulation frequency of a sine mask. When `exact` is set, `value` equals
/// exact->value(); commensurability questions are only answered for the
/// exact form.
struct SineFrequency {
  double value = 1.0;
  std::optional<Rational> exact;

  static SineFrequency from_rational(const Rational& r);
  static SineFrequency from_real(double v);
  bool operator==(const SineFrequency& other) const = default;
};

namespace mask {
struct Gauss {
  bool operator==(const Gauss&) const = default;
};
struct GaussDeriv {
  bool operator==(const GaussDeriv&) const = default;
};
struct GaussAffine {
  bool operator==(const GaussAffine&) const = default;
};
struct GaussSine {
  SineFrequency freq;
  bool operator==(const GaussSine&) const = default;
};
struct Custom {
  std::vector<Complex> values;
  bool operator==(const Custom&) const = default;
};
}  // namespace mask

/// gamma_1 = e^{-pi t^2}, gamma_2 = 2 pi t gamma_1,
/// gamma_3 = (1 - 2 pi t) gamma_1, sin(a pi t) gamma_1, or explicit samples.
using MaskKind = std::variant<mask::Gauss, mask::GaussDeriv, mask::GaussAffine,
                              mask::GaussSine, mask::Custom>;

std::string mask_tag(const MaskKind& kind);
bool mask_is_real(const MaskKind& kind);

/// Value of an analytic mask at t. Throws InvalidArgument for Custom.
double mask_value(const MaskKind& kind, double t);

GridSignal eval_mask(const MaskKind& kind, const Grid& grid);

// ---------------------------------------------------------------------------
// Fourier transform, normalized as F f(xi) = int f(x) e^{-2 pi i x xi} dx.

/// Quadrature transform onto grid.dual():
///   F(xi_j) = spacing * sum_k f_k e^{-2 pi i t_k xi_j}.
/// Discretely unitary: inverse_fourier(fourier(f)) == f up to roundoff.
GridSignal fourier(const GridSignal& sig);

/// Adjoint (and inverse) of fourier, mapping grid.dual() back to grid.
GridSignal inverse_fourier(const GridSignal& sig);

/// Analytic continuation of the quadrature transform to complex frequency
/// z = xi + i eta, evaluated by direct summation.
Complex fourier_at(const GridSignal& sig, Complex z);
/// d/dz of fourier_at.
Complex fourier_derivative_at(const GridSignal& sig, Complex z);

/// (psi_+, psi_-) with psi_pm(t) = e^{-(1 pm i) pi t^2}.
std::pair<GridSignal, GridSignal> bargmann_pair(const Grid& grid);

// ---------------------------------------------------------------------------
// Test signals

/// p(t) e^{-pi t^2} with p of the given degree and standard complex normal
/// coefficients.
GridSignal random_gaussian_polynomial(const Grid& grid, int degree, std::mt19937_64& rng);

/// sum_{k<terms} c_k h_k(t) with h_k the L2-normalized Hermite functions
/// for this Fourier normalization and standard complex normal c_k.
GridSignal random_hermite_combination(const Grid& grid, int terms, std::mt19937_64& rng);

/// Smooth bump exp(-1 / (1 - ((t - center)/radius)^2)) supported on
/// |t - center| < radius.
GridSignal bump(const Grid& grid, double center, double radius);

}  // namespace phaseret

#endif  // PHASERET_GRID_SIGNAL_HPP_
