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

#include "phaseret/grid_signal.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "fft.hpp"
#include "phaseret/errors.hpp"

namespace phaseret {

namespace {

constexpr double kPi = std::numbers::pi;

double signed_unit(std::size_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

void require_compatible(const Grid& a, const Grid& b, const char* what) {
  if (!a.compatible_with(b)) {
    throw InvalidArgument(std::string(what) + ": incompatible grids");
  }
}

}  // namespace

Grid::Grid(std::int64_t n, double extent) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument("grid size must be even and >= 2, got " + std::to_string(n));
  }
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw InvalidArgument("grid extent must be positive and finite");
  }
  n_ = static_cast<std::size_t>(n);
  extent_ = extent;
  spacing_ = extent / static_cast<double>(n);
}

std::vector<double> Grid::points() const {
  std::vector<double> t(n_);
  for (std::size_t k = 0; k < n_; ++k) t[k] = point(k);
  return t;
}

Grid Grid::dual() const {
  return Grid(static_cast<std::int64_t>(n_), static_cast<double>(n_) / extent_);
}

bool Grid::compatible_with(const Grid& other) const {
  return n_ == other.n_ &&
         std::abs(extent_ - other.extent_) <= 1e-12 * std::max(extent_, other.extent_);
}

Grid make_grid(std::int64_t n, double extent) { return Grid(n, extent); }

GridSignal::GridSignal(Grid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("signal length " + std::to_string(values_.size()) +
                          " does not match grid size " + std::to_string(grid_.size()));
  }
}

GridSignal::GridSignal(Grid grid) : grid_(grid), values_(grid.size(), Complex(0.0, 0.0)) {}

double GridSignal::norm_squared() const {
  double s = 0.0;
  for (const Complex& v : values_) s += std::norm(v);
  return s * grid_.spacing();
}

double GridSignal::norm() const { return std::sqrt(norm_squared()); }

Complex inner_product(const GridSignal& f, const GridSignal& g) {
  require_compatible(f.grid(), g.grid(), "inner_product");
  Complex s(0.0, 0.0);
  for (std::size_t k = 0; k < f.size(); ++k) s += std::conj(f[k]) * g[k];
  return s * f.grid().spacing();
}

GridSignal operator*(Complex c, const GridSignal& f) {
  std::vector<Complex> v = f.values();
  for (Complex& x : v) x *= c;
  return GridSignal(f.grid(), std::move(v));
}

GridSignal operator+(const GridSignal& f, const GridSignal& g) {
  require_compatible(f.grid(), g.grid(), "operator+");
  std::vector<Complex> v = f.values();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += g[k];
  return GridSignal(f.grid(), std::move(v));
}

GridSignal operator-(const GridSignal& f, const GridSignal& g) {
  require_compatible(f.grid(), g.grid(), "operator-");
  std::vector<Complex> v = f.values();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] -= g[k];
  return GridSignal(f.grid(), std::move(v));
}

GridSignal pointwise(const GridSignal& f, const GridSignal& g) {
  require_compatible(f.grid(), g.grid(), "pointwise");
  std::vector<Complex> v = f.values();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] *= g[k];
  return GridSignal(f.grid(), std::move(v));
}

GridSignal conjugate_reflection(const GridSignal& f) {
  const std::size_t n = f.size();
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = std::conj(f[(n - k) % n]);
  return GridSignal(f.grid(), std::move(v));
}

// ---------------------------------------------------------------------------

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long p = std::stoll(text, &used);
      if (used != text.size()) throw InvalidArgument("trailing characters");
      return make(p, 1);
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    const long long p = std::stoll(a, &used);
    if (used != a.size()) throw InvalidArgument("trailing characters");
    const long long q = std::stoll(b, &used);
    if (used != b.size()) throw InvalidArgument("trailing characters");
    return make(p, q);
  } catch (const std::logic_error&) {
    throw InvalidArgument("cannot parse rational '" + text + "'");
  }
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(a.num * b.num, a.den * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw InvalidArgument("division by zero rational");
  return Rational::make(a.num * b.den, a.den * b.num);
}

SineFrequency SineFrequency::from_rational(const Rational& r) {
  return SineFrequency{r.value(), r};
}

SineFrequency SineFrequency::from_real(double v) { return SineFrequency{v, std::nullopt}; }

std::string mask_tag(const MaskKind& kind) {
  struct Visitor {
    std::string operator()(const mask::Gauss&) const { return "gauss"; }
    std::string operator()(const mask::GaussDeriv&) const { return "gauss_deriv"; }
    std::string operator()(const mask::GaussAffine&) const { return "gauss_affine"; }
    std::string operator()(const mask::GaussSine&) const { return "gauss_sine"; }
    std::string operator()(const mask::Custom&) const { return "custom"; }
  };
  return std::visit(Visitor{}, kind);
}

bool mask_is_real(const MaskKind& kind) {
  if (const auto* c = std::get_if<mask::Custom>(&kind)) {
    for (const Complex& v : c->values) {
      if (v.imag() != 0.0) return false;
    }
  }
  return true;
}

double mask_value(const MaskKind& kind, double t) {
  const double g = std::exp(-kPi * t * t);
  struct Visitor {
    double t;
    double g;
    double operator()(const mask::Gauss&) const { return g; }
    double operator()(const mask::GaussDeriv&) const { return 2.0 * kPi * t * g; }
    double operator()(const mask::GaussAffine&) const { return (1.0 - 2.0 * kPi * t) * g; }
    double operator()(const mask::GaussSine& s) const {
      return std::sin(s.freq.value * kPi * t) * g;
    }
    double operator()(const mask::Custom&) const {
      throw InvalidArgument("custom masks have no closed form");
    }
  };
  return std::visit(Visitor{t, g}, kind);
}

GridSignal eval_mask(const MaskKind& kind, const Grid& grid) {
  if (const auto* c = std::get_if<mask::Custom>(&kind)) {
    if (c->values.size() != grid.size()) {
      throw InvalidArgument("custom mask length does not match grid");
    }
    return GridSignal(grid, c->values);
  }
  if (const auto* s = std::get_if<mask::GaussSine>(&kind)) {
    if (!std::isfinite(s->freq.value)) throw InvalidArgument("sine mask frequency must be finite");
  }
  std::vector<Complex> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) v[k] = mask_value(kind, grid.point(k));
  return GridSignal(grid, std::move(v));
}

// ---------------------------------------------------------------------------
//
// With t_k = -T/2 + k h and xi_j = (j - n/2)/T the kernel factorizes as
//   e^{-2 pi i t_k xi_j} = (-1)^{j - n/2} (-1)^k e^{-2 pi i k j / n},
// so both directions are one FFT plus sign flips.

GridSignal fourier(const GridSignal& sig) {
  const Grid& grid = sig.grid();
  const std::size_t n = grid.size();
  std::vector<Complex> y(n);
  for (std::size_t k = 0; k < n; ++k) y[k] = signed_unit(k) * sig[k];
  std::vector<Complex> out = detail::dft(y);
  const double h = grid.spacing();
  const double half_sign = signed_unit(n / 2);
  for (std::size_t j = 0; j < n; ++j) out[j] *= h * half_sign * signed_unit(j);
  return GridSignal(grid.dual(), std::move(out));
}

GridSignal inverse_fourier(const GridSignal& sig) {
  const Grid& grid = sig.grid();
  const std::size_t n = grid.size();
  const double half_sign = signed_unit(n / 2);
  std::vector<Complex> y(n);
  for (std::size_t j = 0; j < n; ++j) y[j] = half_sign * signed_unit(j) * sig[j];
  std::vector<Complex> out = detail::idft_unscaled(y);
  const double h = grid.spacing();
  for (std::size_t k = 0; k < n; ++k) out[k] *= h * signed_unit(k);
  return GridSignal(grid.dual(), std::move(out));
}

Complex fourier_at(const GridSignal& sig, Complex z) {
  const Grid& grid = sig.grid();
  Complex s(0.0, 0.0);
  for (std::size_t k = 0; k < sig.size(); ++k) {
    s += sig[k] * std::exp(Complex(0.0, -2.0 * kPi * grid.point(k)) * z);
  }
  return s * grid.spacing();
}

Complex fourier_derivative_at(const GridSignal& sig, Complex z) {
  const Grid& grid = sig.grid();
  Complex s(0.0, 0.0);
  for (std::size_t k = 0; k < sig.size(); ++k) {
    const double t = grid.point(k);
    s += Complex(0.0, -2.0 * kPi * t) * sig[k] * std::exp(Complex(0.0, -2.0 * kPi * t) * z);
  }
  return s * grid.spacing();
}

std::pair<GridSignal, GridSignal> bargmann_pair(const Grid& grid) {
  std::vector<Complex> plus(grid.size());
  std::vector<Complex> minus(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid.point(k);
    const double mod = std::exp(-kPi * t * t);
    const double arg = kPi * t * t;
    minus[k] = std::polar(mod, arg);
    plus[k] = std::conj(minus[k]);
  }
  return {GridSignal(grid, std::move(plus)), GridSignal(grid, std::move(minus))};
}

// ---------------------------------------------------------------------------

namespace {

Complex complex_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

GridSignal random_gaussian_polynomial(const Grid& grid, int degree, std::mt19937_64& rng) {
  if (degree < 0) throw InvalidArgument("polynomial degree must be nonnegative");
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
  for (Complex& c : coeffs) c = complex_normal(rng);
  std::vector<Complex> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid.point(k);
    Complex p(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = p * t + *it;
    v[k] = p * std::exp(-kPi * t * t);
  }
  return GridSignal(grid, std::move(v));
}

GridSignal random_hermite_combination(const Grid& grid, int terms, std::mt19937_64& rng) {
  if (terms < 1) throw InvalidArgument("need at least one Hermite term");
  std::vector<Complex> coeffs(static_cast<std::size_t>(terms));
  for (Complex& c : coeffs) c = complex_normal(rng);
  std::vector<Complex> v(grid.size());
  const double root2pi = std::sqrt(2.0 * kPi);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid.point(k);
    const double u = root2pi * t;
    double prev = 0.0;
    double cur = std::pow(2.0, 0.25) * std::exp(-kPi * t * t);
    Complex acc = coeffs[0] * cur;
    for (int j = 0; j + 1 < terms; ++j) {
      const double next = std::sqrt(2.0 / (j + 1)) * u * cur - std::sqrt(double(j) / (j + 1)) * prev;
      prev = cur;
      cur = next;
      acc += coeffs[static_cast<std::size_t>(j) + 1] * cur;
    }
    v[k] = acc;
  }
  return GridSignal(grid, std::move(v));
}

GridSignal bump(const Grid& grid, double center, double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("bump radius must be positive");
  std::vector<Complex> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double s = (grid.point(k) - center) / radius;
    if (std::abs(s) < 1.0) v[k] = std::exp(-1.0 / (1.0 - s * s));
  }
  return GridSignal(grid, std::move(v));
}

}  // namespace phaseret
