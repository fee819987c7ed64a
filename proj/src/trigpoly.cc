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

#include "phaseret/trigpoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "phaseret/errors.hpp"

namespace phaseret {
namespace {

constexpr double kPi = std::numbers::pi;

Complex unit_exp(double x) { return std::polar(1.0, 2.0 * kPi * x); }

int lowest_nonzero(const TrigPoly& p) {
  for (std::size_t j = 0; j < p.N(); ++j) {
    if (p[j] != Complex(0.0, 0.0)) return static_cast<int>(j);
  }
  return -1;
}

bool close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

TrigPoly::TrigPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("trigonometric polynomial needs N >= 1");
}

TrigPoly TrigPoly::padded(std::size_t n) const {
  if (n < coeffs_.size()) throw InvalidArgument("cannot pad to a smaller length");
  std::vector<Complex> c = coeffs_;
  c.resize(n, Complex(0.0, 0.0));
  return TrigPoly(std::move(c));
}

int TrigPoly::degree() const {
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    if (coeffs_[j] != Complex(0.0, 0.0)) return static_cast<int>(j);
  }
  return -1;
}

TrigPoly random_trigpoly(std::size_t N, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<Complex> c(N);
  for (Complex& z : c) {
    const double re = normal(rng);
    z = Complex(re, normal(rng));
  }
  return TrigPoly(std::move(c));
}

Complex eval_algebraic(const TrigPoly& p, Complex z) {
  Complex acc(0.0, 0.0);
  for (std::size_t j = p.N(); j-- > 0;) acc = acc * z + p[j];
  return acc;
}

Complex eval(const TrigPoly& p, double x) { return eval_algebraic(p, unit_exp(x)); }

TrigPoly derivative(const TrigPoly& p) {
  std::vector<Complex> c(p.N());
  for (std::size_t j = 0; j < p.N(); ++j) {
    c[j] = Complex(0.0, 2.0 * kPi * static_cast<double>(j)) * p[j];
  }
  return TrigPoly(std::move(c));
}

AutocorrCoeffs autocorrelation(const TrigPoly& p) {
  const std::size_t n = p.N();
  std::vector<Complex> c(2 * n - 1, Complex(0.0, 0.0));
  // c_{n-1+d} = sum_j psi_j conj(psi_{j-d}) for lag d >= 0; the negative lags
  // are the conjugates, which keeps the symmetry exact.
  for (std::size_t d = 0; d < n; ++d) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = d; j < n; ++j) acc += p[j] * std::conj(p[j - d]);
    c[n - 1 + d] = acc;
    c[n - 1 - d] = std::conj(acc);
  }
  c[n - 1] = Complex(c[n - 1].real(), 0.0);
  return AutocorrCoeffs{std::move(c)};
}

double eval_sq_modulus(const AutocorrCoeffs& c, double x) {
  if (c.c.empty() || c.c.size() % 2 == 0) {
    throw InvalidArgument("autocorrelation must have an odd number of coefficients");
  }
  const int n = static_cast<int>(c.N());
  Complex acc(0.0, 0.0);
  for (std::size_t l = 0; l < c.c.size(); ++l) {
    acc += c.c[l] * unit_exp(static_cast<double>(static_cast<int>(l) - (n - 1)) * x);
  }
  return acc.real();
}

AutocorrCoeffs interpolate_sq_modulus(const std::vector<double>& sq_samples) {
  const std::size_t m = sq_samples.size();
  if (m == 0 || m % 2 == 0) {
    throw InvalidArgument("expected 2N-1 samples, got " + std::to_string(m));
  }
  const std::size_t n = (m + 1) / 2;
  const double md = static_cast<double>(m);
  std::vector<Complex> c(m, Complex(0.0, 0.0));
  for (std::size_t l = 0; l < m; ++l) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
      // exponent (N-1-l) k / M reduced mod M to keep the argument small
      const auto e = static_cast<long long>((n - 1 + m - l) % m) * static_cast<long long>(k) %
                     static_cast<long long>(m);
      acc += sq_samples[k] * unit_exp(static_cast<double>(e) / md);
    }
    c[l] = acc / md;
  }
  for (std::size_t d = 1; d < n; ++d) {
    const Complex avg = 0.5 * (c[n - 1 + d] + std::conj(c[n - 1 - d]));
    c[n - 1 + d] = avg;
    c[n - 1 - d] = std::conj(avg);
  }
  c[n - 1] = Complex(c[n - 1].real(), 0.0);
  return AutocorrCoeffs{std::move(c)};
}

AutocorrCoeffs interpolate_sq_modulus(const std::vector<double>& sq_samples, std::size_t N) {
  if (N == 0 || sq_samples.size() != 2 * N - 1) {
    throw InvalidArgument("expected " + std::to_string(N == 0 ? 0 : 2 * N - 1) +
                          " samples, got " + std::to_string(sq_samples.size()));
  }
  return interpolate_sq_modulus(sq_samples);
}

SampleArrays sample_measurements(const TrigPoly& p, int M, DerivKind kind) {
  if (M <= 0) throw InvalidArgument("M must be positive");
  const double md = static_cast<double>(M);
  const TrigPoly dp = derivative(p);
  SampleArrays out;
  out.modulus.resize(static_cast<std::size_t>(M));
  out.derivative.resize(static_cast<std::size_t>(M));
  std::vector<Complex> values(static_cast<std::size_t>(M));
  for (int k = 0; k < M; ++k) values[k] = eval(p, k / md);
  for (int k = 0; k < M; ++k) {
    out.modulus[k] = std::abs(values[k]);
    if (kind == DerivKind::kContinuous) {
      out.derivative[k] = std::abs(eval(dp, k / md));
    } else {
      // P is 1-periodic, so P((k+1)/M) at k = M-1 is P(0)
      out.derivative[k] = std::abs(values[(k + 1) % M] - values[k]);
    }
  }
  return out;
}

double max_sample_gap(const SampleArrays& x, const SampleArrays& y) {
  if (x.modulus.size() != y.modulus.size() || x.derivative.size() != y.derivative.size()) {
    throw InvalidArgument("sample arrays differ in length");
  }
  double gap = 0.0;
  for (std::size_t k = 0; k < x.modulus.size(); ++k) {
    gap = std::max(gap, std::abs(x.modulus[k] - y.modulus[k]));
  }
  for (std::size_t k = 0; k < x.derivative.size(); ++k) {
    gap = std::max(gap, std::abs(x.derivative[k] - y.derivative[k]));
  }
  return gap;
}

namespace {

std::pair<TrigPoly, TrigPoly> lifted_pair(int N, Complex top, Complex constant) {
  if (N < 3 || N % 2 == 0) {
    throw InvalidArgument("counterexamples need odd N >= 3, got " + std::to_string(N));
  }
  const std::size_t m = static_cast<std::size_t>(N - 1) / 2;
  std::vector<Complex> p(static_cast<std::size_t>(N), Complex(0.0, 0.0));
  std::vector<Complex> q(static_cast<std::size_t>(N), Complex(0.0, 0.0));
  p[m] = 1.0;
  q[2 * m] = top;
  q[0] = constant;
  return {TrigPoly(std::move(p)), TrigPoly(std::move(q))};
}

}  // namespace

std::pair<TrigPoly, TrigPoly> counterexample_continuous(int N) {
  return lifted_pair(N, Complex(0.5, 0.0), Complex(0.0, 0.5 * std::sqrt(3.0)));
}

std::pair<TrigPoly, TrigPoly> counterexample_discrete(int N) {
  const double r = 1.0 / std::sqrt(2.0);
  return lifted_pair(N, Complex(r, 0.0), Complex(0.0, r));
}

EquivalenceVerdict classify_poly_pair(const TrigPoly& p, const TrigPoly& q, double tol) {
  const std::size_t n = std::max(p.N(), q.N());
  const TrigPoly a = p.padded(n);
  const TrigPoly b = q.padded(n);
  Complex inner(0.0, 0.0);
  double pn = 0.0;
  double qn = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    inner += std::conj(a[j]) * b[j];
    pn += std::norm(a[j]);
    qn += std::norm(b[j]);
  }
  const Complex lambda = std::abs(inner) == 0.0 ? Complex(1.0, 0.0) : inner / std::abs(inner);
  if (pn == 0.0) {
    if (qn == 0.0) return {EquivalenceKind::kGlobalPhase, Complex(1.0, 0.0), 0.0};
    return {EquivalenceKind::kDistinct, lambda, 1.0};
  }
  double diff = 0.0;
  for (std::size_t j = 0; j < n; ++j) diff += std::norm(b[j] - lambda * a[j]);
  const double residual = std::sqrt(diff / pn);
  if (residual <= tol) return {EquivalenceKind::kGlobalPhase, lambda, residual};
  return {EquivalenceKind::kDistinct, lambda, residual};
}

std::vector<Root> roots_on_plane(const TrigPoly& p, double cluster_tol) {
  const int d = p.degree();
  if (d < 0) throw InvalidArgument("the zero polynomial has no finite root set");
  const int k = lowest_nonzero(p);
  const int m = d - k;

  std::vector<Complex> eig;
  if (m > 0) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) companion(i, m - 1) = -p[k + i] / p[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw InvalidArgument("companion eigen-solver failed");
    for (int i = 0; i < m; ++i) eig.push_back(solver.eigenvalues()(i));

    // Newton polishing on the original polynomial, kept only if it helps.
    const TrigPoly dp = [&] {
      std::vector<Complex> c(p.N(), Complex(0.0, 0.0));
      for (std::size_t j = 1; j < p.N(); ++j) c[j - 1] = static_cast<double>(j) * p[j];
      return TrigPoly(std::move(c));
    }();
    for (Complex& z : eig) {
      for (int it = 0; it < 3; ++it) {
        const Complex f = eval_algebraic(p, z);
        const Complex df = eval_algebraic(dp, z);
        if (df == Complex(0.0, 0.0)) break;
        const Complex next = z - f / df;
        if (!(std::abs(eval_algebraic(p, next)) < std::abs(f))) break;
        z = next;
      }
    }
  }

  std::vector<Root> roots;
  std::vector<Complex> sums;
  for (const Complex& z : eig) {
    bool merged = false;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      if (close(z, roots[r].value, cluster_tol)) {
        sums[r] += z;
        ++roots[r].multiplicity;
        roots[r].value = sums[r] / static_cast<double>(roots[r].multiplicity);
        merged = true;
        break;
      }
    }
    if (!merged) {
      roots.push_back({z, 1});
      sums.push_back(z);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    const double ma = std::abs(a.value);
    const double mb = std::abs(b.value);
    if (ma != mb) return ma < mb;
    return std::arg(a.value) < std::arg(b.value);
  });
  if (k > 0) roots.insert(roots.begin(), Root{Complex(0.0, 0.0), k});
  return roots;
}

std::vector<Complex> nonzero_roots(const TrigPoly& p) {
  std::vector<Complex> out;
  for (const Root& r : roots_on_plane(p)) {
    if (r.value == Complex(0.0, 0.0)) continue;
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.value);
  }
  return out;
}

std::size_t RootPairing::reflection_count() const {
  return static_cast<std::size_t>(
      std::count_if(matches.begin(), matches.end(), [](const RootMatch& m) { return m.reflected; }));
}

RootPairing root_pairing_check(const TrigPoly& p, const TrigPoly& q, double tol) {
  const std::size_t n = std::max(p.N(), q.N());
  const AutocorrCoeffs cp = autocorrelation(p.padded(n));
  const AutocorrCoeffs cq = autocorrelation(q.padded(n));
  double scale = 1.0;
  double gap = 0.0;
  for (std::size_t l = 0; l < cp.c.size(); ++l) {
    scale = std::max({scale, std::abs(cp.c[l]), std::abs(cq.c[l])});
    gap = std::max(gap, std::abs(cp.c[l] - cq.c[l]));
  }
  if (gap > 1e-8 * scale) {
    throw NotCircleEqual("|P| and |Q| differ on the unit circle (autocorrelation gap " +
                         std::to_string(gap) + ")");
  }
  if (p.is_zero() || q.is_zero()) return RootPairing{};

  const std::vector<Complex> xs = nonzero_roots(p);
  const std::vector<Complex> ys = nonzero_roots(q);
  if (xs.size() != ys.size()) {
    throw NotCircleEqual("P has " + std::to_string(xs.size()) + " nonzero roots, Q has " +
                         std::to_string(ys.size()));
  }
  std::vector<bool> used(xs.size(), false);
  std::vector<int> partner(ys.size(), -1);
  std::vector<bool> reflected(ys.size(), false);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (partner[i] >= 0) continue;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (used[j]) continue;
        const Complex target = pass == 0 ? xs[j] : 1.0 / std::conj(xs[j]);
        if (close(ys[i], target, tol)) {
          used[j] = true;
          partner[i] = static_cast<int>(j);
          reflected[i] = pass == 1;
          break;
        }
      }
    }
  }
  RootPairing out;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (partner[i] < 0) {
      throw NotCircleEqual("root (" + std::to_string(ys[i].real()) + ", " +
                           std::to_string(ys[i].imag()) + ") of Q has no partner in P");
    }
    out.matches.push_back({ys[i], xs[partner[i]], reflected[i]});
  }
  out.monomial_offset = lowest_nonzero(q) - lowest_nonzero(p);
  return out;
}

}  // namespace phaseret
