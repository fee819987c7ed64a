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

#ifndef PHASERET_TRIGPOLY_HPP_
#define PHASERET_TRIGPOLY_HPP_

#include <complex>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "phaseret/equivalence.hpp"

namespace phaseret {

using Complex = std::complex<double>;

/// P(x) = sum_{j<N} coeffs[j] e^{2 pi i j x}. Only nonnegative frequencies.
class TrigPoly {
 public:
  /// Throws InvalidArgument when coeffs is empty.
  explicit TrigPoly(std::vector<Complex> coeffs);

  std::size_t N() const { return coeffs_.size(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t j) const { return coeffs_[j]; }

  /// Copy zero-padded to length n (n >= N()).
  TrigPoly padded(std::size_t n) const;
  /// Highest index with a nonzero coefficient, or -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  bool operator==(const TrigPoly& other) const = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Coefficients c_0..c_{2N-2} with |P(x)|^2 = e^{-2 pi i (N-1) x} sum c_l e^{2 pi i l x}.
struct AutocorrCoeffs {
  std::vector<Complex> c;

  std::size_t N() const { return (c.size() + 1) / 2; }
};

/// Coefficients drawn independently from the standard complex normal law.
TrigPoly random_trigpoly(std::size_t N, std::mt19937_64& rng);

Complex eval(const TrigPoly& p, double x);
/// sum coeffs[j] z^j at an arbitrary complex point.
Complex eval_algebraic(const TrigPoly& p, Complex z);

/// coeffs[j] -> 2 pi i j coeffs[j].
TrigPoly derivative(const TrigPoly& p);

AutocorrCoeffs autocorrelation(const TrigPoly& p);

/// |P(x)|^2 from the autocorrelation coefficients.
double eval_sq_modulus(const AutocorrCoeffs& c, double x);

/// Recovers the autocorrelation from the 2N-1 samples |P(k/(2N-1))|^2.
/// The sample count must be odd.
AutocorrCoeffs interpolate_sq_modulus(const std::vector<double>& sq_samples);
/// Same, additionally requiring exactly 2N-1 samples.
AutocorrCoeffs interpolate_sq_modulus(const std::vector<double>& sq_samples, std::size_t N);

enum class DerivKind {
  // |P'(k/M)|
  kContinuous,
  // |P((k+1)/M) - P(k/M)|
  kDiscrete,
};

struct SampleArrays {
  std::vector<double> modulus;     // |P(k/M)|
  std::vector<double> derivative;  // per DerivKind
};

SampleArrays sample_measurements(const TrigPoly& p, int M, DerivKind kind);

/// sup-norm distance between two sample sets of equal size.
double max_sample_gap(const SampleArrays& x, const SampleArrays& y);

/// For N = 2m+1: (z^m, (z^{2m} + sqrt(3) i) / 2) as coefficient vectors in C^N.
/// They share |P| and |P'| at the 2N-2 points k/(2N-2).
std::pair<TrigPoly, TrigPoly> counterexample_continuous(int N);

/// For N = 2m+1: (z^m, (z^{2m} + i) / sqrt(2)). They share |P| and the
/// discrete differences at the 2N-2 points k/(2N-2).
std::pair<TrigPoly, TrigPoly> counterexample_discrete(int N);

/// GlobalPhase when ||Q - lambda P|| <= tol ||P|| for lambda the phase of
/// <P, Q>, otherwise Distinct. The shorter polynomial is zero-padded.
EquivalenceVerdict classify_poly_pair(const TrigPoly& p, const TrigPoly& q, double tol = 1e-10);

struct Root {
  Complex value;
  int multiplicity = 1;
};

/// Roots of sum coeffs[j] z^j, including z = 0, from companion-matrix
/// eigenvalues. Roots closer than cluster_tol (relative) are merged.
/// Multiplicities add up to degree(). Throws InvalidArgument for P = 0.
std::vector<Root> roots_on_plane(const TrigPoly& p, double cluster_tol = 1e-8);

/// Nonzero roots repeated by multiplicity, in the order of roots_on_plane.
std::vector<Complex> nonzero_roots(const TrigPoly& p);

struct RootMatch {
  Complex q_root;
  Complex p_root;
  bool reflected = false;  // q_root ~ 1 / conj(p_root) rather than p_root
};

struct RootPairing {
  std::vector<RootMatch> matches;
  // multiplicity of 0 as a root of Q minus that of P
  int monomial_offset = 0;

  std::size_t reflection_count() const;
};

/// Checks |P| = |Q| on the unit circle through the autocorrelations, then
/// pairs each nonzero root of Q with a root of P, either identical or
/// reflected across the circle. Throws NotCircleEqual on failure.
RootPairing root_pairing_check(const TrigPoly& p, const TrigPoly& q, double tol = 1e-6);

}  // namespace phaseret

#endif  // PHASERET_TRIGPOLY_HPP_
