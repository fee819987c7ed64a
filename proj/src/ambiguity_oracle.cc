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

#include "phaseret/ambiguity_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "phaseret/errors.hpp"
#include "phaseret/parallel.hpp"

namespace phaseret {
namespace {

constexpr int kMaxDegree = 20;
constexpr double kCircleTol = 1e-8;
constexpr double kDedupTol = 1e-10;

bool on_circle(Complex x) { return std::abs(std::abs(x) - 1.0) <= kCircleTol; }

TrigPoly flip_with_roots(const TrigPoly& p, const std::vector<Complex>& roots,
                         const FlipSet& flips) {
  if (flips.indices.empty()) return p;
  std::vector<bool> flipped(roots.size(), false);
  double scale = 1.0;
  for (std::size_t i : flips.indices) {
    if (i >= roots.size()) {
      throw InvalidArgument("flip index " + std::to_string(i) + " out of range (" +
                            std::to_string(roots.size()) + " nonzero roots)");
    }
    if (flipped[i]) throw InvalidArgument("flip index " + std::to_string(i) + " repeated");
    if (on_circle(roots[i])) {
      throw InvalidArgument("root " + std::to_string(i) + " lies on the unit circle");
    }
    flipped[i] = true;
    scale *= std::abs(roots[i]);
  }
  int low = 0;
  while (p[low] == Complex(0.0, 0.0)) ++low;
  const Complex lead = p[static_cast<std::size_t>(p.degree())];

  std::vector<Complex> prod{Complex(1.0, 0.0)};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Complex r = flipped[i] ? 1.0 / std::conj(roots[i]) : roots[i];
    prod.push_back(Complex(0.0, 0.0));
    for (std::size_t j = prod.size() - 1; j > 0; --j) prod[j] = prod[j - 1] - r * prod[j];
    prod[0] = -r * prod[0];
  }
  std::vector<Complex> c(p.N(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < prod.size(); ++j) c[low + j] = lead * scale * prod[j];
  return TrigPoly(std::move(c));
}

std::vector<std::size_t> flippable_from_roots(const std::vector<Complex>& roots) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!on_circle(roots[i])) out.push_back(i);
  }
  return out;
}

void collect_subsets(const std::vector<std::size_t>& pool, std::size_t start,
                     std::vector<std::size_t>& current, std::vector<FlipSet>& out) {
  out.push_back(FlipSet{current});
  for (std::size_t i = start; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    collect_subsets(pool, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

TrigPoly zero_flip(const TrigPoly& p, const FlipSet& flips) {
  if (flips.indices.empty()) return p;
  if (p.is_zero()) throw InvalidArgument("cannot flip roots of the zero polynomial");
  return flip_with_roots(p, nonzero_roots(p), flips);
}

std::vector<std::size_t> flippable_roots(const TrigPoly& p) {
  return flippable_from_roots(nonzero_roots(p));
}

std::vector<FlipSet> enumerate_flip_sets(const TrigPoly& p) {
  if (p.degree() > kMaxDegree) {
    throw ResourceLimit("degree " + std::to_string(p.degree()) + " exceeds the enumeration cap of " +
                        std::to_string(kMaxDegree));
  }
  const std::vector<std::size_t> pool = flippable_roots(p);
  std::vector<FlipSet> out;
  out.reserve(std::size_t{1} << pool.size());
  std::vector<std::size_t> current;
  collect_subsets(pool, 0, current, out);
  return out;
}

std::vector<TrigPoly> enumerate_ambiguities(const TrigPoly& p) {
  if (p.degree() > kMaxDegree) {
    throw ResourceLimit("degree " + std::to_string(p.degree()) + " exceeds the enumeration cap of " +
                        std::to_string(kMaxDegree));
  }
  const std::vector<Complex> roots = nonzero_roots(p);
  const std::vector<std::size_t> pool = flippable_from_roots(roots);
  std::vector<FlipSet> sets;
  std::vector<std::size_t> current;
  collect_subsets(pool, 0, current, sets);

  std::vector<TrigPoly> all(sets.size(), p);
  parallel_for(sets.size(), [&](std::size_t i) { all[i] = flip_with_roots(p, roots, sets[i]); });

  // phase-invariant signature to bring equivalent candidates next to each other
  std::vector<double> key(all.size(), 0.0);
  double key_scale = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all[i].N(); ++j) {
      key[i] += static_cast<double>(j + 1) * std::norm(all[i][j]);
    }
    key_scale = std::max(key_scale, key[i]);
  }
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&key](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  const double window = 1e-8 * key_scale;
  std::vector<bool> keep(all.size(), true);
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size() && key[order[b]] - key[order[a]] <= window; ++b) {
      const std::size_t i = std::min(order[a], order[b]);
      const std::size_t j = std::max(order[a], order[b]);
      if (!keep[i] || !keep[j]) continue;
      if (classify_poly_pair(all[i], all[j], kDedupTol).kind == EquivalenceKind::kGlobalPhase) {
        keep[j] = false;
      }
    }
  }
  std::vector<TrigPoly> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) out.push_back(all[i]);
  }
  return out;
}

std::vector<TrigPoly> filter_by_measurements(const std::vector<TrigPoly>& candidates, int M,
                                             DerivKind kind, const SampleArrays& reference,
                                             double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("filter tolerance must be positive");
  if (M <= 0 || reference.modulus.size() != static_cast<std::size_t>(M) ||
      reference.derivative.size() != static_cast<std::size_t>(M)) {
    throw InvalidArgument("reference arrays do not have M = " + std::to_string(M) + " samples");
  }
  std::vector<TrigPoly> out;
  for (const TrigPoly& q : candidates) {
    if (max_sample_gap(sample_measurements(q, M, kind), reference) <= tol) out.push_back(q);
  }
  return out;
}

}  // namespace phaseret
