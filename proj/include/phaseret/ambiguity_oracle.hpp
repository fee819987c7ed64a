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

#ifndef PHASERET_AMBIGUITY_ORACLE_HPP_
#define PHASERET_AMBIGUITY_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "phaseret/trigpoly.hpp"

namespace phaseret {

/// Indices into nonzero_roots(P) of the roots to reflect across the unit
/// circle. Only roots off the circle may be flipped.
struct FlipSet {
  std::vector<std::size_t> indices;
};

/// Replaces each selected root x by 1/conj(x) and rescales by |x|, so that
/// |Q| = |P| on the unit circle. The zero root and the degree are kept.
/// Throws InvalidArgument for a bad index or a root on the circle.
TrigPoly zero_flip(const TrigPoly& p, const FlipSet& flips);

/// Indices (into nonzero_roots(P)) of roots at distance > 1e-8 from the circle.
std::vector<std::size_t> flippable_roots(const TrigPoly& p);

/// All 2^K subsets of the K flippable roots, in lexicographic order of their
/// sorted index lists (the empty set first).
std::vector<FlipSet> enumerate_flip_sets(const TrigPoly& p);

/// Zero-flip results for every flip set, deduplicated up to a global phase
/// (first occurrence kept, order of enumerate_flip_sets). The first element
/// is P itself. Throws ResourceLimit when degree(P) > 20 and InvalidArgument
/// for P = 0.
std::vector<TrigPoly> enumerate_ambiguities(const TrigPoly& p);

/// Candidates whose samples at M points match `reference` within tol in the
/// sup norm.
std::vector<TrigPoly> filter_by_measurements(const std::vector<TrigPoly>& candidates, int M,
                                             DerivKind kind, const SampleArrays& reference,
                                             double tol);

}  // namespace phaseret

#endif  // PHASERET_AMBIGUITY_ORACLE_HPP_
