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

#ifndef PHASERET_EQUIVALENCE_HPP_
#define PHASERET_EQUIVALENCE_HPP_

#include <complex>
#include <string>

namespace phaseret {

enum class EquivalenceKind { kGlobalPhase, kConjugateReflection, kDistinct };

std::string to_string(EquivalenceKind kind);
/// Inverse of to_string; throws InvalidArgument on unknown names.
EquivalenceKind equivalence_kind_from_string(const std::string& name);

/// Outcome of comparing two signals. `constant` is unimodular for
/// non-Distinct verdicts; `residual` is the relative misfit of the best
/// matching branch.
struct EquivalenceVerdict {
  EquivalenceKind kind = EquivalenceKind::kDistinct;
  std::complex<double> constant{1.0, 0.0};
  double residual = 0.0;
};

}  // namespace phaseret

#endif  // PHASERET_EQUIVALENCE_HPP_
