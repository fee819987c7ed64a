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

#ifndef PHASERET_ERRORS_HPP_
#define PHASERET_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace phaseret {

// Bad input: wrong sizes, incompatible grids, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The data carries no usable information, e.g. an identically vanishing
// spectrum.
class DegenerateSignal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force enumeration would exceed its size cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two polynomials were expected to share their modulus on the unit circle
// but do not.
class NotCircleEqual : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phaseret

#endif  // PHASERET_ERRORS_HPP_
