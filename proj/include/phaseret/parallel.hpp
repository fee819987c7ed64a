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

#ifndef PHASERET_PARALLEL_HPP_
#define PHASERET_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace phaseret {

/// Worker count: hardware concurrency, capped by the PHASERET_THREADS
/// environment variable when it holds a positive integer.
unsigned worker_count();

/// Calls fn(i) for every i in [0, count) on up to worker_count() threads.
/// Indices are handed out in contiguous blocks; the first exception thrown
/// by any call is rethrown after all threads join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace phaseret

#endif  // PHASERET_PARALLEL_HPP_
