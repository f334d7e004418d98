// Copyright 2026 The usynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef USYNTH_PARALLEL_HPP_
#define USYNTH_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace usynth {

/// Worker count: hardware concurrency, capped by USYNTH_THREADS when set to a
/// positive integer. Never less than one.
std::size_t worker_count();

/// Calls fn(i) for i in [0, n) across worker_count() threads. Each index is
/// visited exactly once; results written by index are deterministic. The
/// first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

}  // namespace usynth

#endif  // USYNTH_PARALLEL_HPP_
