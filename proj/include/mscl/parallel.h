// Copyright 2026 The MSCL Authors
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
#ifndef MSCL_PARALLEL_H_
#define MSCL_PARALLEL_H_

#include <functional>

namespace mscl {

// Runs body(i) for i in [0, count) on up to |threads| workers (0 = hardware
// concurrency). Each index runs exactly once; callers write results into
// per-index slots so output is independent of scheduling. The first
// exception thrown by any body is rethrown after all workers join.
void ParallelFor(int count, int threads, const std::function<void(int)>& body);

}  // namespace mscl

#endif  // MSCL_PARALLEL_H_
