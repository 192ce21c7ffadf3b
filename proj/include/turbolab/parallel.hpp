// Copyright 2026 The turbolab Authors
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

#ifndef TURBOLAB_PARALLEL_HPP
#define TURBOLAB_PARALLEL_HPP

namespace turbolab {

/// Worker count for parallel kernels. An explicit override wins; otherwise
/// the LAB_THREADS environment variable (0 or unset = OpenMP default).
/// Throws std::invalid_argument when LAB_THREADS is not a nonnegative integer.
int lab_threads();

/// 0 clears the override.
void set_thread_override(int threads);

}  // namespace turbolab

#endif
