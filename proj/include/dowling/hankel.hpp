/* Copyright 2026 The Dowling Project Developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <vector>

#include "dowling/scalar.hpp"

namespace dowling {

/// det(entries[i+j]) for 0 <= i,j <= n, by fraction-free (Bareiss)
/// elimination; every interior division is asserted exact. Needs at
/// least 2n+1 entries.
Scalar hankel_det(const std::vector<Scalar>& entries, int n);

/// General square determinant over Scalars, same elimination.
Scalar det(std::vector<std::vector<Scalar>> mat);

}  // namespace dowling
