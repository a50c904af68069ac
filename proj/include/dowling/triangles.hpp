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

namespace dowling::triangles {

// Every doubly-indexed family, each with a cheap primary path (the
// defining recurrence) and at least one independent explicit route used
// by the verification suites. Entries outside 0 <= k <= n are zero.
// Row caches behind these accessors are process-wide and thread safe;
// returned values are copies of immutable cached entries.

/// Signed Stirling numbers of the first kind, s(n+1,k) = s(n,k-1) - n s(n,k).
Int stirling1(int n, int k);

/// Stirling numbers of the second kind, S(n+1,k) = k S(n,k) + S(n,k-1).
Int stirling2(int n, int k);

/// Alternating-sum route: (1/k!) sum_j (-1)^(k-j) C(k,j) j^n.
Int stirling2_explicit(int n, int k);

/// Eulerian numbers with <n,n> = delta(n,0); classical two-term recurrence.
Int eulerian(int n, int k);

/// Signed Whitney numbers of the first kind (coefficients of the
/// characteristic polynomial), w(n,k) = w(n-1,k-1) - (1+m(n-1)) w(n-1,k).
Int whitney1(int m, int n, int k);

/// Explicit route: sum_i (-1)^(i-k) C(i,k) m^(n-i) s(n,i).
Int whitney1_explicit(int m, int n, int k);

/// Unsigned companion recursion on absolute values,
/// w(n,k) = (1+m(n-1)) w(n-1,k) + w(n-1,k-1).
Int whitney1_abs(int m, int n, int k);

/// Whitney numbers of the second kind, W(n,k) = (1+mk) W(n-1,k) + W(n-1,k-1).
Int whitney2(int m, int n, int k);

/// Binomial-sum route: sum_i C(n,i) m^(i-k) S(i,k).
Int whitney2_explicit_binom(int m, int n, int k);

/// Alternating-sum route with the division by m^k k! asserted exact.
Int whitney2_explicit_alt(int m, int n, int k);

/// r-Stirling numbers of the second kind (three-case recursion); the
/// index region n < r is rejected.
Int r_stirling2(int r, int n, int k);

/// r-Whitney numbers of the second kind via ordinary Stirling numbers:
/// sum_j C(n,j) m^(j-k) r^(n-j) S(j,k).
Int r_whitney2(int m, int r, int n, int k);

/// Eulerian-Dowling numbers, sum_i (-1)^(n-i-k) i! C(n-i,k) W(n,i).
Int eulerian_dowling(int m, int n, int k);

/// Gessel auxiliary triangle entry R(n,k) under a specialization where
/// exactly one of m, t may be a formal-variable polynomial. Primary path
/// is the three-term recurrence
///   R(n+1,k) = R(n,k-1) - ((1+t)+mn) R(n,k) - mnt R(n-1,k).
Scalar r_triangle(int n, int k, const Scalar& m_spec, const Scalar& t_spec);

/// Rows 0..n_max of the same triangle.
std::vector<std::vector<Scalar>> r_triangle_rows(int n_max, const Scalar& m_spec,
                                                 const Scalar& t_spec);

/// Explicit route for concrete m: sum_j (-1)^j C(n,j) w_m(n-j,k) t^j.
Scalar r_triangle_explicit(int n, int k, int m, const Scalar& t_spec);

}  // namespace dowling::triangles
