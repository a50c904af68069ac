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

#include "dowling/poly.hpp"

namespace dowling::families {

/// Characteristic polynomial of the rank-n Dowling lattice over a group
/// of order m: m^n ((v-1)/m)_n, expanded in v (monic, degree n).
Poly char_poly(int m, int n);

/// Bell polynomial, sum_k S(n,k) x^k.
Poly bell(int n);

/// Geometric polynomial, sum_k k! S(n,k) x^k (Fubini numbers at x = 1).
Poly geometric(int n);

/// Eulerian polynomial, delta(n,0) + sum_{k>=1} <n,k-1> x^k.
Poly eulerian_poly(int n);

/// Dowling polynomial, sum_k W_m(n,k) x^k.
Poly dowling(int m, int n);

/// Tanny-Dowling polynomial, sum_k k! W_m(n,k) x^k.
Poly tanny_dowling(int m, int n);

/// Eulerian-Dowling polynomial, sum_i i! W_m(n,i) (x-1)^(n-i).
Poly euler_dowling_poly(int m, int n);

/// r-Bell polynomial, sum_k {n+r, k+r}_r x^k.
Poly r_bell(int r, int n);

/// r-Dowling polynomial, sum_k W_{m,r}(n,k) x^k.
Poly r_dowling(int m, int r, int n);

/// Four-parameter Mansour-Shattuck sequence by its defining recursion
/// C_n(a,b,c,d) = ab C_{n-1}(a,b,c,d) + c C_{n-1}(a+d,b,c,d), C_0 = 1.
Rat ms_c(int n, const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// Bell-polynomial closed form b^n sum_j a^(n-j) d^j C(n,j) phi_j(c/(bd));
/// requires bd != 0.
Rat ms_c_bell_formula(int n, const Rat& a, const Rat& b, const Rat& c, const Rat& d);

}  // namespace dowling::families
