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

#include <utility>
#include <vector>

#include "dowling/poly.hpp"
#include "dowling/scalar.hpp"

namespace dowling::transforms {

using Seq = std::vector<Scalar>;

enum class Direction { forward, inverse };

/// Generalized binomial transform with ratio a:
///   forward  beta_n  = sum_k C(n,k) a^(n-k) alpha_k
///   inverse  alpha_n = sum_k C(n,k) (-1)^(n-k) a^(n-k) beta_k
/// The two directions are mutually inverse for every a.
Seq binomial_transform(const Seq& s, const Rat& a, Direction dir);

/// Both sides of the Chen two-sided identity for a binomial-transform
/// pair (alpha, beta):
///   left  = sum_{k<=l} C(l,k) C(n+k,s) alpha_{n+k-s}
///   right = sum_{k<=n} C(n,k) C(l+k,s) (-1)^(n-k) beta_{l+k-s}
/// Callers compare; equality is expected only when beta is the plain
/// (a = 1) forward transform of alpha.
std::pair<Scalar, Scalar> simons_sides(const Seq& alpha, const Seq& beta, int n, int l, int s);

/// Coefficient-k weighting by k!; the formal realization of
/// integral_0^inf p(lambda x) e^(-lambda) d lambda.
Poly borel_weight(const Poly& p);

/// Hankel transform: entry n is the order-n Hankel determinant of the
/// sequence. Needs 2N+1 entries.
Seq hankel_transform(const Seq& entries, int n_max);

}  // namespace dowling::transforms
