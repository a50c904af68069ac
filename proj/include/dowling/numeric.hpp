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

#include <gmpxx.h>

#include <string>

namespace dowling {

// Exact arithmetic backbone. Every value in the library is either an
// arbitrary-precision integer, a rational in lowest terms with positive
// denominator (mpq_class maintains both invariants through arithmetic),
// or a polynomial over such rationals.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den reduced to lowest terms, denominator made positive.
Rat ratio(const Int& num, const Int& den);

Int factorial(int n);

/// C(n,k); zero when k < 0 or k > n. Negative n is rejected.
Int binomial(int n, int k);

Int pow_int(const Int& base, int exp);
Rat pow_rat(const Rat& base, int exp);

bool is_integer(const Rat& q);

/// Rational-to-integer conversion asserted exact.
Int to_int(const Rat& q);

/// Exact integer quotient; raises divisibility_failure when b does not divide a.
Int exact_div(const Int& a, const Int& b);

std::string to_string(const Int& v);
std::string to_string(const Rat& q);  // "p" or "p/q"

/// Parses "p" or "p/q" with optional sign; raises on malformed input.
Rat parse_rational(const std::string& text);

}  // namespace dowling
