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

#include <optional>
#include <string>
#include <variant>

#include "dowling/poly.hpp"

namespace dowling {

/// Element of the working ring: an exact rational or a univariate
/// polynomial over exact rationals. Lets triangles and transforms run
/// over numbers or over one formal parameter with the same code.
class Scalar {
 public:
  Scalar() : v_(Rat(0)) {}
  Scalar(Rat q) : v_(std::move(q)) {}        // NOLINT: implicit by design
  Scalar(const Int& n) : v_(Rat(n)) {}       // NOLINT
  Scalar(long n) : v_(Rat(n)) {}             // NOLINT
  Scalar(int n) : v_(Rat(n)) {}              // NOLINT
  Scalar(Poly p);                            // NOLINT: constant polys demote to Rat

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  bool is_poly() const { return !is_rational(); }
  bool is_zero() const;

  const Rat& rational() const;  // raises unless rational
  const Poly& poly() const;     // raises unless polynomial
  std::optional<Var> var() const;

  /// View as a polynomial in the given variable (rationals become
  /// constants; a polynomial must already carry that tag).
  Poly as_poly(Var v) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  std::variant<Rat, Poly> v_;
};

/// Quotient asserted exact (rational division, or polynomial division with
/// zero remainder); the fraction-free determinant relies on this.
Scalar exact_div(const Scalar& a, const Scalar& b);

Scalar pow(const Scalar& base, int e);

/// v(v-1)...(v-n+1); the empty product for n = 0.
Scalar falling_factorial(const Scalar& v, int n);

}  // namespace dowling
