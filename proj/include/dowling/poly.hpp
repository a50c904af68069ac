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

#include <string>
#include <vector>

#include "dowling/numeric.hpp"

namespace dowling {

/// Formal variable tags. A polynomial in x is never silently combined
/// with one in m; constants are the only tag-agnostic values.
enum class Var : unsigned char { x, upsilon, m, t, u };

const char* var_name(Var v);  // "x", "v", "m", "t", "u"

/// Dense univariate polynomial over exact rationals.
///
/// Invariants: the coefficient vector never ends in a zero entry, and the
/// zero polynomial is the empty vector (degree() reports -1 for it).
class Poly {
 public:
  explicit Poly(Var var) : var_(var) {}                // zero polynomial
  Poly(Var var, std::vector<Rat> coeffs);              // coeffs[k] multiplies var^k
  static Poly constant(Var var, const Rat& c);
  static Poly variable(Var var);                       // the monomial var^1
  static Poly monomial(Var var, const Rat& c, int k);  // c * var^k

  Var var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 marks zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rat coeff(int k) const;  // 0 outside the stored range
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rat& c);
  friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }

  /// Mathematical equality: constants compare across tags, anything of
  /// positive degree requires matching tags.
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rat eval(const Rat& v) const;

  /// Substitution var := c * var; coefficient k picks up a factor c^k.
  Poly var_scale(const Rat& c) const;

  /// Multiplication by var^r.
  Poly times_xpow(int r) const;

  /// Exact division by var^r; raises non_zero_remainder when one of the
  /// r lowest coefficients is nonzero.
  Poly div_xpow(int r) const;

  Poly pow(int e) const;

  /// Same coefficients under a different variable name (substitution of
  /// the formal variable).
  Poly retagged(Var var) const;

  /// Canonical serialization, highest degree first: "x^4+6x^3+7x^2+x",
  /// "-2m^2-6m-8", "(3/2)x^2", "0".
  std::string str() const;

 private:
  void trim();
  Var var_;
  std::vector<Rat> coeffs_;
};

/// Exact polynomial quotient; raises exact_division_failed when b does not
/// divide a (used by the fraction-free determinant steps).
Poly exact_div(const Poly& a, const Poly& b);

/// Sum over k of p_k (x+a)^k x^{n-k}; requires degree(p) <= n.
Poly binomial_homogenize(const Poly& p, int n, const Rat& a);

}  // namespace dowling
