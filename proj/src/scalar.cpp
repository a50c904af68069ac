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
#include "dowling/scalar.hpp"

#include "dowling/error.hpp"

namespace dowling {

// Canonical form: a Scalar holds a Poly only when its degree is >= 1, so
// rational-vs-constant comparisons never miss.
Scalar::Scalar(Poly p) {
  if (p.is_constant())
    v_ = p.coeff(0);
  else
    v_ = std::move(p);
}

bool Scalar::is_zero() const {
  if (is_rational()) return std::get<Rat>(v_) == 0;
  return std::get<Poly>(v_).is_zero();
}

const Rat& Scalar::rational() const {
  if (!is_rational()) raise(Errc::tag_mismatch, "Scalar: polynomial where a rational was required");
  return std::get<Rat>(v_);
}

const Poly& Scalar::poly() const {
  if (!is_poly()) raise(Errc::tag_mismatch, "Scalar: rational where a polynomial was required");
  return std::get<Poly>(v_);
}

std::optional<Var> Scalar::var() const {
  if (is_rational()) return std::nullopt;
  return std::get<Poly>(v_).var();
}

Poly Scalar::as_poly(Var v) const {
  if (is_rational()) return Poly::constant(v, std::get<Rat>(v_));
  const Poly& p = std::get<Poly>(v_);
  if (p.var() != v)
    raise(Errc::tag_mismatch, std::string("Scalar: expected variable ") + var_name(v) + ", found " +
                                  var_name(p.var()));
  return p;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rat(-std::get<Rat>(v_)));
  return Scalar(-std::get<Poly>(v_));
}

namespace {

template <typename RatOp, typename PolyOp>
Scalar combine(const Scalar& a, const Scalar& b, RatOp rop, PolyOp pop) {
  if (a.is_rational() && b.is_rational()) return Scalar(rop(a.rational(), b.rational()));
  if (a.is_poly() && b.is_poly()) return Scalar(pop(a.poly(), b.poly()));
  if (a.is_poly()) return Scalar(pop(a.poly(), Poly::constant(a.poly().var(), b.rational())));
  return Scalar(pop(Poly::constant(b.poly().var(), a.rational()), b.poly()));
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  *this = combine(*this, o, [](const Rat& x, const Rat& y) { return Rat(x + y); },
                  [](const Poly& x, const Poly& y) { return x + y; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  *this = combine(*this, o, [](const Rat& x, const Rat& y) { return Rat(x - y); },
                  [](const Poly& x, const Poly& y) { return x - y; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = combine(*this, o, [](const Rat& x, const Rat& y) { return Rat(x * y); },
                  [](const Poly& x, const Poly& y) { return x * y; });
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;  // canonical form: degrees differ
  if (a.is_rational()) return a.rational() == b.rational();
  return a.poly() == b.poly();
}

std::string Scalar::str() const {
  if (is_rational()) return to_string(std::get<Rat>(v_));
  return std::get<Poly>(v_).str();
}

Scalar exact_div(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) raise(Errc::zero_parameter, "exact_div: zero divisor");
  if (b.is_rational()) {
    if (a.is_rational()) return Scalar(Rat(a.rational() / b.rational()));
    return Scalar(a.poly() * Rat(1 / b.rational()));
  }
  if (a.is_rational()) {
    if (a.rational() == 0) return Scalar(Rat(0));
    raise(Errc::exact_division_failed, "exact_div: polynomial does not divide rational");
  }
  return Scalar(exact_div(a.poly(), b.poly()));
}

Scalar pow(const Scalar& base, int e) {
  if (e < 0) {
    if (base.is_poly()) raise(Errc::negative_input, "pow: negative exponent on polynomial");
    return Scalar(pow_rat(base.rational(), e));
  }
  Scalar acc(Rat(1));
  Scalar b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Scalar falling_factorial(const Scalar& v, int n) {
  if (n < 0) raise(Errc::negative_input, "falling_factorial: negative n");
  Scalar acc(Rat(1));
  for (int i = 0; i < n; ++i) acc *= (v - Scalar(i));
  return acc;
}

}  // namespace dowling
