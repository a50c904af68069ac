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
#include "dowling/families.hpp"

#include "dowling/error.hpp"
#include "dowling/scalar.hpp"
#include "dowling/triangles.hpp"

namespace dowling::families {

namespace {

template <typename Entry>
Poly from_coeffs(int n, Entry entry) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = Rat(entry(k));
  return Poly(Var::x, std::move(coeffs));
}

}  // namespace

Poly char_poly(int m, int n) {
  if (m < 1) raise(Errc::negative_input, "char_poly: m must be >= 1");
  if (n < 0) raise(Errc::negative_input, "char_poly: negative n");
  // m^n ((v-1)/m)_n with the falling factorial over Q[v].
  const Poly arg(Var::upsilon, {ratio(-1, m), ratio(1, m)});
  const Scalar ff = falling_factorial(Scalar(arg), n);
  return ff.as_poly(Var::upsilon) * Rat(pow_int(Int(m), n));
}

Poly bell(int n) {
  return from_coeffs(n, [n](int k) { return triangles::stirling2(n, k); });
}

Poly geometric(int n) {
  return from_coeffs(n, [n](int k) { return Int(factorial(k) * triangles::stirling2(n, k)); });
}

Poly eulerian_poly(int n) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
  coeffs[0] = (n == 0) ? Rat(1) : Rat(0);
  for (int k = 1; k <= n; ++k) coeffs[static_cast<std::size_t>(k)] = Rat(triangles::eulerian(n, k - 1));
  return Poly(Var::x, std::move(coeffs));
}

Poly dowling(int m, int n) {
  return from_coeffs(n, [m, n](int k) { return triangles::whitney2(m, n, k); });
}

Poly tanny_dowling(int m, int n) {
  return from_coeffs(n, [m, n](int k) { return Int(factorial(k) * triangles::whitney2(m, n, k)); });
}

Poly euler_dowling_poly(int m, int n) {
  if (m < 1) raise(Errc::negative_input, "euler_dowling_poly: m must be >= 1");
  if (n < 0) raise(Errc::negative_input, "euler_dowling_poly: negative n");
  const Poly xm1(Var::x, {Rat(-1), Rat(1)});  // x - 1
  Poly acc(Var::x);
  // Accumulate i = n down to 0 so (x-1)^(n-i) grows by one factor a step.
  Poly p = Poly::constant(Var::x, Rat(1));
  for (int i = n; i >= 0; --i) {
    acc += p * Rat(factorial(i) * triangles::whitney2(m, n, i));
    if (i > 0) p = p * xm1;
  }
  return acc;
}

Poly r_bell(int r, int n) {
  if (r < 0) raise(Errc::negative_input, "r_bell: negative r");
  return from_coeffs(n, [r, n](int k) { return triangles::r_stirling2(r, n + r, k + r); });
}

Poly r_dowling(int m, int r, int n) {
  return from_coeffs(n, [m, r, n](int k) { return triangles::r_whitney2(m, r, n, k); });
}

Rat ms_c(int n, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  if (n < 0) raise(Errc::negative_input, "ms_c: negative n");
  if (n == 0) return Rat(1);
  return Rat(a * b * ms_c(n - 1, a, b, c, d) + c * ms_c(n - 1, Rat(a + d), b, c, d));
}

Rat ms_c_bell_formula(int n, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  if (n < 0) raise(Errc::negative_input, "ms_c_bell_formula: negative n");
  const Rat bd = b * d;
  if (bd == 0) raise(Errc::zero_parameter, "ms_c_bell_formula: requires b*d != 0");
  const Rat x = c / bd;
  Rat sum(0);
  for (int j = 0; j <= n; ++j)
    sum += pow_rat(a, n - j) * pow_rat(d, j) * Rat(binomial(n, j)) * bell(j).eval(x);
  return pow_rat(b, n) * sum;
}

}  // namespace dowling::families
