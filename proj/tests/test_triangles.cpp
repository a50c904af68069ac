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
#include "doctest.h"
#include "dowling/error.hpp"
#include "dowling/families.hpp"
#include "dowling/triangles.hpp"

using namespace dowling;
namespace tri = dowling::triangles;

TEST_CASE("stirling first kind matches falling-factorial coefficients") {
  CHECK(tri::stirling1(0, 0) == 1);
  CHECK(tri::stirling1(3, 0) == 0);
  // (x)_4 = x^4 - 6x^3 + 11x^2 - 6x, read the x^2 coefficient
  const Poly ff4 = falling_factorial(Scalar(Poly::variable(Var::x)), 4).poly();
  CHECK(Rat(tri::stirling1(4, 2)) == ff4.coeff(2));
  CHECK(tri::stirling1(4, 2) == 11);
  for (int n = 0; n <= 12; ++n) {
    const Scalar ff = falling_factorial(Scalar(Poly::variable(Var::x)), n);
    const Poly p = ff.as_poly(Var::x);
    for (int k = 0; k <= n; ++k) CHECK(Rat(tri::stirling1(n, k)) == p.coeff(k));
  }
}

TEST_CASE("stirling second kind recurrence equals explicit sum") {
  CHECK(tri::stirling2(0, 0) == 1);
  CHECK(tri::stirling2(4, 2) == 7);
  CHECK(tri::stirling2(4, 3) == 6);
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) CHECK(tri::stirling2(n, k) == tri::stirling2_explicit(n, k));
}

TEST_CASE("eulerian numbers") {
  CHECK(tri::eulerian(4, 1) == 11);
  CHECK(tri::eulerian(2, 2) == 0);
  CHECK(tri::eulerian(3, 1) == 4);
  CHECK(tri::eulerian(0, 0) == 1);
  for (int n = 1; n <= 10; ++n) CHECK(tri::eulerian(n, n) == 0);  // <n,n> = delta(n,0)
}

TEST_CASE("whitney first kind signed values") {
  CHECK(tri::whitney1(3, 0, 0) == 1);
  // P_2(v;2) = (v-1)(v-3) = v^2 - 4v + 3
  const Poly p2 = families::char_poly(2, 2);
  CHECK(Rat(tri::whitney1(2, 2, 1)) == p2.coeff(1));
  CHECK(tri::whitney1(2, 2, 1) == -4);
  CHECK(tri::whitney1(2, 2, 0) == 3);
}

TEST_CASE("whitney second kind") {
  CHECK(tri::whitney2(1, 3, 1) == tri::stirling2(4, 2));
  CHECK(tri::whitney2(1, 3, 1) == 7);
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 6; ++n) CHECK(tri::whitney2(m, n, 0) == 1);
  // (d01) written out: C(2,1) S(1,1) + C(2,2) * 2 * S(2,1) = 2 + 2
  Int direct = binomial(2, 1) * tri::stirling2(1, 1) +
               binomial(2, 2) * Int(2) * tri::stirling2(2, 1);
  CHECK(tri::whitney2(2, 2, 1) == direct);
  CHECK(tri::whitney2(2, 2, 1) == 4);
}

TEST_CASE("r-stirling recursion cases") {
  for (int r = 0; r <= 4; ++r)
    for (int k = 0; k <= r; ++k) CHECK(tri::r_stirling2(r, r, k) == (k == r ? 1 : 0));
  // r = 1 reduces to the ordinary numbers for n >= 1
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) CHECK(tri::r_stirling2(1, n, k) == tri::stirling2(n, k));
  // {3,2}_2 = 2 {2,2}_2 + {2,1}_2 = 2
  CHECK(tri::r_stirling2(2, 3, 2) == 2);
  CHECK_THROWS_AS(tri::r_stirling2(2, 1, 1), Error);
  try {
    tri::r_stirling2(3, 2, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::index_below_r);
  }
}

TEST_CASE("r-whitney second kind") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k) CHECK(tri::r_whitney2(m, 1, n, k) == tri::whitney2(m, n, k));
  CHECK(tri::r_whitney2(2, 3, 1, 0) == 3);
  CHECK(tri::r_whitney2(2, 3, 0, 0) == 1);
}

TEST_CASE("eulerian-dowling numbers") {
  CHECK(tri::eulerian_dowling(1, 0, 0) == 1);
  CHECK(tri::eulerian_dowling(1, 3, 2) == tri::eulerian(3, 1));
  CHECK(tri::eulerian_dowling(1, 3, 2) == 4);
  // m = 2, n = 2: expand sum_i i! W_2(2,i) (x-1)^(2-i) and collect
  Poly expanded(Var::x);
  const Poly xm1(Var::x, {Rat(-1), Rat(1)});
  for (int i = 0; i <= 2; ++i)
    expanded += xm1.pow(2 - i) * Rat(factorial(i) * tri::whitney2(2, 2, i));
  for (int k = 0; k <= 2; ++k) CHECK(Rat(tri::eulerian_dowling(2, 2, k)) == expanded.coeff(k));
}

TEST_CASE("R triangle against Table 1 and the explicit formula") {
  const Scalar m_formal{Poly::variable(Var::m)};
  const Scalar one{Rat(1)};
  CHECK(tri::r_triangle(1, 0, m_formal, one) == Scalar(Rat(-2)));
  CHECK(tri::r_triangle(3, 1, m_formal, one) == Scalar(Poly(Var::m, {Rat(12), Rat(9), Rat(2)})));
  CHECK(tri::r_triangle(4, 2, m_formal, one) == Scalar(Poly(Var::m, {Rat(24), Rat(30), Rat(11)})));
  CHECK_THROWS_AS(tri::r_triangle(2, 1, m_formal, Scalar(Poly::variable(Var::t))), Error);
  try {
    tri::r_triangle(2, 1, m_formal, Scalar(Poly::variable(Var::t)));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::two_formal_variables);
  }
  // Formal t with concrete m: R(1,0) = -(1+t)
  const Scalar t_formal{Poly::variable(Var::t)};
  CHECK(tri::r_triangle(1, 0, Scalar(Rat(1)), t_formal) ==
        Scalar(Poly(Var::t, {Rat(-1), Rat(-1)})));
  CHECK(tri::r_triangle(1, 0, Scalar(Rat(1)), t_formal) ==
        tri::r_triangle_explicit(1, 0, 1, t_formal));
}

TEST_CASE("out-of-range triangle indices are zero") {
  CHECK(tri::stirling1(3, 5) == 0);
  CHECK(tri::stirling2(3, -1) == 0);
  CHECK(tri::whitney2(2, 3, 4) == 0);
  CHECK(tri::r_triangle(2, 3, Scalar(Rat(1)), Scalar(Rat(1))) == Scalar(0));
}
