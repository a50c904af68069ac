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
using families::bell;
using families::char_poly;
using families::euler_dowling_poly;
using families::eulerian_poly;
using families::geometric;
using families::ms_c;
using families::ms_c_bell_formula;
using families::r_bell;
using families::r_dowling;
using families::tanny_dowling;

TEST_CASE("printed Bell polynomials") {
  CHECK(bell(0).str() == "1");
  CHECK(bell(1).str() == "x");
  CHECK(bell(2).str() == "x^2+x");
  CHECK(bell(3).str() == "x^3+3x^2+x");
  CHECK(bell(4).str() == "x^4+6x^3+7x^2+x");
}

TEST_CASE("printed geometric polynomials") {
  CHECK(geometric(0).str() == "1");
  CHECK(geometric(1).str() == "x");
  CHECK(geometric(2).str() == "2x^2+x");
  CHECK(geometric(3).str() == "6x^3+6x^2+x");
  CHECK(geometric(4).str() == "24x^4+36x^3+14x^2+x");
}

TEST_CASE("printed Eulerian polynomials") {
  CHECK(eulerian_poly(0).str() == "1");
  CHECK(eulerian_poly(1).str() == "x");
  CHECK(eulerian_poly(2).str() == "x^2+x");
  CHECK(eulerian_poly(3).str() == "x^3+4x^2+x");
  CHECK(eulerian_poly(4).str() == "x^4+11x^3+11x^2+x");
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(3, 0).str() == "1");
  CHECK(char_poly(5, 1).str() == "v-1");
  CHECK(char_poly(2, 2).str() == "v^2-4v+3");
  // monic of degree n with integer coefficients
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 8; ++n) {
      const Poly p = char_poly(m, n);
      CHECK(p.degree() == n);
      CHECK(p.coeff(n) == Rat(1));
      for (int k = 0; k <= n; ++k) CHECK(is_integer(p.coeff(k)));
    }
}

TEST_CASE("dowling polynomials") {
  CHECK(families::dowling(1, 2) == bell(3).div_xpow(1));
  CHECK(families::dowling(1, 2).str() == "x^2+3x+1");
  CHECK(families::dowling(2, 2).str() == "x^2+4x+1");
  CHECK(families::dowling(4, 0).str() == "1");
}

TEST_CASE("tanny-dowling polynomials") {
  CHECK(tanny_dowling(1, 1).str() == "x+1");
  CHECK(tanny_dowling(3, 0).str() == "1");
  CHECK(tanny_dowling(2, 2).str() == "2x^2+4x+1");
}

TEST_CASE("eulerian-dowling polynomials") {
  CHECK(euler_dowling_poly(1, 2).str() == "x^2+x");
  CHECK(euler_dowling_poly(2, 0).str() == "1");
  CHECK(euler_dowling_poly(2, 1).str() == "x");
}

TEST_CASE("r-bell polynomials") {
  for (int n = 0; n <= 6; ++n) CHECK(r_bell(1, n) == bell(n + 1).div_xpow(1));
  CHECK(r_bell(3, 0).str() == "1");
  CHECK(r_bell(2, 1).str() == "x+2");
}

TEST_CASE("r-dowling polynomials") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 6; ++n) CHECK(r_dowling(m, 1, n) == families::dowling(m, n));
  CHECK(r_dowling(3, 2, 1).str() == "x+2");
  CHECK(r_dowling(2, 3, 2).str() == "x^2+8x+9");
}

TEST_CASE("mansour-shattuck sequence") {
  CHECK(ms_c(0, Rat(3), Rat(1), Rat(2), Rat(5)) == Rat(1));
  // one recursion step: ab + c
  CHECK(ms_c(1, Rat(2), Rat(3), Rat(5), Rat(7)) == Rat(11));
  CHECK(ms_c(1, Rat(1), Rat(1), ratio(1, 2), ratio(1, 2)) == ratio(3, 2));
  CHECK(ms_c_bell_formula(1, Rat(1), Rat(1), ratio(1, 2), ratio(1, 2)) == ratio(3, 2));
  for (int n = 0; n <= 5; ++n)
    CHECK(ms_c(n, Rat(2), ratio(1, 2), Rat(1), ratio(1, 3)) ==
          ms_c_bell_formula(n, Rat(2), ratio(1, 2), Rat(1), ratio(1, 3)));
  CHECK_THROWS_AS(ms_c_bell_formula(2, Rat(1), Rat(0), Rat(1), Rat(1)), Error);
  try {
    ms_c_bell_formula(2, Rat(1), Rat(1), Rat(1), Rat(0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_parameter);
  }
  // the recursion itself still works with bd = 0
  CHECK(ms_c(2, Rat(1), Rat(0), Rat(2), Rat(1)) == Rat(4));
}
