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
#include "dowling/congruences.hpp"
#include "dowling/error.hpp"

using namespace dowling;
using namespace dowling::congruences;

TEST_CASE("dowling numbers") {
  CHECK(dowling_number(3, 0) == 1);
  CHECK(dowling_number(1, 3) == 15);  // Bell(4)
  CHECK(dowling_number(2, 3) == 24);  // 1 + 13 + 9 + 1
  // D_1(n) = Bell(n+1): the m = 1 Dowling numbers are the shifted Bell numbers.
  const long bell_numbers[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n < 6; ++n) CHECK(dowling_number(1, n) == bell_numbers[n + 1]);
  const long d2_prefix[] = {1, 2, 6, 24, 116};
  for (int n = 0; n < 5; ++n) CHECK(dowling_number(2, n) == d2_prefix[n]);
}

TEST_CASE("gessel sums and the closed right-hand side") {
  // 5*1 - 5*2 + 1*5 = 0 using R_2(1) at m = 1 and Bell values
  CHECK(gessel_sum(2, 0, 1, 1) == 0);
  // 5*5 - 5*15 + 52 = 2 = 2! * 1 * 1
  CHECK(gessel_sum(2, 2, 1, 1) == 2);
  CHECK(gessel_sum(0, 0, 3, 5) == 1);
  CHECK(gessel_rhs(2, 0, 1, 1) == 0);
  CHECK(gessel_rhs(2, 2, 1, 1) == 2);
  CHECK(gessel_rhs(1, 1, 2, 1) == 2);
  CHECK(gessel_sum(1, 1, 2, 1) == gessel_rhs(1, 1, 2, 1));
}

TEST_CASE("certificates carry exact quotients") {
  CHECK(cong_certificate(2, 0, 1, 1).quotient == 0);
  CHECK(cong_certificate(2, 2, 1, 1).quotient == 1);
  const auto cert = cong_certificate(3, 1, 2, 1);
  CHECK(cert.value == cert.quotient * 6);
  CHECK(cert.value % 6 == 0);
  // negative t also divides
  const auto neg = cong_certificate(3, 5, 2, -1);
  CHECK(neg.value == neg.quotient * 6);
}

TEST_CASE("printed congruences") {
  // mod-2 display at i = 0, m = 1: 1*1 + 1*2 + 5 = 8
  CHECK((dowling_number(1, 0) + dowling_number(1, 1) + dowling_number(1, 2)) == 8);
  // mod-6 display at i = 0, m = 1: 2*1 + 5*2 + 3*5 + 15 = 42
  CHECK((2 * dowling_number(1, 0) + 5 * dowling_number(1, 1) + 3 * dowling_number(1, 2) +
         dowling_number(1, 3)) == 42);
  const Report rep = printed_congruences(10, 4);
  CHECK(rep.passed());
  CHECK(rep.instances == 2 * 11 * 4);
}
