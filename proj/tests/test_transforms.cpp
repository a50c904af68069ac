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
#include <random>

#include "doctest.h"
#include "dowling/error.hpp"
#include "dowling/families.hpp"
#include "dowling/transforms.hpp"

using namespace dowling;
using namespace dowling::transforms;
using families::bell;
using families::geometric;
using families::tanny_dowling;

TEST_CASE("binomial transform of all ones is 2^n") {
  Seq ones(10, Scalar(1));
  const Seq row_sums = binomial_transform(ones, Rat(1), Direction::forward);
  for (int n = 0; n < 10; ++n)
    CHECK(row_sums[static_cast<std::size_t>(n)] == Scalar(Rat(pow_int(Int(2), n))));
}

TEST_CASE("binomial transform round trip") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> dist(-20, 20);
  const Rat ratios[] = {Rat(1), Rat(2), Rat(-1), ratio(1, 2)};
  for (const Rat& a : ratios) {
    for (int trial = 0; trial < 10; ++trial) {
      Seq s;
      for (int i = 0; i < 12; ++i) s.push_back(Scalar(Rat(dist(rng))));
      const Seq fwd = binomial_transform(s, a, Direction::forward);
      const Seq back = binomial_transform(fwd, a, Direction::inverse);
      CHECK(back == s);
    }
  }
}

TEST_CASE("forward transform of bell polynomials gives phi_{n+1}/x") {
  Seq alpha;
  for (int i = 0; i <= 8; ++i) alpha.push_back(Scalar(bell(i)));
  const Seq beta = binomial_transform(alpha, Rat(1), Direction::forward);
  for (int n = 0; n <= 8; ++n)
    CHECK(beta[static_cast<std::size_t>(n)] == Scalar(bell(n + 1).div_xpow(1)));
}

TEST_CASE("inverse ratio-r transform of r-dowling recovers scaled bell") {
  const int m = 2, r = 3;
  Seq seq;
  for (int k = 0; k <= 6; ++k) seq.push_back(Scalar(families::r_dowling(m, r, k)));
  const Seq inv = binomial_transform(seq, Rat(r), Direction::inverse);
  for (int n = 0; n <= 6; ++n)
    CHECK(inv[static_cast<std::size_t>(n)] ==
          Scalar(bell(n).var_scale(ratio(1, m)) * Rat(pow_int(Int(m), n))));
}

TEST_CASE("simons sides") {
  Seq alpha, beta;
  for (int i = 0; i <= 4; ++i) {
    alpha.push_back(Scalar(bell(i)));
    beta.push_back(Scalar(bell(i + 1).div_xpow(1)));
  }
  SUBCASE("trivial corner") {
    const auto [l, r] = simons_sides(alpha, beta, 0, 0, 0);
    CHECK(l == alpha[0]);
    CHECK(r == beta[0]);
    CHECK(l == r);
  }
  SUBCASE("n = l = s = 1 gives x + 2x^2 after clearing the x") {
    const auto [l, r] = simons_sides(alpha, beta, 1, 1, 1);
    CHECK(l == r);
    const Scalar cleared = Scalar(Poly::variable(Var::x)) * l;
    CHECK(cleared == Scalar(Poly(Var::x, {Rat(0), Rat(1), Rat(2)})));
  }
  SUBCASE("index bounds are enforced") {
    CHECK_THROWS_AS(simons_sides(alpha, beta, 4, 4, 0), Error);
    CHECK_THROWS_AS(simons_sides(alpha, beta, 2, 1, 2), Error);
  }
}

TEST_CASE("borel weight") {
  CHECK(borel_weight(bell(3)) == geometric(3));
  CHECK(borel_weight(Poly::constant(Var::x, Rat(1))) == Poly::constant(Var::x, Rat(1)));
  CHECK(borel_weight(families::dowling(2, 2)) == tanny_dowling(2, 2));
  for (int n = 0; n <= 8; ++n) CHECK(borel_weight(bell(n)) == geometric(n));
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 6; ++n) CHECK(borel_weight(families::dowling(m, n)) == tanny_dowling(m, n));
}

TEST_CASE("hankel transform of named families") {
  SUBCASE("bell, N = 1") {
    Seq seq;
    for (int i = 0; i <= 2; ++i) seq.push_back(Scalar(bell(i)));
    const Seq h = hankel_transform(seq, 1);
    CHECK(h[0] == Scalar(1));
    CHECK(h[1] == Scalar(Poly::variable(Var::x)));
  }
  SUBCASE("dowling m = 2, N = 2") {
    Seq seq;
    for (int i = 0; i <= 4; ++i) seq.push_back(Scalar(families::dowling(2, i)));
    const Seq h = hankel_transform(seq, 2);
    CHECK(h[0] == Scalar(1));
    CHECK(h[1] == Scalar(Poly::monomial(Var::x, Rat(2), 1)));
    // (2x)^C(3,2) * 1! * 2! = 16 x^3
    CHECK(h[2] == Scalar(Poly::monomial(Var::x, Rat(16), 3)));
  }
  SUBCASE("scaled r-dowling, N = 1") {
    const int m = 3, r = 2;
    Seq seq;
    for (int i = 0; i <= 2; ++i)
      seq.push_back(Scalar(families::r_dowling(m, r, i) * ratio(1, pow_int(Int(r), i))));
    const Seq h = hankel_transform(seq, 1);
    CHECK(h[0] == Scalar(1));
    CHECK(h[1] == Scalar(Poly::monomial(Var::x, ratio(m, r * r), 1)));
  }
}
