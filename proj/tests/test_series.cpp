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
#include "dowling/series.hpp"
#include "dowling/triangles.hpp"

using namespace dowling;

namespace {

Series one_plus(const Scalar& c, int order) {
  Series s = ser_one(order);
  if (order >= 1) s.set_coeff(1, c);
  return s;
}

}  // namespace

TEST_CASE("series multiplication") {
  const Series a = one_plus(Scalar(1), 2);
  Series b = ser_one(2);
  b.set_coeff(1, Scalar(Rat(-1)));
  const Series p = a * b;  // 1 - z^2
  CHECK(p.coeff(0) == Scalar(1));
  CHECK(p.coeff(1) == Scalar(0));
  CHECK(p.coeff(2) == Scalar(Rat(-1)));

  const Series e = ser_exp_linear(Scalar(1), 4);
  const Series e2 = e * e;
  for (int n = 0; n <= 4; ++n)
    CHECK(egf_coeff(e2, n) == Scalar(Rat(pow_int(Int(2), n))));

  // square root of (1+2z), squared back, cancels exactly
  const Series root = ser_pow(one_plus(Scalar(Rat(2)), 5), ratio(1, 2));
  const Series sq = root * root;
  CHECK(sq.coeff(0) == Scalar(1));
  CHECK(sq.coeff(1) == Scalar(Rat(2)));
  for (int n = 2; n <= 5; ++n) CHECK(sq.coeff(n) == Scalar(0));
}

TEST_CASE("series exponential") {
  CHECK(ser_exp(Series(4)).coeff(0) == Scalar(1));
  Series z(3);
  z.set_coeff(1, Scalar(1));
  const Series ez = ser_exp(z);
  CHECK(ez.coeff(2) == Scalar(ratio(1, 2)));
  CHECK(ez.coeff(3) == Scalar(ratio(1, 6)));
  CHECK_THROWS_AS(ser_exp(ser_one(3)), Error);

  // EGF of the Bell polynomials with x formal
  const Series em1 = ser_exp_linear(Scalar(1), 5) - ser_one(5);
  const Series s = ser_exp(ser_scale(em1, Scalar(Poly::variable(Var::x))));
  CHECK(egf_coeff(s, 4) == Scalar(families::bell(4)));
}

TEST_CASE("series logarithm builders") {
  const Series l1 = ser_log1p(Scalar(1), 3);
  CHECK(l1.coeff(1) == Scalar(1));
  CHECK(l1.coeff(2) == Scalar(ratio(-1, 2)));
  CHECK(l1.coeff(3) == Scalar(ratio(1, 3)));
  const Series l3 = ser_log1p(Scalar(Rat(3)), 2);
  CHECK(l3.coeff(1) == Scalar(Rat(3)));
  CHECK(l3.coeff(2) == Scalar(ratio(-9, 2)));
  // exp(log(1+cz)) = 1 + cz exactly
  const Scalar cs[] = {Scalar(1), Scalar(Rat(2)), Scalar(ratio(1, 2)), Scalar(Rat(3))};
  for (const Scalar& c : cs) {
    const Series back = ser_exp(ser_log1p(c, 12));
    CHECK(back.coeff(0) == Scalar(1));
    CHECK(back.coeff(1) == c);
    for (int n = 2; n <= 12; ++n) CHECK(back.coeff(n) == Scalar(0));
  }
}

TEST_CASE("series powers") {
  // (1+2z)^(-1/2): coefficients are C(-1/2,n) 2^n by the generalized
  // binomial theorem; oracle via the falling factorial.
  const Series s = ser_pow(one_plus(Scalar(Rat(2)), 8), ratio(-1, 2));
  for (int n = 0; n <= 8; ++n) {
    const Rat coeff = falling_factorial(Scalar(ratio(-1, 2)), n).rational() /
                      Rat(factorial(n)) * pow_rat(Rat(2), n);
    CHECK(s.coeff(n) == Scalar(coeff));
  }
  CHECK(s.coeff(2) == Scalar(ratio(3, 2)));

  const Series anything = one_plus(Scalar(Rat(7)), 5);
  const Series id = ser_pow(anything, Rat(0));
  CHECK(id.coeff(0) == Scalar(1));
  for (int n = 1; n <= 5; ++n) CHECK(id.coeff(n) == Scalar(0));

  const Series sq = one_plus(Scalar(1), 6) * one_plus(Scalar(1), 6);
  const Series root = ser_pow(sq, ratio(1, 2));
  CHECK(root.coeff(1) == Scalar(1));
  for (int n = 2; n <= 6; ++n) CHECK(root.coeff(n) == Scalar(0));

  Series bad = ser_one(3);
  bad.set_coeff(0, Scalar(Rat(2)));
  CHECK_THROWS_AS(ser_pow(bad, ratio(1, 2)), Error);
}

TEST_CASE("egf coefficient access") {
  const Series e = ser_exp_linear(Scalar(Rat(5)), 4);
  CHECK(egf_coeff(e, 0) == e.coeff(0));
  CHECK(egf_coeff(e, 3) == Scalar(Rat(125)));
  CHECK_THROWS_AS(egf_coeff(e, 5), Error);
  try {
    egf_coeff(e, 5);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::order_exceeded);
  }
}

TEST_CASE("named generating-function checks") {
  SUBCASE("whitney2 example") {
    EgfParams p;
    p.m = 2;
    p.k = 1;
    const Report r = egf_check("whitney2", p, 8);
    CHECK(r.passed());
    CHECK(r.instances == 9);
  }
  SUBCASE("firstkind2 reads s(4,2) = 11") {
    EgfParams p;
    p.k = 2;
    const Report r = egf_check("firstkind2", p, 6);
    CHECK(r.passed());
    CHECK(triangles::stirling1(4, 2) == 11);
  }
  SUBCASE("rel1 at m=2, t=1, k=0 has a_1 = -2") {
    EgfParams p;
    p.m = 2;
    p.t = Rat(1);
    p.k = 0;
    const Report r = egf_check("rel1", p, 6);
    CHECK(r.passed());
    CHECK(triangles::r_triangle(1, 0, Scalar(Rat(2)), Scalar(Rat(1))) == Scalar(Rat(-2)));
  }
  SUBCASE("rel2 degenerate point") {
    EgfParams p;
    p.m = 1;
    p.t = Rat(0);
    p.u = Rat(1);
    const Report r = egf_check("rel2", p, 6);
    CHECK(r.passed());
  }
  SUBCASE("unknown ids are rejected") {
    CHECK_THROWS_AS(egf_check("nope", EgfParams{}, 4), Error);
  }
}
