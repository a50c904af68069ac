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
#include "dowling/congruences.hpp"

#include "dowling/error.hpp"
#include "dowling/families.hpp"
#include "dowling/scalar.hpp"
#include "dowling/triangles.hpp"

namespace dowling::congruences {

Int dowling_number(int m, int n) {
  return to_int(families::dowling(m, n).eval(Rat(1)));
}

namespace {

Int dowling_at(int m, int n, const Int& t) { return to_int(families::dowling(m, n).eval(Rat(t))); }

}  // namespace

Int gessel_sum(int n, int i, int m, const Int& t) {
  if (n < 0 || i < 0) raise(Errc::negative_input, "gessel_sum: negative index");
  const auto rows = triangles::r_triangle_rows(n, Scalar(Rat(m)), Scalar(Rat(t)));
  Int sum = 0;
  for (int k = 0; k <= n; ++k) {
    const Int r = to_int(rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)].rational());
    sum += r * dowling_at(m, i + k, t);
  }
  return sum;
}

Int gessel_rhs(int n, int i, int m, const Int& t) {
  if (n < 0 || i < 0) raise(Errc::negative_input, "gessel_rhs: negative index");
  Int sum = 0;
  for (int j = 0; j <= i; ++j) {
    const Int s = triangles::stirling2(i - j, n);
    if (s == 0) continue;
    sum += pow_int(Int(m), i - j) * binomial(i, j) * s * dowling_at(m, j, t);
  }
  return pow_int(t, n) * factorial(n) * sum;
}

CongCertificate cong_certificate(int n, int i, int m, const Int& t) {
  CongCertificate cert;
  cert.n = n;
  cert.i = i;
  cert.m = m;
  cert.t = t;
  cert.value = gessel_sum(n, i, m, t);
  cert.quotient = exact_div(cert.value, factorial(n));
  return cert;
}

Report printed_congruences(int i_max, int m_max) {
  Report rep;
  rep.suite = "cong-printed";
  rep.bounds = "i<=" + std::to_string(i_max) + " m<=" + std::to_string(m_max);
  for (int m = 1; m <= m_max; ++m) {
    // D(i)..D(i+3) maintained as a sliding window.
    Int d0 = dowling_number(m, 0), d1 = dowling_number(m, 1), d2 = dowling_number(m, 2),
        d3 = dowling_number(m, 3);
    for (int i = 0; i <= i_max; ++i) {
      const Int mod2 = m * d0 + m * d1 + d2;
      ++rep.instances;
      if (mod2 % 2 != 0)
        rep.failures.push_back({"mod2 m=" + std::to_string(m) + " i=" + std::to_string(i),
                                to_string(mod2), "0 (mod 2)"});
      const Int mod6 = (4 * m * m - 2) * d0 + (2 * m * m + 3 * m) * d1 + 3 * m * d2 + d3;
      ++rep.instances;
      if (mod6 % 6 != 0)
        rep.failures.push_back({"mod6 m=" + std::to_string(m) + " i=" + std::to_string(i),
                                to_string(mod6), "0 (mod 6)"});
      d0 = d1;
      d1 = d2;
      d2 = d3;
      d3 = dowling_number(m, i + 4);
    }
  }
  return rep;
}

}  // namespace dowling::congruences
