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
#include "dowling/triangles.hpp"
#include "suites_decl.hpp"
#include "suites_util.hpp"

namespace dowling::verify::suites {

using namespace detail;
namespace tri = dowling::triangles;

// Recurrence route = binomial sum (d01) = alternating sum (d02).
Report whitney2_explicit(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 5), n_max = pick(b.n_max, 14);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k)
        cells.push_back({label("m=", m, " n=", n, " k=", k), [m, n, k]() -> Mismatch {
                           const Int rec = tri::whitney2(m, n, k);
                           const Int d01 = tri::whitney2_explicit_binom(m, n, k);
                           const Int d02 = tri::whitney2_explicit_alt(m, n, k);
                           if (rec == d01 && rec == d02) return std::nullopt;
                           return std::make_pair(render(rec),
                                                 "d01=" + render(d01) + " d02=" + render(d02));
                         }});
  return run_cells("whitney2-explicit", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// Coefficients of the characteristic polynomial = signed recurrence = explicit sum.
Report whitney1_charpoly(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         const Poly p = families::char_poly(m, n);
                         for (int k = 0; k <= n; ++k) {
                           const Rat coeff = p.coeff(k);
                           const Int rec = tri::whitney1(m, n, k);
                           const Int exp = tri::whitney1_explicit(m, n, k);
                           if (coeff != Rat(rec) || rec != exp)
                             return std::make_pair(p.str(), label("k=", k, " rec=", render(rec),
                                                                  " d00=", render(exp)));
                         }
                         return std::nullopt;
                       }});
  return run_cells("whitney1-charpoly", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// Sign pattern (-1)^(n-k) and the paper's unsigned recursion on |w|.
Report whitney1_sign(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 5), n_max = pick(b.n_max, 12);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k)
        cells.push_back({label("m=", m, " n=", n, " k=", k), [m, n, k]() -> Mismatch {
                           const Int w = tri::whitney1(m, n, k);
                           const Int a = tri::whitney1_abs(m, n, k);
                           Int expected = a;
                           if ((n - k) % 2 != 0) expected = -expected;
                           return expect_eq(w, expected);
                         }});
  return run_cells("whitney1-sign", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// sum_k w_m(n,k) W_m(k,j) = delta(n,j).
Report orthogonality(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      for (int j = 0; j <= n_max; ++j)
        cells.push_back({label("m=", m, " n=", n, " j=", j), [m, n, j]() -> Mismatch {
                           Int sum = 0;
                           for (int k = 0; k <= n; ++k)
                             sum += tri::whitney1(m, n, k) * tri::whitney2(m, k, j);
                           return expect_eq(sum, Int(n == j ? 1 : 0));
                         }});
  return run_cells("orthogonality", label("m<=", m_max, " n,j<=", n_max), cells, mode);
}

// (m+1)^k m^(n-k) W_{m+1}(n,k) = sum_j (-1)^(n-j) C(n,j) (m+1)^j W_m(j,k).
Report rec1(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k)
        cells.push_back({label("m=", m, " n=", n, " k=", k), [m, n, k]() -> Mismatch {
                           const Int lhs = pow_int(Int(m + 1), k) * pow_int(Int(m), n - k) *
                                           tri::whitney2(m + 1, n, k);
                           Int rhs = 0;
                           for (int j = 0; j <= n; ++j) {
                             Int term =
                                 binomial(n, j) * pow_int(Int(m + 1), j) * tri::whitney2(m, j, k);
                             if ((n - j) % 2 != 0) term = -term;
                             rhs += term;
                           }
                           return expect_eq(lhs, rhs);
                         }});
  return run_cells("rec1", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// W_1(n,k) = S(n+1,k+1).
Report w1_stirling(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 12);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      cells.push_back({label("n=", n, " k=", k), [n, k]() -> Mismatch {
                         return expect_eq(tri::whitney2(1, n, k), tri::stirling2(n + 1, k + 1));
                       }});
  return run_cells("w1-stirling", label("n<=", n_max), cells, mode);
}

}  // namespace dowling::verify::suites
