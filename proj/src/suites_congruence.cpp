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
#include "dowling/triangles.hpp"
#include "suites_decl.hpp"
#include "suites_util.hpp"

namespace dowling::verify::suites {

using namespace detail;
namespace tri = dowling::triangles;
namespace cong = dowling::congruences;

// Recurrence route against the explicit w_m expansion (exp1).
Report rel3_vs_exp1(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 10);
  const Rat ts[] = {Rat(1), Rat(2), Rat(-1)};
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (const Rat& t : ts)
      for (int n = 0; n <= n_max; ++n)
        cells.push_back({label("m=", m, " t=", to_string(t), " n=", n), [m, t, n]() -> Mismatch {
                           const auto rows = tri::r_triangle_rows(n, Scalar(Rat(m)), Scalar(t));
                           for (int k = 0; k <= n; ++k) {
                             const Scalar& rec = rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
                             const Scalar exp = tri::r_triangle_explicit(n, k, m, Scalar(t));
                             if (rec != exp)
                               return std::make_pair(label("k=", k, " rec=", rec.str()),
                                                     "exp1=" + exp.str());
                           }
                           return std::nullopt;
                         }});
  return run_cells("rel3-vs-exp1", label("m<=", m_max, " t in {1,2,-1} n<=", n_max), cells, mode);
}

// All fifteen printed entries of R_{n,k}(1) as polynomials in m.
Report table1(const Bounds& b, ExecMode mode) {
  (void)b;
  // Coefficient lists, lowest degree first.
  static const std::vector<std::vector<std::vector<long>>> printed = {
      {{1}},
      {{-2}, {1}},
      {{4, 1}, {-4, -1}, {1}},
      {{-8, -6, -2}, {12, 9, 2}, {-6, -3}, {1}},
      {{16, 24, 19, 6}, {-32, -48, -30, -6}, {24, 30, 11}, {-8, -6}, {1}},
  };
  std::vector<Cell> cells;
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      cells.push_back({label("n=", n, " k=", k), [n, k]() -> Mismatch {
                         std::vector<Rat> coeffs;
                         for (long c : printed[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)])
                           coeffs.emplace_back(c);
                         const Poly want(Var::m, std::move(coeffs));
                         const Scalar got =
                             tri::r_triangle(n, k, Scalar(Poly::variable(Var::m)), Scalar(Rat(1)));
                         return expect_eq(got, Scalar(want));
                       }});
  return run_cells("table1", "n<=4, m formal, t=1", cells, mode);
}

namespace {

// Left and right sides of (cong4) as polynomials in t (formal-t route).
std::pair<Poly, Poly> cong4_formal_sides(int n, int i, int m) {
  const auto rows = tri::r_triangle_rows(n, Scalar(Rat(m)), Scalar(Poly::variable(Var::t)));
  Poly lhs(Var::t);
  for (int k = 0; k <= n; ++k)
    lhs += rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)].as_poly(Var::t) *
           families::dowling(m, i + k).retagged(Var::t);
  Poly rhs(Var::t);
  for (int j = 0; j <= i; ++j) {
    const Int s = tri::stirling2(i - j, n);
    if (s == 0) continue;
    rhs += families::dowling(m, j).retagged(Var::t) *
           Rat(pow_int(Int(m), i - j) * binomial(i, j) * s);
  }
  rhs = rhs * Rat(factorial(n));
  rhs = rhs.times_xpow(n);  // the t^n factor
  return {lhs, rhs};
}

}  // namespace

// (cong4): equality of both sides plus the two closed cases, over the
// integer grid and as a polynomial identity in formal t.
Report cong4(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 6), i_max = pick(b.i_max, 8), m_max = pick(b.m_max, 4);
  const long ts[] = {1, 2, -1};
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    for (int i = 0; i <= i_max; ++i)
      for (int m = 1; m <= m_max; ++m)
        for (long t : ts)
          cells.push_back({label("n=", n, " i=", i, " m=", m, " t=", t), [n, i, m, t]() -> Mismatch {
                             const Int lhs = cong::gessel_sum(n, i, m, Int(t));
                             const Int rhs = cong::gessel_rhs(n, i, m, Int(t));
                             if (lhs != rhs) return std::make_pair(render(lhs), render(rhs));
                             if (i == n) {
                               const Int closed =
                                   factorial(n) * pow_int(Int(m), n) * pow_int(Int(t), n);
                               if (lhs != closed)
                                 return std::make_pair(render(lhs), "n!m^n t^n=" + render(closed));
                             } else if (i < n && lhs != 0) {
                               return std::make_pair(render(lhs), "0");
                             }
                             return std::nullopt;
                           }});
  // Formal-t polynomial identity on a reduced grid.
  const int fn_max = std::min(n_max, 5), fi_max = std::min(i_max, 6);
  for (int n = 0; n <= fn_max; ++n)
    for (int i = 0; i <= fi_max; ++i)
      for (int m = 1; m <= m_max; ++m)
        cells.push_back({label("formal-t n=", n, " i=", i, " m=", m), [n, i, m]() -> Mismatch {
                           const auto [lhs, rhs] = cong4_formal_sides(n, i, m);
                           return expect_eq(lhs, rhs);
                         }});
  return run_cells("cong4",
                   label("n<=", n_max, " i<=", i_max, " m<=", m_max, " t in {1,2,-1} + formal t"),
                   cells, mode);
}

// (cong5): every Gessel sum divides by n!, with the closed quotients
// where the paper states them.
Report cong5(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 6), i_max = pick(b.i_max, 8), m_max = pick(b.m_max, 4);
  const long ts[] = {1, 2, -1};
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    for (int i = 0; i <= i_max; ++i)
      for (int m = 1; m <= m_max; ++m)
        for (long t : ts)
          cells.push_back({label("n=", n, " i=", i, " m=", m, " t=", t), [n, i, m, t]() -> Mismatch {
                             cong::CongCertificate cert;
                             try {
                               cert = cong::cong_certificate(n, i, m, Int(t));
                             } catch (const Error& e) {
                               return std::make_pair(e.what(), "divisible by n!");
                             }
                             if (cert.value != cert.quotient * factorial(n))
                               return std::make_pair(render(cert.value),
                                                     render(cert.quotient) + " * n!");
                             if (i == n) {
                               const Int q = pow_int(Int(m), n) * pow_int(Int(t), n);
                               if (cert.quotient != q)
                                 return std::make_pair(render(cert.quotient), render(q));
                             } else if (i < n && cert.quotient != 0) {
                               return std::make_pair(render(cert.quotient), "0");
                             }
                             return std::nullopt;
                           }});
  return run_cells("cong5", label("n<=", n_max, " i<=", i_max, " m<=", m_max, " t in {1,2,-1}"),
                   cells, mode);
}

// The printed mod-2 / mod-6 list.
Report cong_printed(const Bounds& b, ExecMode mode) {
  (void)mode;
  const int i_max = pick(b.i_max, 20), m_max = pick(b.m_max, 6);
  Report rep = cong::printed_congruences(i_max, m_max);
  rep.suite = "cong-printed";
  return rep;
}

}  // namespace dowling::verify::suites
