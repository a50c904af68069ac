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
#include "dowling/transforms.hpp"
#include "dowling/triangles.hpp"
#include "suites_decl.hpp"
#include "suites_util.hpp"

namespace dowling::verify::suites {

using namespace detail;
namespace tri = dowling::triangles;
using families::bell;
using families::r_bell;
using families::r_dowling;

namespace {

// sum_k s(r,k) phi_{n+k}(x), the right side of (rbellbell) before the
// x^-r division.
Poly stirling1_bell_sum(int r, int n) {
  Poly acc(Var::x);
  for (int k = 0; k <= r; ++k) {
    const Int s = tri::stirling1(r, k);
    if (s != 0) acc += bell(n + k) * Rat(s);
  }
  return acc;
}

}  // namespace

// B_r(n,x) (r-Stirling route) = x^-r sum_k s(r,k) phi_{n+k}(x).
Report rbellbell(const Bounds& b, ExecMode mode) {
  const int r_max = pick(b.r_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int r = 0; r <= r_max; ++r)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("r=", r, " n=", n), [r, n]() -> Mismatch {
                         return expect_eq(r_bell(r, n), stirling1_bell_sum(r, n).div_xpow(r));
                       }});
  return run_cells("rbellbell", label("r<=", r_max, " n<=", n_max), cells, mode);
}

// D_{m,r}(n,x) = sum_j C(n,j) m^j r^(n-j) phi_j(x/m).
Report rdowbel(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), r_max = pick(b.r_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int r = 0; r <= r_max; ++r)
      for (int n = 0; n <= n_max; ++n)
        cells.push_back({label("m=", m, " r=", r, " n=", n), [m, r, n]() -> Mismatch {
                           Poly rhs(Var::x);
                           for (int j = 0; j <= n; ++j)
                             rhs += bell(j).var_scale(ratio(1, m)) *
                                    Rat(binomial(n, j) * pow_int(Int(m), j) * pow_int(Int(r), n - j));
                           return expect_eq(r_dowling(m, r, n), rhs);
                         }});
  return run_cells("rdowbel", label("m<=", m_max, " r<=", r_max, " n<=", n_max), cells, mode);
}

// m^n phi_n(x/m) = inverse ratio-r binomial transform of D_{m,r}(k,x).
Report beldow(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), r_max = pick(b.r_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int r = 1; r <= r_max; ++r)
      for (int n = 0; n <= n_max; ++n)
        cells.push_back({label("m=", m, " r=", r, " n=", n), [m, r, n]() -> Mismatch {
                           transforms::Seq seq;
                           for (int k = 0; k <= n; ++k) seq.push_back(Scalar(r_dowling(m, r, k)));
                           const auto inv =
                               transforms::binomial_transform(seq, Rat(r), transforms::Direction::inverse);
                           const Scalar lhs(bell(n).var_scale(ratio(1, m)) * Rat(pow_int(Int(m), n)));
                           return expect_eq(lhs, inv.back());
                         }});
  return run_cells("beldow", label("m<=", m_max, " r<=", r_max, " n<=", n_max), cells, mode);
}

// B_r(n,x) = sum_j C(n,j) r^(n-j) phi_j(x) (forward ratio-r transform).
Report r_bell_binomial(const Bounds& b, ExecMode mode) {
  const int r_max = pick(b.r_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int r = 0; r <= r_max; ++r)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("r=", r, " n=", n), [r, n]() -> Mismatch {
                         transforms::Seq seq;
                         for (int j = 0; j <= n; ++j) seq.push_back(Scalar(bell(j)));
                         const auto fwd =
                             transforms::binomial_transform(seq, Rat(r), transforms::Direction::forward);
                         return expect_eq(Scalar(r_bell(r, n)), fwd.back());
                       }});
  return run_cells("r-bell-binomial", label("r<=", r_max, " n<=", n_max), cells, mode);
}

// sum_k C(n,k) r^(n-k) x^r phi_k(x) = sum_k s(r,k) phi_{n+k}(x).
Report man(const Bounds& b, ExecMode mode) {
  const int r_max = pick(b.r_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int r = 0; r <= r_max; ++r)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("r=", r, " n=", n), [r, n]() -> Mismatch {
                         Poly lhs(Var::x);
                         for (int k = 0; k <= n; ++k)
                           lhs += bell(k).times_xpow(r) *
                                  Rat(binomial(n, k) * pow_int(Int(r), n - k));
                         return expect_eq(lhs, stirling1_bell_sum(r, n));
                       }});
  return run_cells("man", label("r<=", r_max, " n<=", n_max), cells, mode);
}

// x^r phi_n(x) = sum_k sum_j (-1)^(n-k) C(n,k) r^(n-k) s(r,j) phi_{k+j}(x).
Report mout(const Bounds& b, ExecMode mode) {
  const int r_max = pick(b.r_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int r = 0; r <= r_max; ++r)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("r=", r, " n=", n), [r, n]() -> Mismatch {
                         const Poly lhs = bell(n).times_xpow(r);
                         Poly rhs(Var::x);
                         for (int k = 0; k <= n; ++k) {
                           Poly inner = stirling1_bell_sum(r, k) * Rat(binomial(n, k) * pow_int(Int(r), n - k));
                           rhs += ((n - k) % 2 != 0) ? -inner : inner;
                         }
                         return expect_eq(lhs, rhs);
                       }});
  return run_cells("mout", label("r<=", r_max, " n<=", n_max), cells, mode);
}

// phi_{n+r}(x) = sum_k sum_j j^(n-k) S(r,j) C(n,k) x^j phi_k(x).
Report stirling_shift(const Bounds& b, ExecMode mode) {
  const int r_max = pick(b.r_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int r = 0; r <= r_max; ++r)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("r=", r, " n=", n), [r, n]() -> Mismatch {
                         Poly rhs(Var::x);
                         for (int k = 0; k <= n; ++k)
                           for (int j = 0; j <= r; ++j) {
                             const Int s = tri::stirling2(r, j);
                             if (s == 0) continue;
                             rhs += bell(k).times_xpow(j) *
                                    Rat(pow_int(Int(j), n - k) * s * binomial(n, k));
                           }
                         return expect_eq(bell(n + r), rhs);
                       }});
  return run_cells("stirling-shift", label("r<=", r_max, " n<=", n_max), cells, mode);
}

namespace {

// Shared parameter grids, frozen for reproducibility.
const std::vector<Rat>& ms_as() {
  static const std::vector<Rat> v = {Rat(1), Rat(2), ratio(1, 2), Rat(-1)};
  return v;
}
const std::vector<Rat>& ms_bs() {
  static const std::vector<Rat> v = {Rat(1), ratio(1, 2)};
  return v;
}
const std::vector<Rat>& ms_cs() {
  static const std::vector<Rat> v = {Rat(1), ratio(2, 3)};
  return v;
}
const std::vector<Rat>& ms_ds() {
  static const std::vector<Rat> v = {Rat(1), ratio(-1, 2)};
  return v;
}

}  // namespace

// Recursion route = Bell-polynomial closed form, bd != 0.
Report ms_formula(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 6);
  std::vector<Cell> cells;
  for (const Rat& a : ms_as())
    for (const Rat& bb : ms_bs())
      for (const Rat& c : ms_cs())
        for (const Rat& d : ms_ds())
          for (int n = 0; n <= n_max; ++n)
            cells.push_back({label("a=", to_string(a), " b=", to_string(bb), " c=", to_string(c),
                                   " d=", to_string(d), " n=", n),
                             [a, bb, c, d, n]() -> Mismatch {
                               return expect_eq(families::ms_c(n, a, bb, c, d),
                                                families::ms_c_bell_formula(n, a, bb, c, d));
                             }});
  return run_cells("ms-formula", label("fixed 4x2x2x2 grid, n<=", n_max), cells, mode);
}

// d | a closed form: C_n = ((bd)^(n+q)/c^q) sum_k s(q,k) phi_{n+k}(c/bd), q = a/d.
Report ms_divides(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 6), q_max = 3;
  const std::vector<Rat> ds = {Rat(1), ratio(1, 2), ratio(-1, 3)};
  std::vector<Cell> cells;
  for (int q = 1; q <= q_max; ++q)
    for (const Rat& d : ds)
      for (const Rat& bb : ms_bs())
        for (const Rat& c : ms_cs())
          for (int n = 0; n <= n_max; ++n)
            cells.push_back({label("q=", q, " d=", to_string(d), " b=", to_string(bb),
                                   " c=", to_string(c), " n=", n),
                             [q, d, bb, c, n]() -> Mismatch {
                               const Rat a = Rat(q) * d;
                               const Rat bd = bb * d;
                               const Rat x = c / bd;
                               Rat sum(0);
                               for (int k = 0; k <= q; ++k) {
                                 const Int s = tri::stirling1(q, k);
                                 if (s != 0) sum += Rat(s) * bell(n + k).eval(x);
                               }
                               const Rat closed = pow_rat(bd, n + q) / pow_rat(c, q) * sum;
                               return expect_eq(families::ms_c(n, a, bb, c, d), closed);
                             }});
  return run_cells("ms-divides", label("a/d<=", q_max, " n<=", n_max, ", fixed rational grid"),
                   cells, mode);
}

namespace {

// Left side l^n C_n (printed) or C_n (corrected) vs (1/l^n) sum_k s(l,k) Bell_{n+k}.
Mismatch ms_l_check(int l, int n, bool printed) {
  const Rat inv_l = ratio(1, l);
  const Rat c_n = families::ms_c(n, Rat(1), Rat(1), inv_l, inv_l);
  const Rat lhs = printed ? Rat(pow_rat(Rat(l), n) * c_n) : c_n;
  Rat sum(0);
  for (int k = 0; k <= l; ++k) {
    const Int s = tri::stirling1(l, k);
    if (s != 0) sum += Rat(s) * bell(n + k).eval(Rat(1));
  }
  const Rat rhs = pow_rat(inv_l, n) * sum;
  return detail::expect_eq(lhs, rhs);
}

}  // namespace

Report ms_l_corrected(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 6), l_max = pick(b.l_max, 3);
  std::vector<Cell> cells;
  for (int l = 1; l <= l_max; ++l)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("l=", l, " n=", n), [l, n]() { return ms_l_check(l, n, false); }});
  return run_cells("ms-l-corrected", label("l<=", l_max, " n<=", n_max), cells, mode);
}

Report expected_fail_ms_l(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 4), l_max = pick(b.l_max, 3);
  std::vector<Cell> cells;
  for (int l = 1; l <= l_max; ++l)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("l=", l, " n=", n), [l, n]() { return ms_l_check(l, n, true); }});
  return run_cells("expected-fail-ms-l", label("l<=", l_max, " n<=", n_max), cells, mode,
                   /*expected_fail=*/true);
}

// Simons-type identity for the r-Dowling pair, signs as forced by the
// Chen identity.
Report r_simons_1(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), r_max = pick(b.r_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int r = 1; r <= r_max; ++r)
      for (int n = 0; n <= n_max; ++n)
        cells.push_back({label("m=", m, " r=", r, " n=", n), [m, r, n]() -> Mismatch {
                           transforms::Seq alpha, beta;
                           for (int k = 0; k <= n; ++k) {
                             const Rat mr = pow_rat(ratio(m, r), k);
                             alpha.push_back(Scalar(bell(k).var_scale(ratio(1, m)) * mr));
                             beta.push_back(Scalar(r_dowling(m, r, k) * pow_rat(ratio(1, r), k)));
                           }
                           const auto [lhs, rhs] = transforms::simons_sides(alpha, beta, n, n, n);
                           return expect_eq(lhs, rhs);
                         }});
  return run_cells("r-simons-1", label("m<=", m_max, " r<=", r_max, " n<=", n_max), cells, mode);
}

// Bell specialization (m = 1) with the x^r weight cleared.
Report r_simons_2(const Bounds& b, ExecMode mode) {
  const int r_max = pick(b.r_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int r = 1; r <= r_max; ++r)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("r=", r, " n=", n), [r, n]() -> Mismatch {
                         Poly lhs(Var::x), rhs(Var::x);
                         for (int k = 0; k <= n; ++k) {
                           const Rat w = Rat(binomial(n, k) * binomial(n + k, k)) * pow_rat(ratio(1, r), k);
                           lhs += bell(k).times_xpow(r) * w;
                           Poly term = stirling1_bell_sum(r, k) * w;
                           rhs += ((n - k) % 2 != 0) ? -term : term;
                         }
                         return expect_eq(lhs, rhs);
                       }});
  return run_cells("r-simons-2", label("r<=", r_max, " n<=", n_max), cells, mode);
}

}  // namespace dowling::verify::suites
