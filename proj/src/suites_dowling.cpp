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
#include "suites_decl.hpp"
#include "suites_util.hpp"

namespace dowling::verify::suites {

using namespace detail;
using families::bell;
using families::dowling;
using families::geometric;
using families::tanny_dowling;

namespace {

Poly x_poly() { return Poly::variable(Var::x); }

Poly one_x() { return Poly::constant(Var::x, Rat(1)); }

// phi_i(x/m) and omega_i(x/m) appear throughout section 3.
Poly bell_scaled(int i, int m) { return bell(i).var_scale(ratio(1, m)); }
Poly geo_scaled(int i, int m) { return geometric(i).var_scale(ratio(1, m)); }

}  // namespace

// m^n D_{m+1}(n,x) = sum_j (-1)^(n-j) C(n,j) (m+1)^j D_m(j, mx/(m+1)).
Report recc1(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         const Poly lhs = dowling(m + 1, n) * Rat(pow_int(Int(m), n));
                         Poly rhs(Var::x);
                         for (int j = 0; j <= n; ++j) {
                           Poly term = dowling(m, j).var_scale(ratio(m, m + 1)) *
                                       Rat(binomial(n, j) * pow_int(Int(m + 1), j));
                           rhs += ((n - j) % 2 != 0) ? -term : term;
                         }
                         return expect_eq(lhs, rhs);
                       }});
  return run_cells("recc1", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// Same shape for the Tanny-Dowling polynomials.
Report sim0(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         const Poly lhs = tanny_dowling(m + 1, n) * Rat(pow_int(Int(m), n));
                         Poly rhs(Var::x);
                         for (int j = 0; j <= n; ++j) {
                           Poly term = tanny_dowling(m, j).var_scale(ratio(m, m + 1)) *
                                       Rat(binomial(n, j) * pow_int(Int(m + 1), j));
                           rhs += ((n - j) % 2 != 0) ? -term : term;
                         }
                         return expect_eq(lhs, rhs);
                       }});
  return run_cells("sim0", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// D_m(n,x) = sum_i C(n,i) m^i phi_i(x/m).
Report resulta1(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 5), n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         Poly rhs(Var::x);
                         for (int i = 0; i <= n; ++i)
                           rhs += bell_scaled(i, m) * Rat(binomial(n, i) * pow_int(Int(m), i));
                         return expect_eq(dowling(m, n), rhs);
                       }});
  return run_cells("resulta1", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// m^n phi_n(x/m) = sum_i (-1)^(n-i) C(n,i) D_m(i,x).
Report resulta2(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 5), n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         const Poly lhs = bell_scaled(n, m) * Rat(pow_int(Int(m), n));
                         Poly rhs(Var::x);
                         for (int i = 0; i <= n; ++i) {
                           Poly term = dowling(m, i) * Rat(binomial(n, i));
                           rhs += ((n - i) % 2 != 0) ? -term : term;
                         }
                         return expect_eq(lhs, rhs);
                       }});
  return run_cells("resulta2", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// x phi_n(x) = sum_i (-1)^(n-i) C(n,i) phi_{i+1}(x).
Report c01(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() -> Mismatch {
                       const Poly lhs = x_poly() * bell(n);
                       Poly rhs(Var::x);
                       for (int i = 0; i <= n; ++i) {
                         Poly term = bell(i + 1) * Rat(binomial(n, i));
                         rhs += ((n - i) % 2 != 0) ? -term : term;
                       }
                       return expect_eq(lhs, rhs);
                     }});
  return run_cells("c01", label("n<=", n_max), cells, mode);
}

// phi_{n+1}(x) = x sum_i C(n,i) phi_i(x), checked through the transform code path.
Report c02(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() -> Mismatch {
                       transforms::Seq alpha;
                       for (int i = 0; i <= n; ++i) alpha.push_back(Scalar(bell(i)));
                       const auto beta = transforms::binomial_transform(alpha, Rat(1),
                                                                        transforms::Direction::forward);
                       const Scalar lhs(bell(n + 1));
                       const Scalar rhs = Scalar(x_poly()) * beta.back();
                       return expect_eq(lhs, rhs);
                     }});
  return run_cells("c02", label("n<=", n_max), cells, mode);
}

// Simons-type identity for D_m via the Chen evaluator with l = s = n.
Report f01(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         transforms::Seq alpha, beta;
                         for (int k = 0; k <= n; ++k) {
                           alpha.push_back(Scalar(bell_scaled(k, m) * Rat(pow_int(Int(m), k))));
                           beta.push_back(Scalar(dowling(m, k)));
                         }
                         const auto [lhs, rhs] = transforms::simons_sides(alpha, beta, n, n, n);
                         return expect_eq(lhs, rhs);
                       }});
  return run_cells("f01", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// Bell-polynomial special case, written out directly.
Report f02(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 8);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() -> Mismatch {
                       Poly lhs(Var::x), rhs(Var::x);
                       for (int k = 0; k <= n; ++k) {
                         const Rat w(binomial(n, k) * binomial(n + k, k));
                         lhs += x_poly() * bell(k) * w;
                         Poly term = bell(k + 1) * w;
                         rhs += ((n - k) % 2 != 0) ? -term : term;
                       }
                       return expect_eq(lhs, rhs);
                     }});
  return run_cells("f02", label("n<=", n_max), cells, mode);
}

// sum_k C(n,k) 2^k x phi_k = sum_k C(n,k) 2^k (-1)^(n-k) phi_{k+1}.
Report bell_2k(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() -> Mismatch {
                       Poly lhs(Var::x), rhs(Var::x);
                       for (int k = 0; k <= n; ++k) {
                         const Rat w(binomial(n, k) * pow_int(Int(2), k));
                         lhs += x_poly() * bell(k) * w;
                         Poly term = bell(k + 1) * w;
                         rhs += ((n - k) % 2 != 0) ? -term : term;
                       }
                       return expect_eq(lhs, rhs);
                     }});
  return run_cells("bell-2k", label("n<=", n_max), cells, mode);
}

// F_m(n,x) = sum_i C(n,i) m^i omega_i(x/m).
Report f1(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 5), n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         Poly rhs(Var::x);
                         for (int i = 0; i <= n; ++i)
                           rhs += geo_scaled(i, m) * Rat(binomial(n, i) * pow_int(Int(m), i));
                         return expect_eq(tanny_dowling(m, n), rhs);
                       }});
  return run_cells("f1", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// Inverse of f1.
Report f2(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 5), n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         const Poly lhs = geo_scaled(n, m) * Rat(pow_int(Int(m), n));
                         Poly rhs(Var::x);
                         for (int i = 0; i <= n; ++i) {
                           Poly term = tanny_dowling(m, i) * Rat(binomial(n, i));
                           rhs += ((n - i) % 2 != 0) ? -term : term;
                         }
                         return expect_eq(lhs, rhs);
                       }});
  return run_cells("f2", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// x omega_n = (-1)^(n+1) + sum_i C(n,i) (-1)^(n-i) (x+1) omega_i.
Report f3(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() -> Mismatch {
                       const Poly lhs = x_poly() * geometric(n);
                       Poly rhs = Poly::constant(Var::x, Rat(n % 2 == 0 ? -1 : 1));
                       const Poly xp1 = x_poly() + one_x();
                       for (int i = 0; i <= n; ++i) {
                         Poly term = xp1 * geometric(i) * Rat(binomial(n, i));
                         rhs += ((n - i) % 2 != 0) ? -term : term;
                       }
                       return expect_eq(lhs, rhs);
                     }});
  return run_cells("f3", label("n<=", n_max), cells, mode);
}

// (1+x) omega_n = delta(n,0) + sum_i C(n,i) x omega_i.
Report f4(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() -> Mismatch {
                       const Poly lhs = (x_poly() + one_x()) * geometric(n);
                       Poly rhs = Poly::constant(Var::x, Rat(n == 0 ? 1 : 0));
                       for (int i = 0; i <= n; ++i)
                         rhs += x_poly() * geometric(i) * Rat(binomial(n, i));
                       return expect_eq(lhs, rhs);
                     }});
  return run_cells("f4", label("n<=", n_max), cells, mode);
}

// Full Chen identity for the pair (m^k omega_k(x/m), F_m(k,x)).
Report f5(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 8), l_max = pick(b.l_max, 8);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      for (int l = 0; l <= l_max; ++l)
        for (int s = 0; s <= std::min(n, l); ++s)
          cells.push_back({label("m=", m, " n=", n, " l=", l, " s=", s), [m, n, l, s]() -> Mismatch {
                             const int len = n + l - s + 1;
                             transforms::Seq alpha, beta;
                             for (int k = 0; k < len; ++k) {
                               alpha.push_back(Scalar(geo_scaled(k, m) * Rat(pow_int(Int(m), k))));
                               beta.push_back(Scalar(tanny_dowling(m, k)));
                             }
                             const auto [lhs, rhs] = transforms::simons_sides(alpha, beta, n, l, s);
                             return expect_eq(lhs, rhs);
                           }});
  return run_cells("f5", label("m<=", m_max, " n<=", n_max, " l<=", l_max, " s<=min(n,l)"), cells,
                   mode);
}

namespace {

// Shared evaluator for the corrected and printed forms of (f6)/(f7).
// weight(k) supplies C(n+k,k) or 2^k; the corrected right side carries
// (-1)^(n+1) and the (1+x) factor forced by Theorem 3 and (f1).
Mismatch geo_two_sided(int n, bool corrected, bool two_k) {
  Poly lhs(Var::x), rhs(Var::x);
  const Poly x = Poly::variable(Var::x);
  const Poly xp1 = x + Poly::constant(Var::x, Rat(1));
  for (int k = 0; k <= n; ++k) {
    const Rat w(binomial(n, k) * (two_k ? pow_int(Int(2), k) : binomial(n + k, k)));
    lhs += x * geometric(k) * w;
    Poly term = (corrected ? xp1 : (two_k ? xp1 : Poly::constant(Var::x, Rat(1)))) * geometric(k) * w;
    rhs += ((n - k) % 2 != 0) ? -term : term;
  }
  Rat c;
  if (corrected)
    c = Rat(n % 2 == 0 ? -1 : 1);  // (-1)^(n+1)
  else
    c = two_k ? Rat(n % 2 == 0 ? 1 : -1) : Rat(1);  // printed: (-1)^n resp. 1
  rhs += Poly::constant(Var::x, c);
  return detail::expect_eq(lhs, rhs);
}

}  // namespace

Report geo_simons(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() { return geo_two_sided(n, true, false); }});
  return run_cells("geo-simons", label("n<=", n_max), cells, mode);
}

Report geo_2k(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 10);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() { return geo_two_sided(n, true, true); }});
  return run_cells("geo-2k", label("n<=", n_max), cells, mode);
}

Report expected_fail_f6(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 6);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() { return geo_two_sided(n, false, false); }});
  return run_cells("expected-fail-f6", label("n<=", n_max), cells, mode, /*expected_fail=*/true);
}

Report expected_fail_f7(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 6);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() { return geo_two_sided(n, false, true); }});
  return run_cells("expected-fail-f7", label("n<=", n_max), cells, mode, /*expected_fail=*/true);
}

// D_1(n,x) = phi_{n+1}(x)/x.
Report d1_bell(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 12);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() -> Mismatch {
                       return expect_eq(dowling(1, n), bell(n + 1).div_xpow(1));
                     }});
  return run_cells("d1-bell", label("n<=", n_max), cells, mode);
}

// x F_1(n,x) = (x+1) omega_n(x) - delta(n,0).
Report f1_geometric(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 12);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() -> Mismatch {
                       const Poly lhs = x_poly() * tanny_dowling(1, n);
                       Poly rhs = (x_poly() + one_x()) * geometric(n);
                       if (n == 0) rhs -= one_x();
                       return expect_eq(lhs, rhs);
                     }});
  return run_cells("f1-geometric", label("n<=", n_max), cells, mode);
}

}  // namespace dowling::verify::suites
