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

#include "dowling/families.hpp"
#include "dowling/hankel.hpp"
#include "dowling/transforms.hpp"
#include "suites_decl.hpp"
#include "suites_util.hpp"

namespace dowling::verify::suites {

using namespace detail;

namespace {

// (n+1 choose 2) and the product 1! 2! ... n! shared by all the closed forms.
int tri_num(int n) { return n * (n + 1) / 2; }

Int superfactorial(int n) {
  Int p = 1;
  for (int k = 1; k <= n; ++k) p *= factorial(k);
  return p;
}

}  // namespace

// H_n(phi) = x^C(n+1,2) prod k!.
Report hankel_bell(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 5);
  std::vector<Cell> cells;
  for (int n = 0; n <= n_max; ++n)
    cells.push_back({label("n=", n), [n]() -> Mismatch {
                       std::vector<Scalar> seq;
                       for (int i = 0; i <= 2 * n; ++i) seq.push_back(Scalar(families::bell(i)));
                       const Scalar got = hankel_det(seq, n);
                       const Scalar want(Poly::monomial(Var::x, Rat(superfactorial(n)), tri_num(n)));
                       return expect_eq(got, want);
                     }});
  return run_cells("hankel-bell", label("n<=", n_max), cells, mode);
}

// H_n(D_m(.,x)) = (xm)^C(n+1,2) prod k!.
Report hankel_dowling(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 5);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         std::vector<Scalar> seq;
                         for (int i = 0; i <= 2 * n; ++i) seq.push_back(Scalar(families::dowling(m, i)));
                         const Scalar got = hankel_det(seq, n);
                         const Scalar want(Poly::monomial(
                             Var::x, Rat(pow_int(Int(m), tri_num(n)) * superfactorial(n)), tri_num(n)));
                         return expect_eq(got, want);
                       }});
  return run_cells("hankel-dowling", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// Suter's specialization x = 1: H_n(D_m(n,1)) = m^C(n+1,2) prod k!.
Report hankel_suter(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), n_max = pick(b.n_max, 5);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      cells.push_back({label("m=", m, " n=", n), [m, n]() -> Mismatch {
                         std::vector<Scalar> seq;
                         for (int i = 0; i <= 2 * n; ++i)
                           seq.push_back(Scalar(families::dowling(m, i).eval(Rat(1))));
                         const Scalar got = hankel_det(seq, n);
                         const Scalar want(Rat(pow_int(Int(m), tri_num(n)) * superfactorial(n)));
                         return expect_eq(got, want);
                       }});
  return run_cells("hankel-suter", label("m<=", m_max, " n<=", n_max), cells, mode);
}

// H_n(D_{m,r}(.,x)/r^n) = (mx/r^2)^C(n+1,2) prod k!, and the unscaled
// transform agrees with the plain Dowling one.
Report hankel_r_dowling(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 3), r_max = pick(b.r_max, 3), n_max = pick(b.n_max, 4);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int r = 1; r <= r_max; ++r)
      for (int n = 0; n <= n_max; ++n)
        cells.push_back({label("m=", m, " r=", r, " n=", n), [m, r, n]() -> Mismatch {
                           std::vector<Scalar> scaled, plain, dow;
                           for (int i = 0; i <= 2 * n; ++i) {
                             const Poly d = families::r_dowling(m, r, i);
                             plain.push_back(Scalar(d));
                             scaled.push_back(Scalar(d * ratio(1, pow_int(Int(r), i))));
                             dow.push_back(Scalar(families::dowling(m, i)));
                           }
                           const Scalar got = hankel_det(scaled, n);
                           const Rat coeff = Rat(pow_int(Int(m), tri_num(n)) * superfactorial(n)) /
                                             Rat(pow_int(Int(r), 2 * tri_num(n)));
                           const Scalar want(Poly::monomial(Var::x, coeff, tri_num(n)));
                           if (got != want) return std::make_pair(got.str(), want.str());
                           return expect_eq(hankel_det(plain, n), hankel_det(dow, n));
                         }});
  return run_cells("hankel-r-dowling", label("m<=", m_max, " r<=", r_max, " n<=", n_max), cells,
                   mode);
}

// Hankel transform is invariant under the plain binomial transform;
// deterministic pseudo-random integer sequences, fixed seed.
Report hankel_binom_invariance(const Bounds& b, ExecMode mode) {
  const int n_max = pick(b.n_max, 3);
  const int trials = 20, length = 9;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> dist(-9, 9);
  std::vector<Cell> cells;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Scalar> seq;
    seq.reserve(length);
    for (int i = 0; i < length; ++i) seq.push_back(Scalar(Rat(dist(rng))));
    cells.push_back({label("trial=", trial), [seq, n_max]() -> Mismatch {
                       const auto beta =
                           transforms::binomial_transform(seq, Rat(1), transforms::Direction::forward);
                       const auto ha = transforms::hankel_transform(seq, n_max);
                       const auto hb = transforms::hankel_transform(beta, n_max);
                       for (int n = 0; n <= n_max; ++n)
                         if (ha[static_cast<std::size_t>(n)] != hb[static_cast<std::size_t>(n)])
                           return std::make_pair(label("n=", n, " ", ha[static_cast<std::size_t>(n)].str()),
                                                 hb[static_cast<std::size_t>(n)].str());
                       return std::nullopt;
                     }});
  }
  return run_cells("hankel-binom-invariance", label("length 9, trials 20, n<=", n_max), cells, mode);
}

}  // namespace dowling::verify::suites
