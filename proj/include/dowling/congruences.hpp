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
#pragma once

#include "dowling/numeric.hpp"
#include "dowling/report.hpp"

namespace dowling::congruences {

/// Dowling number D_m(n) = D_m(n,1).
Int dowling_number(int m, int n);

/// Gessel-method left side: sum_k R_{n,k}(t) D_m(i+k, t).
Int gessel_sum(int n, int i, int m, const Int& t);

/// Gessel-method right side: t^n n! sum_j m^(i-j) C(i,j) S(i-j,n) D_m(j,t).
Int gessel_rhs(int n, int i, int m, const Int& t);

/// Witness that n! divides the Gessel sum; carries the exact quotient.
/// For i = n the value is n! m^n t^n, for 0 <= i < n it is zero.
struct CongCertificate {
  int n = 0;
  int i = 0;
  int m = 1;
  Int t;
  Int value;
  Int quotient;  // value / n!, exact
};

/// Raises divisibility_failure if n! does not divide the sum (which
/// would indicate a bug or an erratum, not a caller mistake).
CongCertificate cong_certificate(int n, int i, int m, const Int& t);

/// The two congruences displayed in the paper's short list:
///   m D(i) + m D(i+1) + D(i+2)                          == 0 (mod 2)
///   (4m^2-2) D(i) + (2m^2+3m) D(i+1) + 3m D(i+2) + D(i+3) == 0 (mod 6)
/// checked for all i <= i_max, m <= m_max.
Report printed_congruences(int i_max, int m_max);

}  // namespace dowling::congruences
