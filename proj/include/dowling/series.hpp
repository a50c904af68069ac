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

#include <string>
#include <vector>

#include "dowling/report.hpp"
#include "dowling/scalar.hpp"

namespace dowling {

/// Order-N truncated power series in z over Scalars. The truncation
/// order is explicit: binary operations truncate to the smaller operand
/// order. The EGF view reads a_n = n! c_n.
class Series {
 public:
  explicit Series(int order);  // zero series
  Series(int order, std::vector<Scalar> coeffs);  // padded/truncated to order+1

  int order() const { return order_; }
  const Scalar& coeff(int n) const;  // raises order_exceeded past the order
  void set_coeff(int n, Scalar v);

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);  // Cauchy product

 private:
  int order_;
  std::vector<Scalar> c_;
};

Series ser_scale(const Series& s, const Scalar& c);
Series ser_one(int order);

/// exp of a series with zero constant term, by the standard derivative
/// recurrence.
Series ser_exp(const Series& s);

/// log of a series with unit constant term (composition of log(1+u)).
Series ser_log(const Series& s);

/// ln(1 + c z) to order N.
Series ser_log1p(const Scalar& c, int order);

/// e^(c z) to order N.
Series ser_exp_linear(const Scalar& c, int order);

/// s^e = exp(e log s) for rational e; requires unit constant term.
Series ser_pow(const Series& s, const Rat& e);

/// Non-negative integer power by repeated multiplication (no constant
/// term restriction).
Series ser_ipow(const Series& s, int e);

/// n! c_n.
Scalar egf_coeff(const Series& s, int n);

/// Parameters for the named generating-function checks; each id reads
/// the fields it needs.
struct EgfParams {
  int m = 1;
  int k = 0;
  Rat x = Rat(0);
  Rat t = Rat(0);
  Rat u = Rat(0);
};

/// Expands the named closed form to order N and compares every EGF
/// coefficient against the independently computed triangle or family
/// value. Ids: firstkind2, bell, whitney1, whitney2, eulerian-dowling,
/// rel1, rel2.
Report egf_check(const std::string& id, const EgfParams& params, int order);

}  // namespace dowling
