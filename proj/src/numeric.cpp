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
#include "dowling/numeric.hpp"

#include <cctype>

#include "dowling/error.hpp"

namespace dowling {

Rat ratio(const Int& num, const Int& den) {
  if (den == 0) raise(Errc::zero_parameter, "ratio: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int factorial(int n) {
  if (n < 0) raise(Errc::negative_input, "factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(int n, int k) {
  if (n < 0) raise(Errc::negative_input, "binomial: negative n");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int pow_int(const Int& base, int exp) {
  if (exp < 0) raise(Errc::negative_input, "pow_int: negative exponent");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

Rat pow_rat(const Rat& base, int exp) {
  if (exp < 0) {
    if (base == 0) raise(Errc::zero_parameter, "pow_rat: zero base with negative exponent");
    Rat inv = Rat(1) / base;
    return pow_rat(inv, -exp);
  }
  Rat r = 1;
  Rat b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_int(const Rat& q) {
  if (!is_integer(q)) raise(Errc::divisibility_failure, "to_int: " + to_string(q) + " is not an integer");
  return q.get_num();
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) raise(Errc::zero_parameter, "exact_div: zero divisor");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    raise(Errc::divisibility_failure, "exact_div: " + to_string(b) + " does not divide " + to_string(a));
  return q;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
  auto bad = [&]() { raise(Errc::unknown_id, "parse_rational: malformed rational '" + text + "'"); };
  if (text.empty()) bad();
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    num = text;
  } else {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty()) bad();
  }
  auto check = [&](const std::string& part, bool sign_ok) {
    if (part.empty()) bad();
    std::size_t i = 0;
    if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
  };
  check(num, true);
  check(den, false);
  return ratio(Int(num), Int(den));
}

}  // namespace dowling
