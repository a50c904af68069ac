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
#include "dowling/transforms.hpp"

#include "dowling/error.hpp"
#include "dowling/hankel.hpp"

namespace dowling::transforms {

Seq binomial_transform(const Seq& s, const Rat& a, Direction dir) {
  Seq out;
  out.reserve(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    Scalar acc(0);
    for (std::size_t k = 0; k <= n; ++k) {
      Rat w = Rat(binomial(static_cast<int>(n), static_cast<int>(k))) *
              pow_rat(a, static_cast<int>(n - k));
      if (dir == Direction::inverse && (n - k) % 2 != 0) w = -w;
      acc += Scalar(w) * s[k];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::pair<Scalar, Scalar> simons_sides(const Seq& alpha, const Seq& beta, int n, int l, int s) {
  if (n < 0 || l < 0 || s < 0 || s > n || s > l)
    raise(Errc::index_out_of_range, "simons_sides: need 0 <= s <= min(n,l)");
  const int need = n + l - s;  // highest index touched on either side
  if (static_cast<int>(alpha.size()) <= need || static_cast<int>(beta.size()) <= need)
    raise(Errc::index_out_of_range,
          "simons_sides: sequences must reach index " + std::to_string(need));
  Scalar left(0);
  for (int k = 0; k <= l; ++k)
    left += Scalar(Rat(binomial(l, k) * binomial(n + k, s))) *
            alpha[static_cast<std::size_t>(n + k - s)];
  Scalar right(0);
  for (int k = 0; k <= n; ++k) {
    Rat w(binomial(n, k) * binomial(l + k, s));
    if ((n - k) % 2 != 0) w = -w;
    right += Scalar(w) * beta[static_cast<std::size_t>(l + k - s)];
  }
  return {std::move(left), std::move(right)};
}

Poly borel_weight(const Poly& p) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(p.degree() + 1));
  for (int k = 0; k <= p.degree(); ++k)
    coeffs[static_cast<std::size_t>(k)] = Rat(factorial(k)) * p.coeff(k);
  return Poly(p.var(), std::move(coeffs));
}

Seq hankel_transform(const Seq& entries, int n_max) {
  if (n_max < 0) raise(Errc::negative_input, "hankel_transform: negative n_max");
  if (entries.size() < static_cast<std::size_t>(2 * n_max + 1))
    raise(Errc::insufficient_entries, "hankel_transform: need " + std::to_string(2 * n_max + 1) +
                                          " entries, have " + std::to_string(entries.size()));
  Seq out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(hankel_det(entries, n));
  return out;
}

}  // namespace dowling::transforms
