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
#include "dowling/series.hpp"

#include <algorithm>

#include "dowling/error.hpp"
#include "dowling/families.hpp"
#include "dowling/triangles.hpp"

namespace dowling {

Series::Series(int order) : order_(order) {
  if (order < 0) raise(Errc::negative_input, "Series: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, Scalar(0));
}

Series::Series(int order, std::vector<Scalar> coeffs) : Series(order) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  for (std::size_t i = 0; i < n; ++i) c_[i] = std::move(coeffs[i]);
}

const Scalar& Series::coeff(int n) const {
  if (n < 0 || n > order_)
    raise(Errc::order_exceeded, "Series: coefficient " + std::to_string(n) +
                                    " beyond order " + std::to_string(order_));
  return c_[static_cast<std::size_t>(n)];
}

void Series::set_coeff(int n, Scalar v) {
  if (n < 0 || n > order_) raise(Errc::order_exceeded, "Series: set past order");
  c_[static_cast<std::size_t>(n)] = std::move(v);
}

Series Series::operator-() const {
  Series r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[static_cast<std::size_t>(n)] = -c_[static_cast<std::size_t>(n)];
  return r;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n)
    r.c_[static_cast<std::size_t>(n)] = a.c_[static_cast<std::size_t>(n)] + b.c_[static_cast<std::size_t>(n)];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n)
    r.c_[static_cast<std::size_t>(n)] = a.c_[static_cast<std::size_t>(n)] - b.c_[static_cast<std::size_t>(n)];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.order_, b.order_));
  for (int n = 0; n <= r.order_; ++n) {
    Scalar acc(0);
    for (int k = 0; k <= n; ++k) acc += a.c_[static_cast<std::size_t>(k)] * b.c_[static_cast<std::size_t>(n - k)];
    r.c_[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return r;
}

Series ser_scale(const Series& s, const Scalar& c) {
  Series r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n) * c);
  return r;
}

Series ser_one(int order) {
  Series r(order);
  r.set_coeff(0, Scalar(1));
  return r;
}

Series ser_exp(const Series& s) {
  if (!s.coeff(0).is_zero())
    raise(Errc::nonzero_constant_term, "ser_exp: constant term must be zero");
  const int N = s.order();
  Series g(N);
  g.set_coeff(0, Scalar(1));
  // (n+1) g_{n+1} = sum_{j<=n} (j+1) s_{j+1} g_{n-j}
  for (int n = 0; n < N; ++n) {
    Scalar acc(0);
    for (int j = 0; j <= n; ++j) acc += Scalar(Rat(j + 1)) * s.coeff(j + 1) * g.coeff(n - j);
    g.set_coeff(n + 1, acc * Scalar(ratio(1, n + 1)));
  }
  return g;
}

Series ser_log(const Series& s) {
  if (s.coeff(0) != Scalar(1))
    raise(Errc::constant_term_not_one, "ser_log: constant term must be one");
  const int N = s.order();
  Series u = s - ser_one(N);
  Series acc(N);
  Series upow = u;
  for (int k = 1; k <= N; ++k) {
    const Rat w = (k % 2 == 0) ? ratio(-1, k) : ratio(1, k);
    acc = acc + ser_scale(upow, Scalar(w));
    if (k < N) upow = upow * u;
  }
  return acc;
}

Series ser_log1p(const Scalar& c, int order) {
  Series r(order);
  Scalar cn = c;
  for (int n = 1; n <= order; ++n) {
    const Rat w = (n % 2 == 0) ? ratio(-1, n) : ratio(1, n);
    r.set_coeff(n, cn * Scalar(w));
    cn = cn * c;
  }
  return r;
}

Series ser_exp_linear(const Scalar& c, int order) {
  Series r(order);
  Scalar cn(1);
  for (int n = 0; n <= order; ++n) {
    r.set_coeff(n, cn * Scalar(ratio(1, factorial(n))));
    cn = cn * c;
  }
  return r;
}

Series ser_pow(const Series& s, const Rat& e) {
  if (s.coeff(0) != Scalar(1))
    raise(Errc::constant_term_not_one, "ser_pow: constant term must be one");
  if (e == 0) return ser_one(s.order());
  return ser_exp(ser_scale(ser_log(s), Scalar(e)));
}

Series ser_ipow(const Series& s, int e) {
  if (e < 0) raise(Errc::negative_input, "ser_ipow: negative exponent");
  Series acc = ser_one(s.order());
  Series base = s;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar egf_coeff(const Series& s, int n) { return s.coeff(n) * Scalar(Rat(factorial(n))); }

namespace {

// One (1+mz) builder used by the Whitney and R generating functions.
Series one_plus_mz(int m, int order) {
  Series s = ser_one(order);
  if (order >= 1) s.set_coeff(1, Scalar(Rat(m)));
  return s;
}

void compare(Report& rep, const std::string& instance, const Scalar& got, const Scalar& want) {
  ++rep.instances;
  if (got != want) rep.failures.push_back({instance, got.str(), want.str()});
}

}  // namespace

Report egf_check(const std::string& id, const EgfParams& p, int order) {
  Report rep;
  rep.suite = "egf:" + id;
  rep.bounds = "order<=" + std::to_string(order);
  const int N = order;

  if (id == "firstkind2") {
    // (1/k!) ln(1+z)^k
    Series s = ser_scale(ser_ipow(ser_log1p(Scalar(1), N), p.k), Scalar(ratio(1, factorial(p.k))));
    for (int n = 0; n <= N; ++n)
      compare(rep, "k=" + std::to_string(p.k) + " n=" + std::to_string(n), egf_coeff(s, n),
              Scalar(triangles::stirling1(n, p.k)));
    return rep;
  }

  if (id == "bell") {
    // exp(x (e^z - 1)) with x formal
    Series em1 = ser_exp_linear(Scalar(1), N) - ser_one(N);
    Series s = ser_exp(ser_scale(em1, Scalar(Poly::variable(Var::x))));
    for (int n = 0; n <= N; ++n)
      compare(rep, "n=" + std::to_string(n), egf_coeff(s, n), Scalar(families::bell(n)));
    return rep;
  }

  if (id == "whitney1") {
    // (1+mz)^(-1/m) ln(1+mz)^k / (m^k k!)
    const int m = p.m;
    Series s = ser_pow(one_plus_mz(m, N), ratio(-1, m)) * ser_ipow(ser_log1p(Scalar(Rat(m)), N), p.k);
    s = ser_scale(s, Scalar(ratio(1, pow_int(Int(m), p.k) * factorial(p.k))));
    for (int n = 0; n <= N; ++n)
      compare(rep, "m=" + std::to_string(m) + " k=" + std::to_string(p.k) + " n=" + std::to_string(n),
              egf_coeff(s, n), Scalar(triangles::whitney1(m, n, p.k)));
    return rep;
  }

  if (id == "whitney2") {
    // e^z (e^{mz} - 1)^k / (m^k k!)
    const int m = p.m;
    Series em1 = ser_exp_linear(Scalar(Rat(m)), N) - ser_one(N);
    Series s = ser_exp_linear(Scalar(1), N) * ser_ipow(em1, p.k);
    s = ser_scale(s, Scalar(ratio(1, pow_int(Int(m), p.k) * factorial(p.k))));
    for (int n = 0; n <= N; ++n)
      compare(rep, "m=" + std::to_string(m) + " k=" + std::to_string(p.k) + " n=" + std::to_string(n),
              egf_coeff(s, n), Scalar(triangles::whitney2(m, n, p.k)));
    return rep;
  }

  if (id == "eulerian-dowling") {
    // m(x-1) e^{(x-1)z} / (m(x-1) + 1 - e^{m(x-1)z}) at a rational x != 1,
    // with the denominator normalized to unit constant term before inversion.
    const int m = p.m;
    const Rat c = Rat(m) * (p.x - 1);
    if (c == 0) raise(Errc::zero_parameter, "egf_check: eulerian-dowling needs x != 1");
    Series e_cz = ser_exp_linear(Scalar(c), N);
    Series denom_unit = ser_scale(ser_scale(e_cz, Scalar(Rat(-1))) + ser_one(N), Scalar(Rat(1) / c));
    denom_unit.set_coeff(0, Scalar(1));  // (c + 1 - e^{cz})/c has constant term exactly 1
    Series s = ser_exp_linear(Scalar(Rat(p.x - 1)), N) * ser_pow(denom_unit, Rat(-1));
    for (int n = 0; n <= N; ++n)
      compare(rep, "m=" + std::to_string(m) + " x=" + to_string(p.x) + " n=" + std::to_string(n),
              egf_coeff(s, n), Scalar(families::euler_dowling_poly(m, n).eval(p.x)));
    return rep;
  }

  if (id == "rel1") {
    // e^{-tz} (1+mz)^(-1/m) ln(1+mz)^k / (m^k k!)
    const int m = p.m;
    Series s = ser_exp_linear(Scalar(Rat(-p.t)), N) * ser_pow(one_plus_mz(m, N), ratio(-1, m)) *
               ser_ipow(ser_log1p(Scalar(Rat(m)), N), p.k);
    s = ser_scale(s, Scalar(ratio(1, pow_int(Int(m), p.k) * factorial(p.k))));
    for (int n = 0; n <= N; ++n)
      compare(rep,
              "m=" + std::to_string(m) + " t=" + to_string(p.t) + " k=" + std::to_string(p.k) +
                  " n=" + std::to_string(n),
              egf_coeff(s, n), triangles::r_triangle(n, p.k, Scalar(Rat(m)), Scalar(p.t)));
    return rep;
  }

  if (id == "rel2") {
    // e^{-tz} (1+mz)^((u-1)/m) against sum_k R_{n,k}(t) u^k
    const int m = p.m;
    Series s = ser_exp_linear(Scalar(Rat(-p.t)), N) * ser_pow(one_plus_mz(m, N), Rat(Rat(p.u - 1) / Rat(m)));
    const auto rows = triangles::r_triangle_rows(N, Scalar(Rat(m)), Scalar(p.t));
    for (int n = 0; n <= N; ++n) {
      Scalar want(0);
      Rat uk(1);
      for (int k = 0; k <= n; ++k) {
        want += rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * Scalar(uk);
        uk *= p.u;
      }
      compare(rep,
              "m=" + std::to_string(m) + " t=" + to_string(p.t) + " u=" + to_string(p.u) +
                  " n=" + std::to_string(n),
              egf_coeff(s, n), want);
    }
    return rep;
  }

  raise(Errc::unknown_id, "egf_check: unknown id '" + id + "'");
}

}  // namespace dowling
