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
#include "dowling/triangles.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "dowling/error.hpp"

namespace dowling::triangles {

namespace {

// Rows are only ever appended complete, under the lock; readers copy the
// requested entry out, so concurrent queries see either a finished row or
// trigger the fill themselves.
using Rows = std::vector<std::vector<Int>>;

template <typename Fill>
Int cached_entry(Rows& rows, std::mutex& mu, int n, int k, Fill fill_row) {
  if (k < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(rows.size()) <= n) {
    const int r = static_cast<int>(rows.size());
    std::vector<Int> row(static_cast<std::size_t>(r) + 1);
    fill_row(rows, r, row);
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Int at(const Rows& rows, int n, int k) {
  if (k < 0 || k > n) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

Int stirling1(int n, int k) {
  if (n < 0) raise(Errc::negative_input, "stirling1: negative n");
  static Rows rows;
  static std::mutex mu;
  return cached_entry(rows, mu, n, k, [](const Rows& prev, int r, std::vector<Int>& row) {
    if (r == 0) {
      row[0] = 1;
      return;
    }
    for (int j = 0; j <= r; ++j) row[static_cast<std::size_t>(j)] = at(prev, r - 1, j - 1) - (r - 1) * at(prev, r - 1, j);
  });
}

Int stirling2(int n, int k) {
  if (n < 0) raise(Errc::negative_input, "stirling2: negative n");
  static Rows rows;
  static std::mutex mu;
  return cached_entry(rows, mu, n, k, [](const Rows& prev, int r, std::vector<Int>& row) {
    if (r == 0) {
      row[0] = 1;
      return;
    }
    for (int j = 0; j <= r; ++j) row[static_cast<std::size_t>(j)] = j * at(prev, r - 1, j) + at(prev, r - 1, j - 1);
  });
}

Int stirling2_explicit(int n, int k) {
  if (n < 0) raise(Errc::negative_input, "stirling2_explicit: negative n");
  if (k < 0 || k > n) return 0;
  Int sum = 0;
  for (int j = 0; j <= k; ++j) {
    Int term = binomial(k, j) * pow_int(Int(j), n);
    if ((k - j) % 2 != 0) term = -term;
    sum += term;
  }
  return exact_div(sum, factorial(k));
}

Int eulerian(int n, int k) {
  if (n < 0) raise(Errc::negative_input, "eulerian: negative n");
  static Rows rows;
  static std::mutex mu;
  return cached_entry(rows, mu, n, k, [](const Rows& prev, int r, std::vector<Int>& row) {
    if (r == 0) {
      row[0] = 1;
      return;
    }
    for (int j = 0; j <= r; ++j)
      row[static_cast<std::size_t>(j)] = (j + 1) * at(prev, r - 1, j) + (r - j) * at(prev, r - 1, j - 1);
  });
}

namespace {

struct WhitneyCaches {
  std::map<int, Rows> by_m;
  std::mutex mu;
};

// Shared fill driver for the two Whitney recurrences.
template <typename Step>
Int whitney_cached(WhitneyCaches& caches, int m, int n, int k, Step step) {
  if (m < 1) raise(Errc::negative_input, "whitney: m must be >= 1");
  if (n < 0) raise(Errc::negative_input, "whitney: negative n");
  if (k < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(caches.mu);
  Rows& rows = caches.by_m[m];
  while (static_cast<int>(rows.size()) <= n) {
    const int r = static_cast<int>(rows.size());
    std::vector<Int> row(static_cast<std::size_t>(r) + 1);
    if (r == 0) {
      row[0] = 1;
    } else {
      for (int j = 0; j <= r; ++j) row[static_cast<std::size_t>(j)] = step(rows, m, r, j);
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

Int whitney1(int m, int n, int k) {
  static WhitneyCaches caches;
  return whitney_cached(caches, m, n, k, [](const Rows& prev, int m_, int r, int j) {
    return Int(at(prev, r - 1, j - 1) - (1 + m_ * (r - 1)) * at(prev, r - 1, j));
  });
}

Int whitney1_abs(int m, int n, int k) {
  static WhitneyCaches caches;
  return whitney_cached(caches, m, n, k, [](const Rows& prev, int m_, int r, int j) {
    return Int((1 + m_ * (r - 1)) * at(prev, r - 1, j) + at(prev, r - 1, j - 1));
  });
}

Int whitney1_explicit(int m, int n, int k) {
  if (m < 1) raise(Errc::negative_input, "whitney1_explicit: m must be >= 1");
  if (n < 0) raise(Errc::negative_input, "whitney1_explicit: negative n");
  if (k < 0 || k > n) return 0;
  Int sum = 0;
  for (int i = 0; i <= n; ++i) {
    Int term = binomial(i, k) * pow_int(Int(m), n - i) * stirling1(n, i);
    if ((i - k) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

Int whitney2(int m, int n, int k) {
  static WhitneyCaches caches;
  return whitney_cached(caches, m, n, k, [](const Rows& prev, int m_, int r, int j) {
    return Int((1 + m_ * j) * at(prev, r - 1, j) + at(prev, r - 1, j - 1));
  });
}

Int whitney2_explicit_binom(int m, int n, int k) {
  if (m < 1) raise(Errc::negative_input, "whitney2_explicit_binom: m must be >= 1");
  if (n < 0) raise(Errc::negative_input, "whitney2_explicit_binom: negative n");
  if (k < 0 || k > n) return 0;
  Int sum = 0;
  for (int i = k; i <= n; ++i) sum += binomial(n, i) * pow_int(Int(m), i - k) * stirling2(i, k);
  return sum;
}

Int whitney2_explicit_alt(int m, int n, int k) {
  if (m < 1) raise(Errc::negative_input, "whitney2_explicit_alt: m must be >= 1");
  if (n < 0) raise(Errc::negative_input, "whitney2_explicit_alt: negative n");
  if (k < 0 || k > n) return 0;
  Int sum = 0;
  for (int i = 0; i <= k; ++i) {
    Int term = binomial(k, i) * pow_int(Int(m * i + 1), n);
    if ((k - i) % 2 != 0) term = -term;
    sum += term;
  }
  return exact_div(sum, pow_int(Int(m), k) * factorial(k));
}

Int r_stirling2(int r, int n, int k) {
  if (r < 0) raise(Errc::negative_input, "r_stirling2: negative r");
  if (n < r) raise(Errc::index_below_r, "r_stirling2: n = " + std::to_string(n) + " below r = " + std::to_string(r));
  if (k < 0 || k > n) return 0;
  // Cache per r; row index is n - r so the n = r base row sits at 0.
  static std::map<int, Rows> by_r;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  Rows& rows = by_r[r];
  while (static_cast<int>(rows.size()) <= n - r) {
    const int d = static_cast<int>(rows.size());  // current n - r
    const int nn = r + d;
    std::vector<Int> row(static_cast<std::size_t>(nn) + 1);
    if (d == 0) {
      row[static_cast<std::size_t>(r)] = 1;  // delta(k, r) on the base row
    } else {
      for (int j = 0; j <= nn; ++j) {
        Int above = (j <= nn - 1) ? rows[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(j)] : Int(0);
        Int diag = (j - 1 >= 0 && j - 1 <= nn - 1)
                       ? rows[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(j - 1)]
                       : Int(0);
        row[static_cast<std::size_t>(j)] = j * above + diag;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n - r)][static_cast<std::size_t>(k)];
}

Int r_whitney2(int m, int r, int n, int k) {
  if (m < 1) raise(Errc::negative_input, "r_whitney2: m must be >= 1");
  if (r < 0) raise(Errc::negative_input, "r_whitney2: negative r");
  if (n < 0) raise(Errc::negative_input, "r_whitney2: negative n");
  if (k < 0 || k > n) return 0;
  Int sum = 0;
  for (int j = k; j <= n; ++j)
    sum += binomial(n, j) * pow_int(Int(m), j - k) * pow_int(Int(r), n - j) * stirling2(j, k);
  return sum;
}

Int eulerian_dowling(int m, int n, int k) {
  if (m < 1) raise(Errc::negative_input, "eulerian_dowling: m must be >= 1");
  if (n < 0) raise(Errc::negative_input, "eulerian_dowling: negative n");
  if (k < 0 || k > n) return 0;
  Int sum = 0;
  for (int i = 0; i <= n; ++i) {
    const Int c = binomial(n - i, k);  // vanishes for n - i < k
    if (c == 0) continue;
    Int term = factorial(i) * c * whitney2(m, n, i);
    if (((n - i - k) % 2 + 2) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

namespace {

void check_specs(const Scalar& m_spec, const Scalar& t_spec) {
  if (m_spec.is_poly() && t_spec.is_poly())
    raise(Errc::two_formal_variables, "r_triangle: at most one of m, t may be formal");
}

}  // namespace

std::vector<std::vector<Scalar>> r_triangle_rows(int n_max, const Scalar& m_spec, const Scalar& t_spec) {
  if (n_max < 0) raise(Errc::negative_input, "r_triangle_rows: negative n_max");
  check_specs(m_spec, t_spec);
  const Scalar one_plus_t = Scalar(1) + t_spec;
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  rows.push_back({Scalar(1)});
  for (int n = 0; n < n_max; ++n) {
    const auto& rn = rows.back();
    auto entry = [&](const std::vector<Scalar>& row, int j) {
      return (j < 0 || j >= static_cast<int>(row.size())) ? Scalar(0) : row[static_cast<std::size_t>(j)];
    };
    const Scalar mn = m_spec * Scalar(n);
    std::vector<Scalar> next(static_cast<std::size_t>(n) + 2, Scalar(0));
    for (int j = 0; j <= n + 1; ++j) {
      Scalar v = entry(rn, j - 1) - (one_plus_t + mn) * entry(rn, j);
      if (n >= 1) v -= mn * t_spec * entry(rows[static_cast<std::size_t>(n) - 1], j);
      next[static_cast<std::size_t>(j)] = std::move(v);
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

Scalar r_triangle(int n, int k, const Scalar& m_spec, const Scalar& t_spec) {
  if (n < 0) raise(Errc::negative_input, "r_triangle: negative n");
  if (k < 0 || k > n) return Scalar(0);
  auto rows = r_triangle_rows(n, m_spec, t_spec);
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Scalar r_triangle_explicit(int n, int k, int m, const Scalar& t_spec) {
  if (m < 1) raise(Errc::negative_input, "r_triangle_explicit: m must be >= 1");
  if (n < 0) raise(Errc::negative_input, "r_triangle_explicit: negative n");
  if (k < 0 || k > n) return Scalar(0);
  Scalar sum(0);
  for (int j = 0; j <= n; ++j) {
    Scalar term = Scalar(Rat(binomial(n, j) * whitney1(m, n - j, k))) * pow(t_spec, j);
    if (j % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace dowling::triangles
