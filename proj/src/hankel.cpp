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
#include "dowling/hankel.hpp"

#include <utility>

#include "dowling/error.hpp"

namespace dowling {

Scalar det(std::vector<std::vector<Scalar>> mat) {
  const std::size_t n = mat.size();
  if (n == 0) return Scalar(Rat(1));
  for (const auto& row : mat)
    if (row.size() != n) raise(Errc::index_out_of_range, "det: matrix is not square");
  int sign = 1;
  Scalar prev(Rat(1));
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (mat[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < n && mat[r][c].is_zero()) ++r;
      if (r == n) return Scalar(Rat(0));
      std::swap(mat[c], mat[r]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i)
      for (std::size_t j = c + 1; j < n; ++j)
        mat[i][j] = exact_div(mat[c][c] * mat[i][j] - mat[i][c] * mat[c][j], prev);
    prev = mat[c][c];
  }
  Scalar d = mat[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

Scalar hankel_det(const std::vector<Scalar>& entries, int n) {
  if (n < 0) raise(Errc::negative_input, "hankel_det: negative order");
  if (entries.size() < static_cast<std::size_t>(2 * n + 1))
    raise(Errc::insufficient_entries, "hankel_det: need " + std::to_string(2 * n + 1) +
                                          " entries, have " + std::to_string(entries.size()));
  std::vector<std::vector<Scalar>> mat(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    mat[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
      mat[static_cast<std::size_t>(i)].push_back(entries[static_cast<std::size_t>(i + j)]);
  }
  return det(std::move(mat));
}

}  // namespace dowling
