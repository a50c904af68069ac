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
#include "dowling/runner.hpp"

namespace dowling::verify {

Report run_cells(std::string suite, std::string bounds, const std::vector<Cell>& cells,
                 ExecMode mode, bool expected_fail) {
  const long count = static_cast<long>(cells.size());
  std::vector<std::optional<std::pair<std::string, std::string>>> results(cells.size());

  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < count; ++idx)
      results[static_cast<std::size_t>(idx)] = cells[static_cast<std::size_t>(idx)].eval();
  } else {
    for (long idx = 0; idx < count; ++idx)
      results[static_cast<std::size_t>(idx)] = cells[static_cast<std::size_t>(idx)].eval();
  }

  Report rep;
  rep.suite = std::move(suite);
  rep.bounds = std::move(bounds);
  rep.instances = count;
  rep.expected_fail = expected_fail;
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    if (!results[idx]) continue;
    rep.failures.push_back({cells[idx].label, results[idx]->first, results[idx]->second});
    if (expected_fail) break;  // the first counterexample is the record
  }
  return rep;
}

}  // namespace dowling::verify
