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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dowling/report.hpp"

namespace dowling::verify {

/// One independent instance of an identity: evaluates to nullopt on a
/// match, or to the rendered (left, right) values on a mismatch. Cells
/// only read immutable or lock-protected state, so a sweep may run them
/// in any order or concurrently.
struct Cell {
  std::string label;
  std::function<std::optional<std::pair<std::string, std::string>>()> eval;
};

enum class ExecMode { serial, parallel };

/// Evaluates every cell (serially, or with an OpenMP parallel-for over
/// the cell index) and aggregates failures in cell order, so both modes
/// produce identical Reports. The serial path is the reference the
/// parallel one is tested and benchmarked against.
Report run_cells(std::string suite, std::string bounds, const std::vector<Cell>& cells,
                 ExecMode mode, bool expected_fail = false);

}  // namespace dowling::verify
