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
#include "dowling/runner.hpp"

namespace dowling::verify {

/// Range overrides for a suite run; -1 keeps the suite's own default.
struct Bounds {
  int n_max = -1;
  int m_max = -1;
  int r_max = -1;
  int i_max = -1;
  int k_max = -1;
  int l_max = -1;
  int order = -1;
};

using SuiteFn = Report (*)(const Bounds&, ExecMode);

struct SuiteInfo {
  const char* name;
  SuiteFn fn;
  const char* summary;
};

/// The closed registry of every verified identity, in a fixed order.
const std::vector<SuiteInfo>& registry();

const SuiteInfo* find_suite(const std::string& name);  // nullptr when unknown

std::vector<Report> run_all(const Bounds& bounds, ExecMode mode);

}  // namespace dowling::verify
