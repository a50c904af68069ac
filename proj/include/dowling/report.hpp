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

namespace dowling {

/// One mismatching instance of a verified identity.
struct Failure {
  std::string instance;  // "m=2 n=3 k=1"
  std::string left;
  std::string right;
};

/// Outcome of one named verification suite.
///
/// Ordinary suites pass when no instance mismatched. Expected-fail suites
/// document a suspected erratum: they pass exactly when the printed form
/// failed somewhere, and record the first counterexample.
struct Report {
  std::string suite;
  std::string bounds;
  long instances = 0;
  std::vector<Failure> failures;
  bool expected_fail = false;

  bool passed() const { return expected_fail ? !failures.empty() : failures.empty(); }
};

}  // namespace dowling
