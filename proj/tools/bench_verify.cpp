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

// Times every verification suite under the serial reference sweep and
// the OpenMP sweep, and prints the per-suite and overall speedups.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "dowling/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double run_once(dowling::verify::SuiteFn fn, dowling::verify::ExecMode mode, bool& passed) {
  const auto start = Clock::now();
  const auto report = fn(dowling::verify::Bounds{}, mode);
  passed = passed && report.passed();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string filter = argc > 1 ? argv[1] : "";
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %12s %12s %9s\n", "suite", "serial (ms)", "openmp (ms)", "speedup");

  double total_serial = 0, total_parallel = 0;
  bool passed = true;
  for (const auto& info : dowling::verify::registry()) {
    if (!filter.empty() && filter != info.name) continue;
    // Warm the triangle caches once so both modes pay the same fill cost.
    (void)run_once(info.fn, dowling::verify::ExecMode::serial, passed);
    const double serial = run_once(info.fn, dowling::verify::ExecMode::serial, passed);
    const double parallel = run_once(info.fn, dowling::verify::ExecMode::parallel, passed);
    total_serial += serial;
    total_parallel += parallel;
    std::printf("%-28s %12.2f %12.2f %8.2fx\n", info.name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
  }
  std::printf("%-28s %12.2f %12.2f %8.2fx\n", "total", total_serial, total_parallel,
              total_parallel > 0 ? total_serial / total_parallel : 0.0);
  if (!passed) {
    std::printf("note: at least one suite reported failures\n");
    return 1;
  }
  return 0;
}
