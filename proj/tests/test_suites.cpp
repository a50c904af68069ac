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
#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "dowling/suites.hpp"

using namespace dowling;
using namespace dowling::verify;

namespace {

// The closed identity registry. A missing or extra suite here is a
// coverage regression, not a style choice.
const std::set<std::string> kExpectedSuites = {
    "whitney2-explicit", "whitney1-charpoly", "whitney1-sign", "orthogonality", "rec1", "recc1",
    "sim0", "resulta1", "resulta2", "c01", "c02", "f01", "f02", "bell-2k", "f1", "f2", "f3", "f4",
    "f5", "geo-simons", "geo-2k", "frobenius", "sm1", "relation", "eul-coeff", "eul2", "eul3",
    "fubini-2k", "egf-firstkind2", "egf-bell", "egf-whitney1", "egf-whitney2",
    "egf-eulerian-dowling", "egf-rel1", "egf-rel2", "rel3-vs-exp1", "table1", "cong4", "cong5",
    "cong-printed", "hankel-bell", "hankel-dowling", "hankel-suter", "hankel-r-dowling",
    "hankel-binom-invariance", "rbellbell", "rdowbel", "beldow", "r-bell-binomial", "man", "mout",
    "stirling-shift", "ms-formula", "ms-divides", "ms-l-corrected", "r-simons-1", "r-simons-2",
    "w1-stirling", "d1-bell", "f1-geometric", "expected-fail-f6", "expected-fail-f7",
    "expected-fail-ms-l"};

bool reports_equal(const Report& a, const Report& b) {
  if (a.suite != b.suite || a.bounds != b.bounds || a.instances != b.instances ||
      a.expected_fail != b.expected_fail || a.failures.size() != b.failures.size())
    return false;
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    if (a.failures[i].instance != b.failures[i].instance || a.failures[i].left != b.failures[i].left ||
        a.failures[i].right != b.failures[i].right)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("registry is exactly the closed suite list") {
  std::set<std::string> found;
  for (const auto& info : registry()) {
    CHECK(found.insert(info.name).second);  // no duplicates
    CHECK(find_suite(info.name) == &info);
  }
  CHECK(found == kExpectedSuites);
  CHECK(registry().size() == 63);
  CHECK(find_suite("no-such-suite") == nullptr);
}

TEST_CASE("every registered suite runs and checks something") {
  Bounds small;
  small.n_max = 3;
  small.m_max = 2;
  small.r_max = 2;
  small.i_max = 3;
  small.k_max = 2;
  small.l_max = 2;
  small.order = 4;
  for (const auto& info : registry()) {
    const Report rep = info.fn(small, ExecMode::serial);
    INFO(std::string(info.name));
    CHECK(rep.instances > 0);
    CHECK(rep.suite == info.name);
    CHECK(rep.passed());
  }
}

TEST_CASE("serial and parallel sweeps produce identical reports") {
  const char* names[] = {"orthogonality", "cong4",   "hankel-dowling", "f5",
                         "expected-fail-f6", "table1", "egf-whitney1"};
  Bounds small;
  small.n_max = 4;
  small.m_max = 2;
  small.r_max = 2;
  small.i_max = 4;
  small.k_max = 2;
  small.l_max = 2;
  small.order = 5;
  for (const char* name : names) {
    const SuiteInfo* info = find_suite(name);
    REQUIRE(info != nullptr);
    const Report serial = info->fn(small, ExecMode::serial);
    const Report parallel = info->fn(small, ExecMode::parallel);
    INFO(name);
    CHECK(reports_equal(serial, parallel));
  }
}

TEST_CASE("expected-fail suites record the predicted counterexamples") {
  const Report f6 = find_suite("expected-fail-f6")->fn(Bounds{}, ExecMode::serial);
  CHECK(f6.passed());
  REQUIRE(f6.failures.size() == 1);
  CHECK(f6.failures.front().instance == "n=0");
  CHECK(f6.failures.front().left == "x");
  CHECK(f6.failures.front().right == "2");

  const Report f7 = find_suite("expected-fail-f7")->fn(Bounds{}, ExecMode::serial);
  CHECK(f7.passed());
  REQUIRE(f7.failures.size() == 1);
  CHECK(f7.failures.front().instance == "n=0");

  const Report msl = find_suite("expected-fail-ms-l")->fn(Bounds{}, ExecMode::serial);
  CHECK(msl.passed());
  REQUIRE(msl.failures.size() == 1);
  CHECK(msl.failures.front().instance == "l=2 n=1");
  CHECK(msl.failures.front().left == "3");
  CHECK(msl.failures.front().right == "3/2");
}
