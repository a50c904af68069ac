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

// Drives the built CLI binary end to end: output determinism, exit
// codes, the JSON envelope, and the offline OEIS fixtures.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "json.hpp"

namespace {

std::string g_bin;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string cmd = g_bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int g_failures = 0;

#define CLI_CHECK(cond)                                                          \
  do {                                                                           \
    if (!(cond)) {                                                               \
      ++g_failures;                                                              \
      std::cerr << "CLI_CHECK failed at line " << __LINE__ << ": " #cond "\n";   \
    }                                                                            \
  } while (0)

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

void test_determinism() {
  const char* cmds[] = {
      "table R --m formal --t 1 --n-max 4 --format csv",
      "verify orthogonality --format json",
      "poly dowling --m 2 --n-max 6 --format json",
      "seq dowling-number --m 2 --count 8 --format plain",
  };
  for (const char* c : cmds) {
    const RunResult a = run(c);
    const RunResult b = run(c);
    CLI_CHECK(a.exit_code == 0);
    CLI_CHECK(a.exit_code == b.exit_code);
    CLI_CHECK(a.output == b.output);
    CLI_CHECK(!a.output.empty());
  }
}

void test_table_values() {
  const RunResult r = run("table stirling2 --n 4 --format plain");
  CLI_CHECK(r.exit_code == 0);
  CLI_CHECK(contains(r.output, "7"));
  CLI_CHECK(contains(r.output, "6"));

  const RunResult t1 = run("table R --m formal --t 1 --n 4 --format csv");
  CLI_CHECK(t1.exit_code == 0);
  const char* entries[] = {"-2",          "m+4",           "-m-4",
                           "-2m^2-6m-8",  "2m^2+9m+12",    "-3m-6",
                           "6m^3+19m^2+24m+16", "-6m^3-30m^2-48m-32", "11m^2+30m+24",
                           "-6m-8"};
  for (const char* e : entries) CLI_CHECK(contains(t1.output, e));

  const RunResult w1 = run("table whitney2 --m 1 --n 3");
  CLI_CHECK(w1.exit_code == 0);
  CLI_CHECK(contains(w1.output, "7"));  // W_1(3,1) = S(4,2)
}

void test_seq_values() {
  const RunResult d = run("seq dowling-number --m 2 --count 5 --format csv");
  CLI_CHECK(d.exit_code == 0);
  CLI_CHECK(contains(d.output, "0,1"));
  CLI_CHECK(contains(d.output, "1,2"));
  CLI_CHECK(contains(d.output, "2,6"));
  CLI_CHECK(contains(d.output, "3,24"));
  CLI_CHECK(contains(d.output, "4,116"));
  const RunResult f = run("seq fubini --count 5 --format csv");
  CLI_CHECK(contains(f.output, "4,75"));
  const RunResult b = run("seq bell --count 5 --format csv");
  CLI_CHECK(contains(b.output, "4,15"));
}

void test_verify_exit_codes() {
  CLI_CHECK(run("verify table1").exit_code == 0);
  CLI_CHECK(run("verify expected-fail-f6").exit_code == 0);
  CLI_CHECK(run("verify cong5 --n-max 3 --i-max 4").exit_code == 0);
  CLI_CHECK(run("verify no-such-suite").exit_code == 2);
  CLI_CHECK(run("frobnicate").exit_code == 2);
  CLI_CHECK(run("verify w1-stirling --serial").exit_code == 0);
  CLI_CHECK(run("verify w1-stirling --jobs 2").exit_code == 0);
}

void test_json_envelope() {
  const RunResult r = run("verify d1-bell --format json");
  CLI_CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output, nullptr, false);
  CLI_CHECK(!doc.is_discarded());
  CLI_CHECK(doc.contains("command"));
  CLI_CHECK(doc.contains("params"));
  CLI_CHECK(doc.contains("data"));
  CLI_CHECK(doc.contains("provenance"));
  CLI_CHECK(doc["command"] == "verify");
  CLI_CHECK(doc["data"]["reports"][0]["passed"] == true);

  // exact big integers survive as decimal strings beyond 2^53
  const RunResult big = run("seq bell --count 30 --format json");
  auto bell_doc = nlohmann::json::parse(big.output, nullptr, false);
  CLI_CHECK(!bell_doc.is_discarded());
  const auto& last = bell_doc["data"]["values"][29];
  CLI_CHECK(last.is_string());
  CLI_CHECK(last.get<std::string>() == "71339801938860275191172");  // Bell(29)
}

void test_polynomials_lists() {
  const RunResult r = run("poly bell --n-max 4 --format csv");
  CLI_CHECK(r.exit_code == 0);
  CLI_CHECK(contains(r.output, "x^4+6x^3+7x^2+x"));
  const RunResult g = run("poly geometric --n-max 4 --format csv");
  CLI_CHECK(contains(g.output, "24x^4+36x^3+14x^2+x"));
  const RunResult e = run("poly eulerian --n-max 4 --format csv");
  CLI_CHECK(contains(e.output, "x^4+11x^3+11x^2+x"));
}

void test_hankel_and_congruence() {
  const RunResult h = run("hankel dowling --m 2 --n-max 2 --format csv");
  CLI_CHECK(h.exit_code == 0);
  CLI_CHECK(contains(h.output, "16x^3"));
  const RunResult hx = run("hankel dowling --m 3 --x 1 --n-max 2 --format csv");
  CLI_CHECK(contains(hx.output, "1,3"));   // 3^C(2,2) * 1!
  CLI_CHECK(contains(hx.output, "2,54"));  // 3^C(3,2) * 1! * 2!
  const RunResult c = run("congruence --n 2 --i 2 --m 1 --t 1 --format csv");
  CLI_CHECK(c.exit_code == 0);
  CLI_CHECK(contains(c.output, "2,2,1,1,2,1"));
}

void test_oeis_offline() {
  const RunResult dowling = run("oeis --terms 1,2,6,24,116");
  CLI_CHECK(dowling.exit_code == 0);
  CLI_CHECK(contains(dowling.output, "A007405"));
  const RunResult bell = run("oeis --terms 1,1,2,5,15,52 --format json");
  CLI_CHECK(bell.exit_code == 0);
  CLI_CHECK(contains(bell.output, "A000110"));
  auto doc = nlohmann::json::parse(bell.output, nullptr, false);
  CLI_CHECK(!doc.is_discarded());
  CLI_CHECK(doc["provenance"]["source"] == "fixture-cache");
  // too few terms is a usage error
  CLI_CHECK(run("oeis --terms 1,2,3").exit_code == 2);
  // unknown query, offline: lookup failed -> external-service exit code
  CLI_CHECK(run("oeis --terms 2,3,5,7,11,13").exit_code == 3);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-dowling-binary>\n";
    return 2;
  }
  g_bin = argv[1];
  test_determinism();
  test_table_values();
  test_seq_values();
  test_verify_exit_codes();
  test_json_envelope();
  test_polynomials_lists();
  test_hankel_and_congruence();
  test_oeis_offline();
  if (g_failures > 0) {
    std::cerr << g_failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
