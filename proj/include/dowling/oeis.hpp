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

#include "dowling/numeric.hpp"

namespace dowling::oeis {

struct Match {
  std::string id;    // "A000110"
  std::string name;  // sequence title
};

enum class Status {
  ok,        // query answered, matches listed (possibly after a cache hit)
  no_match,  // query answered, nothing matched
  failed,    // no fixture/cache available (offline) or transport failure
};

struct LookupResult {
  Status status = Status::failed;
  std::vector<Match> matches;
  std::string source;  // "fixture-cache", "response-cache", "live"
  std::string detail;  // file path or URL actually consulted
};

struct Options {
  bool offline = true;                 // fixtures/cache only; never touches the network
  std::string fixtures_dir;            // bundled response files
  std::string cache_dir;               // on-disk cache for live responses
  int min_interval_ms = 1000;          // live-mode rate limit
};

/// "1,2,6,24,116"
std::string query_string(const std::vector<Int>& terms);

/// Response files are named by a 64-bit FNV-1a hash of the query string.
std::string query_filename(const std::string& query);

/// Looks the terms up in the bundled fixtures, then the response cache,
/// then (online mode only) the public search endpoint. Needs at least 4
/// terms. A forced-online transport failure raises network_unavailable.
LookupResult lookup(const std::vector<Int>& terms, const Options& opts);

}  // namespace dowling::oeis
