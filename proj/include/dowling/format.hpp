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

// Vendored single-header nlohmann/json.
#include "json.hpp"

#include "dowling/report.hpp"
#include "dowling/scalar.hpp"

namespace dowling::fmt {

enum class Format { plain, csv, json };

/// Accepts "plain", "csv", "json"; raises unknown_id otherwise.
Format parse_format(const std::string& name);

using Json = nlohmann::ordered_json;

/// Integers stay JSON numbers up to 2^53 and become decimal strings
/// beyond, so downstream tooling never sees a lossy double.
Json json_int(const Int& v);

/// den == 1 collapses to an integer; otherwise a [num, den] pair.
Json json_rat(const Rat& q);

/// {"var": "x", "coeffs": [...lowest degree first...]}
Json json_poly(const Poly& p);

Json json_scalar(const Scalar& s);

Json json_report(const Report& r);

/// {"command":…, "params":…, "data":…, "provenance":…}; no timestamps,
/// so identical invocations serialize identically.
Json envelope(const std::string& command, Json params, Json data);

/// Row-oriented document for the plain and csv renderers.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_plain(const Table& t);  // aligned columns
std::string render_csv(const Table& t);

std::string dump_json(const Json& j);  // stable 2-space indentation

}  // namespace dowling::fmt
