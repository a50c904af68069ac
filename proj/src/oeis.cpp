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
#include "dowling/oeis.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#ifdef DOWLING_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

#include "dowling/error.hpp"

namespace dowling::oeis {

std::string query_string(const std::vector<Int>& terms) {
  std::string q;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) q += ",";
    q += to_string(terms[i]);
  }
  return q;
}

std::string query_filename(const std::string& query) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : query) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "q-" << std::hex << std::setfill('0') << std::setw(16) << h << ".json";
  return os.str();
}

namespace {

bool parse_response(const std::string& body, LookupResult& out) {
  auto doc = nlohmann::json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) return false;
  const auto results = doc.find("results");
  if (results == doc.end() || !results->is_array()) {
    // A response with count 0 and no results array is a clean "no match".
    if (doc.contains("count") && doc["count"].is_number() && doc["count"].get<long>() == 0) {
      out.status = Status::no_match;
      return true;
    }
    return false;
  }
  for (const auto& entry : *results) {
    Match m;
    if (entry.contains("number") && entry["number"].is_number()) {
      std::ostringstream os;
      os << "A" << std::setfill('0') << std::setw(6) << entry["number"].get<long>();
      m.id = os.str();
    }
    if (entry.contains("name") && entry["name"].is_string()) m.name = entry["name"].get<std::string>();
    if (!m.id.empty()) out.matches.push_back(std::move(m));
  }
  out.status = out.matches.empty() ? Status::no_match : Status::ok;
  return true;
}

bool try_file(const std::filesystem::path& path, const std::string& source, LookupResult& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream buf;
  buf << in.rdbuf();
  LookupResult parsed;
  if (!parse_response(buf.str(), parsed)) return false;
  parsed.source = source;
  parsed.detail = path.string();
  out = std::move(parsed);
  return true;
}

// 1 request per second across the process.
void rate_limit(int min_interval_ms) {
  static std::mutex mu;
  static std::chrono::steady_clock::time_point last{};
  std::lock_guard<std::mutex> lock(mu);
  const auto now = std::chrono::steady_clock::now();
  const auto wait = last + std::chrono::milliseconds(min_interval_ms) - now;
  if (last.time_since_epoch().count() != 0 && wait.count() > 0) std::this_thread::sleep_for(wait);
  last = std::chrono::steady_clock::now();
}

}  // namespace

LookupResult lookup(const std::vector<Int>& terms, const Options& opts) {
  if (terms.size() < 4)
    raise(Errc::insufficient_entries, "oeis lookup needs at least 4 terms");
  const std::string query = query_string(terms);
  const std::string file = query_filename(query);

  LookupResult out;
  if (!opts.fixtures_dir.empty() &&
      try_file(std::filesystem::path(opts.fixtures_dir) / file, "fixture-cache", out))
    return out;
  if (!opts.cache_dir.empty() &&
      try_file(std::filesystem::path(opts.cache_dir) / file, "response-cache", out))
    return out;

  if (opts.offline) {
    out.status = Status::failed;
    out.source = "fixture-cache";
    out.detail = "no fixture for query " + query;
    return out;
  }

#ifdef DOWLING_HAVE_OPENSSL
  rate_limit(opts.min_interval_ms);
  httplib::SSLClient client("oeis.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(10);
  const std::string target = "/search?q=" + query + "&fmt=json";
  auto res = client.Get(target);
  if (!res)
    raise(Errc::network_unavailable,
          "oeis lookup failed: transport error " + std::to_string(static_cast<int>(res.error())));
  if (res->status != 200)
    raise(Errc::network_unavailable, "oeis lookup failed: HTTP " + std::to_string(res->status));
  if (!opts.cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(opts.cache_dir, ec);
    std::ofstream cache(std::filesystem::path(opts.cache_dir) / file);
    cache << res->body;
  }
  if (!parse_response(res->body, out))
    raise(Errc::network_unavailable, "oeis lookup: unparseable response");
  out.source = "live";
  out.detail = "https://oeis.org" + target;
  return out;
#else
  raise(Errc::network_unavailable, "oeis live lookup not built (no TLS support)");
#endif
}

}  // namespace dowling::oeis
