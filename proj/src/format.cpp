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
#include "dowling/format.hpp"

#include <sstream>

#include "dowling/error.hpp"

namespace dowling::fmt {

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  raise(Errc::unknown_id, "unknown format '" + name + "'");
}

namespace {

const Int kJsonSafeMax = (Int(1) << 53);

}  // namespace

Json json_int(const Int& v) {
  if (v <= kJsonSafeMax && v >= -kJsonSafeMax) return Json(v.get_si());
  return Json(v.get_str());
}

Json json_rat(const Rat& q) {
  if (is_integer(q)) return json_int(q.get_num());
  return Json::array({json_int(q.get_num()), json_int(q.get_den())});
}

Json json_poly(const Poly& p) {
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(json_rat(p.coeff(k)));
  return Json{{"var", var_name(p.var())}, {"coeffs", coeffs}, {"str", p.str()}};
}

Json json_scalar(const Scalar& s) {
  if (s.is_rational()) return json_rat(s.rational());
  return json_poly(s.poly());
}

Json json_report(const Report& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"instance", f.instance}, {"left", f.left}, {"right", f.right}});
  return Json{{"suite", r.suite},
              {"bounds", r.bounds},
              {"instances", r.instances},
              {"expected_fail", r.expected_fail},
              {"passed", r.passed()},
              {"failures", failures}};
}

Json envelope(const std::string& command, Json params, Json data) {
  return Json{{"command", command},
              {"params", std::move(params)},
              {"data", std::move(data)},
              {"provenance", Json{{"tool", "dowling"}, {"version", "0.1.0"}}}};
}

std::string render_plain(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(t.header);
  for (const auto& row : t.rows) widen(row);
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << row[i];
      if (i + 1 < row.size())
        os << std::string(width[i] - row[i].size(), ' ');
    }
    os << "\n";
  };
  if (!t.header.empty()) emit(t.header);
  for (const auto& row : t.rows) emit(row);
  return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << csv_escape(row[i]);
    }
    os << "\n";
  };
  if (!t.header.empty()) emit(t.header);
  for (const auto& row : t.rows) emit(row);
  return os.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dowling::fmt
