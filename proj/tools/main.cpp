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

// Command-line front end: table/poly/seq emission, the verification
// suite runner, Hankel transforms, congruence certificates, and the
// OEIS cross-check client.

#include <omp.h>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dowling/congruences.hpp"
#include "dowling/error.hpp"
#include "dowling/families.hpp"
#include "dowling/format.hpp"
#include "dowling/hankel.hpp"
#include "dowling/oeis.hpp"
#include "dowling/suites.hpp"
#include "dowling/transforms.hpp"
#include "dowling/triangles.hpp"

#ifndef DOWLING_OEIS_FIXTURES_DIR
#define DOWLING_OEIS_FIXTURES_DIR "data/oeis"
#endif

namespace {

using namespace dowling;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExternal = 3;

struct GlobalOpts {
  std::string format = "plain";
};

void emit(const fmt::Table& table, const fmt::Json& json_doc, const GlobalOpts& g) {
  switch (fmt::parse_format(g.format)) {
    case fmt::Format::plain:
      std::cout << fmt::render_plain(table);
      break;
    case fmt::Format::csv:
      std::cout << fmt::render_csv(table);
      break;
    case fmt::Format::json:
      std::cout << fmt::dump_json(json_doc);
      break;
  }
}

// "formal" or an integer/rational literal.
Scalar parse_spec(const std::string& text, Var v) {
  if (text == "formal") return Scalar(Poly::variable(v));
  return Scalar(parse_rational(text));
}

int require_int(const std::string& text, const char* what) {
  const Rat q = parse_rational(text);
  if (!is_integer(q)) raise(Errc::unknown_id, std::string(what) + " must be an integer");
  return static_cast<int>(q.get_num().get_si());
}

// ---------------------------------------------------------------- table

int cmd_table(const GlobalOpts& g, const std::string& family, const std::string& m_text,
              const std::string& r_text, const std::string& t_text, int n_max) {
  fmt::Table table;
  fmt::Json data = fmt::Json::array();
  table.header = {"n\\k"};
  for (int k = 0; k <= n_max; ++k) table.header.push_back(std::to_string(k));

  auto entry = [&](int n, int k) -> Scalar {
    if (family == "stirling1") return Scalar(triangles::stirling1(n, k));
    if (family == "stirling2") return Scalar(triangles::stirling2(n, k));
    if (family == "eulerian") return Scalar(triangles::eulerian(n, k));
    if (family == "whitney1") return Scalar(triangles::whitney1(require_int(m_text, "--m"), n, k));
    if (family == "whitney2") return Scalar(triangles::whitney2(require_int(m_text, "--m"), n, k));
    if (family == "r-stirling2") {
      const int r = require_int(r_text, "--r");
      return Scalar(triangles::r_stirling2(r, n + r, k + r));
    }
    if (family == "r-whitney2")
      return Scalar(
          triangles::r_whitney2(require_int(m_text, "--m"), require_int(r_text, "--r"), n, k));
    if (family == "eulerian-dowling")
      return Scalar(triangles::eulerian_dowling(require_int(m_text, "--m"), n, k));
    if (family == "R")
      return triangles::r_triangle(n, k, parse_spec(m_text, Var::m), parse_spec(t_text, Var::t));
    raise(Errc::unknown_id, "unknown table family '" + family + "'");
  };

  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::string> row = {std::to_string(n)};
    fmt::Json jrow = fmt::Json::array();
    for (int k = 0; k <= n; ++k) {
      const Scalar v = entry(n, k);
      row.push_back(v.str());
      jrow.push_back(fmt::json_scalar(v));
    }
    table.rows.push_back(std::move(row));
    data.push_back(std::move(jrow));
  }

  fmt::Json params{{"family", family}, {"m", m_text}, {"r", r_text}, {"t", t_text}, {"n_max", n_max}};
  emit(table, fmt::envelope("table", params, fmt::Json{{"triangle", data}}), g);
  return kExitOk;
}

// ----------------------------------------------------------------- poly

Poly poly_family(const std::string& family, int m, int r, int n) {
  if (family == "bell") return families::bell(n);
  if (family == "geometric") return families::geometric(n);
  if (family == "eulerian") return families::eulerian_poly(n);
  if (family == "dowling") return families::dowling(m, n);
  if (family == "tanny-dowling") return families::tanny_dowling(m, n);
  if (family == "euler-dowling") return families::euler_dowling_poly(m, n);
  if (family == "r-bell") return families::r_bell(r, n);
  if (family == "r-dowling") return families::r_dowling(m, r, n);
  if (family == "char") return families::char_poly(m, n);
  raise(Errc::unknown_id, "unknown polynomial family '" + family + "'");
}

int cmd_poly(const GlobalOpts& g, const std::string& family, int m, int r, int n_max) {
  fmt::Table table;
  table.header = {"n", "polynomial"};
  fmt::Json data = fmt::Json::array();
  for (int n = 0; n <= n_max; ++n) {
    const Poly p = poly_family(family, m, r, n);
    table.rows.push_back({std::to_string(n), p.str()});
    data.push_back(fmt::json_poly(p));
  }
  fmt::Json params{{"family", family}, {"m", m}, {"r", r}, {"n_max", n_max}};
  emit(table, fmt::envelope("poly", params, fmt::Json{{"polynomials", data}}), g);
  return kExitOk;
}

// ------------------------------------------------------------------ seq

int cmd_seq(const GlobalOpts& g, const std::string& family, int m, int r, int count) {
  fmt::Table table;
  table.header = {"n", "value"};
  fmt::Json data = fmt::Json::array();
  auto value = [&](int n) -> Rat {
    if (family == "bell") return families::bell(n).eval(Rat(1));
    if (family == "fubini") return families::geometric(n).eval(Rat(1));
    if (family == "dowling-number") return families::dowling(m, n).eval(Rat(1));
    if (family == "r-dowling-number") return families::r_dowling(m, r, n).eval(Rat(1));
    if (family == "r-bell-number") return families::r_bell(r, n).eval(Rat(1));
    raise(Errc::unknown_id, "unknown sequence family '" + family + "'");
  };
  for (int n = 0; n < count; ++n) {
    const Rat v = value(n);
    table.rows.push_back({std::to_string(n), to_string(v)});
    data.push_back(fmt::json_rat(v));
  }
  fmt::Json params{{"family", family}, {"m", m}, {"r", r}, {"count", count}};
  emit(table, fmt::envelope("seq", params, fmt::Json{{"values", data}}), g);
  return kExitOk;
}

// --------------------------------------------------------------- verify

verify::ExecMode exec_mode(bool serial, int jobs) {
  if (serial) return verify::ExecMode::serial;
  if (jobs > 0) omp_set_num_threads(jobs);
  return verify::ExecMode::parallel;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, const verify::Bounds& bounds,
               bool serial, int jobs, bool list_only) {
  if (list_only) {
    fmt::Table table;
    table.header = {"suite", "summary"};
    fmt::Json data = fmt::Json::array();
    for (const auto& info : verify::registry()) {
      table.rows.push_back({info.name, info.summary});
      data.push_back(fmt::Json{{"suite", info.name}, {"summary", info.summary}});
    }
    emit(table, fmt::envelope("verify", fmt::Json{{"list", true}}, fmt::Json{{"suites", data}}), g);
    return kExitOk;
  }

  const verify::ExecMode mode = exec_mode(serial, jobs);
  std::vector<Report> reports;
  if (suite == "all") {
    reports = verify::run_all(bounds, mode);
  } else {
    const verify::SuiteInfo* info = verify::find_suite(suite);
    if (info == nullptr) raise(Errc::unknown_id, "unknown suite '" + suite + "'");
    reports.push_back(info->fn(bounds, mode));
  }

  fmt::Table table;
  table.header = {"suite", "status", "instances", "bounds", "detail"};
  fmt::Json data = fmt::Json::array();
  bool all_passed = true;
  for (const Report& rep : reports) {
    all_passed = all_passed && rep.passed();
    std::string detail;
    if (!rep.failures.empty()) {
      const Failure& f = rep.failures.front();
      detail = (rep.expected_fail ? "counterexample " : "FIRST MISMATCH ") + f.instance + ": " +
               f.left + " vs " + f.right;
    }
    table.rows.push_back({rep.suite, rep.passed() ? "pass" : "FAIL",
                          std::to_string(rep.instances), rep.bounds, detail});
    data.push_back(fmt::json_report(rep));
  }
  fmt::Json params{{"suite", suite}, {"mode", serial ? "serial" : "parallel"}};
  emit(table, fmt::envelope("verify", params, fmt::Json{{"reports", data}}), g);
  return all_passed ? kExitOk : kExitVerifyFail;
}

// --------------------------------------------------------------- hankel

int cmd_hankel(const GlobalOpts& g, const std::string& family, int m, int r, int n_max,
               const std::string& x_text) {
  std::vector<Scalar> seq;
  for (int i = 0; i <= 2 * n_max; ++i) {
    Poly p(Var::x);
    if (family == "bell")
      p = families::bell(i);
    else if (family == "dowling")
      p = families::dowling(m, i);
    else if (family == "r-dowling")
      p = families::r_dowling(m, r, i);
    else if (family == "r-dowling-scaled")
      p = families::r_dowling(m, r, i) * ratio(1, pow_int(Int(r), i));
    else
      raise(Errc::unknown_id, "unknown hankel family '" + family + "'");
    if (x_text.empty())
      seq.push_back(Scalar(p));
    else
      seq.push_back(Scalar(p.eval(parse_rational(x_text))));
  }
  const auto h = transforms::hankel_transform(seq, n_max);
  fmt::Table table;
  table.header = {"n", "H_n"};
  fmt::Json data = fmt::Json::array();
  for (int n = 0; n <= n_max; ++n) {
    table.rows.push_back({std::to_string(n), h[static_cast<std::size_t>(n)].str()});
    data.push_back(fmt::json_scalar(h[static_cast<std::size_t>(n)]));
  }
  fmt::Json params{{"family", family}, {"m", m}, {"r", r}, {"n_max", n_max},
                   {"x", x_text.empty() ? "formal" : x_text}};
  emit(table, fmt::envelope("hankel", params, fmt::Json{{"transform", data}}), g);
  return kExitOk;
}

// ----------------------------------------------------------- congruence

int cmd_congruence(const GlobalOpts& g, int n, int i, int m, long t, int n_max, int i_max) {
  fmt::Table table;
  table.header = {"n", "i", "m", "t", "value", "quotient"};
  fmt::Json data = fmt::Json::array();
  auto add = [&](int nn, int ii) {
    const auto cert = congruences::cong_certificate(nn, ii, m, Int(t));
    table.rows.push_back({std::to_string(cert.n), std::to_string(cert.i), std::to_string(cert.m),
                          to_string(cert.t), to_string(cert.value), to_string(cert.quotient)});
    data.push_back(fmt::Json{{"n", cert.n},
                             {"i", cert.i},
                             {"m", cert.m},
                             {"t", fmt::json_int(cert.t)},
                             {"value", fmt::json_int(cert.value)},
                             {"quotient", fmt::json_int(cert.quotient)}});
  };
  if (n_max >= 0 || i_max >= 0) {
    const int nm = n_max >= 0 ? n_max : n;
    const int im = i_max >= 0 ? i_max : i;
    for (int nn = 0; nn <= nm; ++nn)
      for (int ii = 0; ii <= im; ++ii) add(nn, ii);
  } else {
    add(n, i);
  }
  fmt::Json params{{"m", m}, {"t", t}};
  emit(table, fmt::envelope("congruence", params, fmt::Json{{"certificates", data}}), g);
  return kExitOk;
}

// ----------------------------------------------------------------- oeis

int cmd_oeis(const GlobalOpts& g, const std::string& terms_text, bool online,
             const std::string& fixtures_dir, const std::string& cache_dir) {
  std::vector<Int> terms;
  std::string cur;
  for (char c : terms_text + ",") {
    if (c == ',') {
      if (!cur.empty()) terms.emplace_back(to_int(parse_rational(cur)));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (terms.size() < 4) raise(Errc::insufficient_entries, "oeis: need at least 4 terms");

  oeis::Options opts;
  opts.offline = !online;
  opts.fixtures_dir = fixtures_dir;
  opts.cache_dir = cache_dir;
  const auto result = oeis::lookup(terms, opts);

  fmt::Table table;
  table.header = {"id", "name"};
  fmt::Json data = fmt::Json::array();
  for (const auto& match : result.matches) {
    table.rows.push_back({match.id, match.name});
    data.push_back(fmt::Json{{"id", match.id}, {"name", match.name}});
  }
  const char* status = result.status == oeis::Status::ok
                           ? "ok"
                           : (result.status == oeis::Status::no_match ? "no-match" : "lookup-failed");
  table.rows.push_back({"status", std::string(status) + " (" + result.source + ")"});
  fmt::Json params{{"terms", oeis::query_string(terms)}, {"online", online}};
  fmt::Json doc = fmt::envelope("oeis", params,
                                fmt::Json{{"status", status}, {"matches", data}});
  doc["provenance"]["source"] = result.source;
  doc["provenance"]["detail"] = result.detail;
  emit(table, doc, g);
  return result.status == oeis::Status::failed ? kExitExternal : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations and identity verification for Whitney/Dowling combinatorics"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format: plain, csv or json")
      ->envname("DOWLING_FORMAT")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  std::string family, m_text = "1", r_text = "1", t_text = "1", x_text;
  int n_max = 8, count = 10;

  auto* table_cmd = app.add_subcommand("table", "emit triangle rows 0..n-max");
  table_cmd->fallthrough();
  table_cmd->add_option("family", family,
                        "stirling1 stirling2 eulerian whitney1 whitney2 r-stirling2 "
                        "r-whitney2 eulerian-dowling R")
      ->required();
  table_cmd->add_option("--m", m_text, "group order (or 'formal' for family R)")->envname("DOWLING_M");
  table_cmd->add_option("--r", r_text, "r parameter")->envname("DOWLING_R");
  table_cmd->add_option("--t", t_text, "t value (or 'formal' for family R)")->envname("DOWLING_T");
  table_cmd->add_option("--n-max,--n", n_max, "largest row")->envname("DOWLING_N_MAX");

  int m_int = 1, r_int = 1;
  auto* poly_cmd = app.add_subcommand("poly", "emit a polynomial family");
  poly_cmd->fallthrough();
  poly_cmd->add_option("family", family,
                       "bell geometric eulerian dowling tanny-dowling euler-dowling "
                       "r-bell r-dowling char")
      ->required();
  poly_cmd->add_option("--m", m_int, "group order")->envname("DOWLING_M");
  poly_cmd->add_option("--r", r_int, "r parameter")->envname("DOWLING_R");
  poly_cmd->add_option("--n-max,--n", n_max, "largest index")->envname("DOWLING_N_MAX");

  auto* seq_cmd = app.add_subcommand("seq", "emit number sequences");
  seq_cmd->fallthrough();
  seq_cmd->add_option("family", family, "bell fubini dowling-number r-dowling-number r-bell-number")
      ->required();
  seq_cmd->add_option("--m", m_int, "group order")->envname("DOWLING_M");
  seq_cmd->add_option("--r", r_int, "r parameter")->envname("DOWLING_R");
  seq_cmd->add_option("--count", count, "how many values");

  verify::Bounds bounds;
  bool serial = false, list_only = false;
  int jobs = 0;
  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->fallthrough();
  verify_cmd->add_option("suite", suite, "suite name or 'all'");
  verify_cmd->add_flag("--list", list_only, "list registered suites");
  verify_cmd->add_option("--n-max", bounds.n_max, "override n bound")->envname("DOWLING_N_MAX");
  verify_cmd->add_option("--m-max", bounds.m_max, "override m bound");
  verify_cmd->add_option("--r-max", bounds.r_max, "override r bound");
  verify_cmd->add_option("--i-max", bounds.i_max, "override i bound");
  verify_cmd->add_option("--k-max", bounds.k_max, "override k bound");
  verify_cmd->add_option("--l-max", bounds.l_max, "override l bound");
  verify_cmd->add_option("--order", bounds.order, "override series truncation order");
  verify_cmd->add_flag("--serial", serial, "run the serial reference sweep");
  verify_cmd->add_option("--jobs", jobs, "worker threads for the parallel sweep")
      ->envname("DOWLING_JOBS");

  auto* hankel_cmd = app.add_subcommand("hankel", "emit Hankel transforms");
  hankel_cmd->fallthrough();
  hankel_cmd->add_option("family", family, "bell dowling r-dowling r-dowling-scaled")->required();
  hankel_cmd->add_option("--m", m_int, "group order")->envname("DOWLING_M");
  hankel_cmd->add_option("--r", r_int, "r parameter")->envname("DOWLING_R");
  hankel_cmd->add_option("--n-max,--n", n_max, "largest transform index")->envname("DOWLING_N_MAX");
  hankel_cmd->add_option("--x", x_text, "specialize x to a rational p/q")->envname("DOWLING_X");

  int cong_n = 0, cong_i = 0, cong_nmax = -1, cong_imax = -1;
  long cong_t = 1;
  auto* cong_cmd = app.add_subcommand("congruence", "emit Gessel divisibility certificates");
  cong_cmd->fallthrough();
  cong_cmd->add_option("--n", cong_n, "congruence order (mod n!)");
  cong_cmd->add_option("--i", cong_i, "shift index");
  cong_cmd->add_option("--m", m_int, "group order")->envname("DOWLING_M");
  cong_cmd->add_option("--t", cong_t, "integer t")->envname("DOWLING_T");
  cong_cmd->add_option("--n-max", cong_nmax, "sweep n = 0..n-max");
  cong_cmd->add_option("--i-max", cong_imax, "sweep i = 0..i-max");

  std::string terms_text, fixtures_dir = DOWLING_OEIS_FIXTURES_DIR,
                          cache_dir = ".dowling-oeis-cache";
  bool online = false, offline_flag = false;
  auto* oeis_cmd = app.add_subcommand("oeis", "match a sequence against OEIS");
  oeis_cmd->fallthrough();
  oeis_cmd->add_option("--terms", terms_text, "comma-separated integer terms (at least 4)")
      ->required();
  oeis_cmd->add_flag("--online", online, "allow live queries (rate limited, cached)");
  oeis_cmd->add_flag("--offline", offline_flag, "fixtures/cache only (default)");
  oeis_cmd->add_option("--fixtures-dir", fixtures_dir, "bundled fixture directory")
      ->envname("DOWLING_OEIS_FIXTURES");
  oeis_cmd->add_option("--cache-dir", cache_dir, "live-response cache directory")
      ->envname("DOWLING_OEIS_CACHE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table_cmd->parsed()) return cmd_table(g, family, m_text, r_text, t_text, n_max);
    if (poly_cmd->parsed()) return cmd_poly(g, family, m_int, r_int, n_max);
    if (seq_cmd->parsed()) return cmd_seq(g, family, m_int, r_int, count);
    if (verify_cmd->parsed()) {
      if (!list_only && suite.empty()) {
        std::cerr << "verify: suite name (or 'all') required\n";
        return kExitUsage;
      }
      return cmd_verify(g, suite, bounds, serial, jobs, list_only);
    }
    if (hankel_cmd->parsed()) return cmd_hankel(g, family, m_int, r_int, n_max, x_text);
    if (cong_cmd->parsed()) return cmd_congruence(g, cong_n, cong_i, m_int, cong_t, cong_nmax, cong_imax);
    if (oeis_cmd->parsed()) {
      if (online && offline_flag) {
        std::cerr << "oeis: --online and --offline are mutually exclusive\n";
        return kExitUsage;
      }
      return cmd_oeis(g, terms_text, online, fixtures_dir, cache_dir);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::network_unavailable) return kExitExternal;
    if (e.code() == Errc::unknown_id || e.code() == Errc::insufficient_entries) return kExitUsage;
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
