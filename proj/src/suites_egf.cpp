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
#include "dowling/series.hpp"
#include "suites_decl.hpp"
#include "suites_util.hpp"

namespace dowling::verify::suites {

using namespace detail;

namespace {

// Adapts one egf_check invocation into a sweep cell.
Cell egf_cell(std::string instance, std::string id, EgfParams p, int order) {
  return {std::move(instance), [id = std::move(id), p, order]() -> Mismatch {
            const Report r = egf_check(id, p, order);
            if (r.failures.empty()) return std::nullopt;
            const Failure& f = r.failures.front();
            return std::make_pair(f.instance + ": " + f.left, f.right);
          }};
}

}  // namespace

Report egf_firstkind2(const Bounds& b, ExecMode mode) {
  const int k_max = pick(b.k_max, 5), order = pick(b.order, 10);
  std::vector<Cell> cells;
  for (int k = 0; k <= k_max; ++k) {
    EgfParams p;
    p.k = k;
    cells.push_back(egf_cell(label("k=", k), "firstkind2", p, order));
  }
  return run_cells("egf-firstkind2", label("k<=", k_max, " N=", order), cells, mode);
}

Report egf_bell(const Bounds& b, ExecMode mode) {
  const int order = pick(b.order, 10);
  std::vector<Cell> cells;
  cells.push_back(egf_cell("x formal", "bell", EgfParams{}, order));
  return run_cells("egf-bell", label("N=", order), cells, mode);
}

Report egf_whitney1(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), k_max = pick(b.k_max, 5), order = pick(b.order, 10);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int k = 0; k <= k_max; ++k) {
      EgfParams p;
      p.m = m;
      p.k = k;
      cells.push_back(egf_cell(label("m=", m, " k=", k), "whitney1", p, order));
    }
  return run_cells("egf-whitney1", label("m<=", m_max, " k<=", k_max, " N=", order), cells, mode);
}

Report egf_whitney2(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 4), k_max = pick(b.k_max, 5), order = pick(b.order, 10);
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int k = 0; k <= k_max; ++k) {
      EgfParams p;
      p.m = m;
      p.k = k;
      cells.push_back(egf_cell(label("m=", m, " k=", k), "whitney2", p, order));
    }
  return run_cells("egf-whitney2", label("m<=", m_max, " k<=", k_max, " N=", order), cells, mode);
}

Report egf_eulerian_dowling(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 3), order = pick(b.order, 8);
  const Rat points[] = {Rat(2), Rat(3), ratio(1, 2)};
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (const Rat& x0 : points) {
      EgfParams p;
      p.m = m;
      p.x = x0;
      cells.push_back(egf_cell(label("m=", m, " x=", to_string(x0)), "eulerian-dowling", p, order));
    }
  return run_cells("egf-eulerian-dowling", label("m<=", m_max, " x in {2,3,1/2} N=", order), cells,
                   mode);
}

Report egf_rel1(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 3), k_max = pick(b.k_max, 3), order = pick(b.order, 10);
  const Rat ts[] = {Rat(1), Rat(2), Rat(-1)};
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (int k = 0; k <= k_max; ++k)
      for (const Rat& t : ts) {
        EgfParams p;
        p.m = m;
        p.k = k;
        p.t = t;
        cells.push_back(egf_cell(label("m=", m, " k=", k, " t=", to_string(t)), "rel1", p, order));
      }
  return run_cells("egf-rel1", label("m<=", m_max, " k<=", k_max, " t in {1,2,-1} N=", order),
                   cells, mode);
}

// Bivariate certification by specialization: five u-points and three
// t-points exceed the degree of R_{n,k} in each parameter for n <= 8.
Report egf_rel2(const Bounds& b, ExecMode mode) {
  const int m_max = pick(b.m_max, 3), order = pick(b.order, 8);
  const Rat us[] = {Rat(1), Rat(2), Rat(3), ratio(1, 2), Rat(-1)};
  const Rat ts[] = {Rat(1), Rat(2), Rat(-1)};
  std::vector<Cell> cells;
  for (int m = 1; m <= m_max; ++m)
    for (const Rat& u : us)
      for (const Rat& t : ts) {
        EgfParams p;
        p.m = m;
        p.u = u;
        p.t = t;
        cells.push_back(
            egf_cell(label("m=", m, " u=", to_string(u), " t=", to_string(t)), "rel2", p, order));
      }
  return run_cells("egf-rel2", label("m<=", m_max, " 5 u-points x 3 t-points N=", order), cells,
                   mode);
}

}  // namespace dowling::verify::suites
