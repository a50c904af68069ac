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

#include "dowling/suites.hpp"

// One function per registry entry, grouped by source file.
namespace dowling::verify::suites {

// suites_whitney.cpp
Report whitney2_explicit(const Bounds&, ExecMode);
Report whitney1_charpoly(const Bounds&, ExecMode);
Report whitney1_sign(const Bounds&, ExecMode);
Report orthogonality(const Bounds&, ExecMode);
Report rec1(const Bounds&, ExecMode);
Report w1_stirling(const Bounds&, ExecMode);

// suites_dowling.cpp
Report recc1(const Bounds&, ExecMode);
Report sim0(const Bounds&, ExecMode);
Report resulta1(const Bounds&, ExecMode);
Report resulta2(const Bounds&, ExecMode);
Report c01(const Bounds&, ExecMode);
Report c02(const Bounds&, ExecMode);
Report f01(const Bounds&, ExecMode);
Report f02(const Bounds&, ExecMode);
Report bell_2k(const Bounds&, ExecMode);
Report f1(const Bounds&, ExecMode);
Report f2(const Bounds&, ExecMode);
Report f3(const Bounds&, ExecMode);
Report f4(const Bounds&, ExecMode);
Report f5(const Bounds&, ExecMode);
Report geo_simons(const Bounds&, ExecMode);
Report geo_2k(const Bounds&, ExecMode);
Report d1_bell(const Bounds&, ExecMode);
Report f1_geometric(const Bounds&, ExecMode);
Report expected_fail_f6(const Bounds&, ExecMode);
Report expected_fail_f7(const Bounds&, ExecMode);

// suites_eulerian.cpp
Report frobenius(const Bounds&, ExecMode);
Report sm1(const Bounds&, ExecMode);
Report relation(const Bounds&, ExecMode);
Report eul_coeff(const Bounds&, ExecMode);
Report eul2(const Bounds&, ExecMode);
Report eul3(const Bounds&, ExecMode);
Report fubini_2k(const Bounds&, ExecMode);

// suites_egf.cpp
Report egf_firstkind2(const Bounds&, ExecMode);
Report egf_bell(const Bounds&, ExecMode);
Report egf_whitney1(const Bounds&, ExecMode);
Report egf_whitney2(const Bounds&, ExecMode);
Report egf_eulerian_dowling(const Bounds&, ExecMode);
Report egf_rel1(const Bounds&, ExecMode);
Report egf_rel2(const Bounds&, ExecMode);

// suites_congruence.cpp
Report rel3_vs_exp1(const Bounds&, ExecMode);
Report table1(const Bounds&, ExecMode);
Report cong4(const Bounds&, ExecMode);
Report cong5(const Bounds&, ExecMode);
Report cong_printed(const Bounds&, ExecMode);

// suites_hankel.cpp
Report hankel_bell(const Bounds&, ExecMode);
Report hankel_dowling(const Bounds&, ExecMode);
Report hankel_suter(const Bounds&, ExecMode);
Report hankel_r_dowling(const Bounds&, ExecMode);
Report hankel_binom_invariance(const Bounds&, ExecMode);

// suites_r.cpp
Report rbellbell(const Bounds&, ExecMode);
Report rdowbel(const Bounds&, ExecMode);
Report beldow(const Bounds&, ExecMode);
Report r_bell_binomial(const Bounds&, ExecMode);
Report man(const Bounds&, ExecMode);
Report mout(const Bounds&, ExecMode);
Report stirling_shift(const Bounds&, ExecMode);
Report ms_formula(const Bounds&, ExecMode);
Report ms_divides(const Bounds&, ExecMode);
Report ms_l_corrected(const Bounds&, ExecMode);
Report r_simons_1(const Bounds&, ExecMode);
Report r_simons_2(const Bounds&, ExecMode);
Report expected_fail_ms_l(const Bounds&, ExecMode);

}  // namespace dowling::verify::suites
