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

#include <stdexcept>
#include <string>

namespace dowling {

enum class Errc {
  negative_input,
  non_zero_remainder,
  degree_too_large,
  insufficient_entries,
  tag_mismatch,
  nonzero_constant_term,
  constant_term_not_one,
  order_exceeded,
  unknown_id,
  two_formal_variables,
  index_below_r,
  zero_parameter,
  divisibility_failure,
  index_out_of_range,
  network_unavailable,
  exact_division_failed,
};

/// All library failures are reported through this type; the code
/// distinguishes contract violations from environment problems.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dowling
