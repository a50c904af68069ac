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

#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "dowling/numeric.hpp"
#include "dowling/poly.hpp"
#include "dowling/scalar.hpp"
#include "dowling/suites.hpp"

namespace dowling::verify::detail {

inline int pick(int override_value, int fallback) {
  return override_value >= 0 ? override_value : fallback;
}

inline std::string render(const Int& v) { return to_string(v); }
inline std::string render(const Rat& v) { return to_string(v); }
inline std::string render(const Poly& v) { return v.str(); }
inline std::string render(const Scalar& v) { return v.str(); }

using Mismatch = std::optional<std::pair<std::string, std::string>>;

template <typename L, typename R>
Mismatch expect_eq(const L& lhs, const R& rhs) {
  if (lhs == rhs) return std::nullopt;
  return std::make_pair(render(lhs), render(rhs));
}

template <typename... Parts>
std::string label(Parts&&... parts) {
  std::ostringstream os;
  ((os << parts), ...);
  return os.str();
}

}  // namespace dowling::verify::detail
