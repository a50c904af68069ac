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
#include "dowling/poly.hpp"

#include <algorithm>

#include "dowling/error.hpp"

namespace dowling {

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::upsilon: return "v";
    case Var::m: return "m";
    case Var::t: return "t";
    case Var::u: return "u";
  }
  return "?";
}

namespace {

// Constants combine with anything; two polynomials of positive degree
// must agree on the tag.
Var joint_var(const Poly& a, const Poly& b) {
  if (a.is_constant()) return b.var();
  if (b.is_constant() || a.var() == b.var()) return a.var();
  raise(Errc::tag_mismatch,
        std::string("variable tag mismatch: ") + var_name(a.var()) + " vs " + var_name(b.var()));
}

}  // namespace

Poly::Poly(Var var, std::vector<Rat> coeffs) : var_(var), coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Var var, const Rat& c) {
  Poly p(var);
  if (c != 0) p.coeffs_ = {c};
  return p;
}

Poly Poly::variable(Var var) { return Poly(var, {Rat(0), Rat(1)}); }

Poly Poly::monomial(Var var, const Rat& c, int k) {
  if (k < 0) raise(Errc::negative_input, "monomial: negative degree");
  Poly p(var);
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rat(0));
    p.coeffs_.back() = c;
  }
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Poly Poly::operator-() const {
  Poly r(var_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  var_ = joint_var(*this, o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  var_ = joint_var(*this, o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(joint_var(a, b));
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Rat& c) {
  Poly r(a.var_);
  if (c == 0) return r;
  r.coeffs_.reserve(a.coeffs_.size());
  for (const auto& ai : a.coeffs_) r.coeffs_.push_back(ai * c);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_constant() && b.is_constant()) return a.coeff(0) == b.coeff(0);
  return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
}

Rat Poly::eval(const Rat& v) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Poly Poly::var_scale(const Rat& c) const {
  Poly r(var_);
  r.coeffs_.reserve(coeffs_.size());
  Rat ck(1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    r.coeffs_.push_back(coeffs_[k] * ck);
    ck *= c;
  }
  r.trim();
  return r;
}

Poly Poly::times_xpow(int r) const {
  if (r < 0) raise(Errc::negative_input, "times_xpow: negative shift");
  if (is_zero() || r == 0) return *this;
  Poly out(var_);
  out.coeffs_.assign(static_cast<std::size_t>(r), Rat(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Poly Poly::div_xpow(int r) const {
  if (r < 0) raise(Errc::negative_input, "div_xpow: negative shift");
  if (r == 0) return *this;
  if (is_zero()) return *this;
  for (int k = 0; k < r && k < static_cast<int>(coeffs_.size()); ++k)
    if (coeffs_[static_cast<std::size_t>(k)] != 0)
      raise(Errc::non_zero_remainder,
            "div_xpow: coefficient of " + std::string(var_name(var_)) + "^" + std::to_string(k) +
                " is nonzero");
  Poly out(var_);
  if (static_cast<std::size_t>(r) < coeffs_.size())
    out.coeffs_.assign(coeffs_.begin() + r, coeffs_.end());
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) raise(Errc::negative_input, "pow: negative exponent");
  Poly acc = Poly::constant(var_, Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::retagged(Var var) const {
  Poly r(var);
  r.coeffs_ = coeffs_;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  const std::string name = var_name(var_);
  for (int k = degree(); k >= 0; --k) {
    const Rat c = coeff(k);
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const bool unit = (mag == 1);
    if (k == 0) {
      out += to_string(mag);
    } else {
      if (!unit) {
        if (is_integer(mag))
          out += to_string(mag);
        else
          out += "(" + to_string(mag) + ")";
      }
      out += name;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) raise(Errc::zero_parameter, "exact_div: zero divisor polynomial");
  Var v = b.is_constant() && !a.is_constant() ? a.var() : b.var();
  if (!a.is_constant() && !b.is_constant() && a.var() != b.var())
    raise(Errc::tag_mismatch, "exact_div: variable tag mismatch");
  if (a.is_zero()) return Poly(v);
  std::vector<Rat> rem(a.coeffs());
  const int db = b.degree();
  const int da = static_cast<int>(rem.size()) - 1;
  if (da < db) raise(Errc::exact_division_failed, "exact_div: degree(a) < degree(b)");
  std::vector<Rat> quot(static_cast<std::size_t>(da - db) + 1, Rat(0));
  const Rat lead = b.coeff(db);
  for (int k = da - db; k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q != 0)
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  for (const auto& rc : rem)
    if (rc != 0) raise(Errc::exact_division_failed, "exact_div: nonzero polynomial remainder");
  return Poly(v, std::move(quot));
}

Poly binomial_homogenize(const Poly& p, int n, const Rat& a) {
  if (p.degree() > n)
    raise(Errc::degree_too_large, "binomial_homogenize: degree " + std::to_string(p.degree()) +
                                      " exceeds n = " + std::to_string(n));
  const Var v = p.var();
  Poly acc(v);
  Poly xa = Poly(v, {a, Rat(1)});  // x + a
  Poly xa_pow = Poly::constant(v, Rat(1));
  for (int k = 0; k <= n; ++k) {
    const Rat pk = p.coeff(k);
    if (pk != 0) acc += (xa_pow * pk).times_xpow(n - k);
    if (k < n) xa_pow = xa_pow * xa;
  }
  return acc;
}

}  // namespace dowling
