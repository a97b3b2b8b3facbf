// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "convlat/rational.hpp"

#include <cctype>
#include <sstream>

namespace convlat {

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw std::invalid_argument("malformed rational: \"" + text + "\"");
  }
  // GMP's string constructor rejects an explicit leading '+'.
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) {
    throw std::invalid_argument("rational with zero denominator: \"" + text +
                                "\"");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << value.get_num();
  if (value.get_den() != 1) out << "/" << value.get_den();
  return out.str();
}

std::string format_point(const VecQ& point) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < point.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_rational(point(i));
  }
  out += ")";
  return out;
}

}  // namespace convlat
