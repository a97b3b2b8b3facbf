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

// Exact rational scalar for the whole engine.
//
// Every geometric and lattice computation in this project runs over Q with
// arbitrary-precision rationals (GMP's mpq_class), always kept in lowest
// terms with a positive denominator.  Eigen supplies the dense vector/matrix
// types; the NumTraits specialization below makes mpq_class a first-class
// Eigen scalar with epsilon() == 0, so rank/solve decisions are exact.

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace convlat {

using Rational = mpq_class;

using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RowVecQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

/// Build a rational from an integer pair, canonicalized to lowest terms.
/// Throws std::invalid_argument on a zero denominator.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parse "num", "-num", or "num/den" (optionally signed) into a canonical
/// rational.  Rejects zero denominators and malformed text.
Rational parse_rational(const std::string& text);

/// Render a rational as "num" or "num/den" (lowest terms, positive den).
std::string format_rational(const Rational& value);

/// Convenience: format a coordinate vector as "(a, b, ...)".
std::string format_point(const VecQ& point);

}  // namespace convlat
