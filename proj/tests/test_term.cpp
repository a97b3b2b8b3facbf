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

#include <string>
#include <vector>

#include "convlat/rng.hpp"
#include "convlat/term.hpp"
#include "doctest.h"

namespace convlat {
namespace {

/// Random term over a small variable pool, for round-trip loops.
TermPtr random_term(Rng& rng, int depth) {
  if (depth == 0 || rng.below(3) == 0) {
    static const char* vars[] = {"x", "y1", "y2", "z", "w"};
    return make_var(vars[rng.below(5)]);
  }
  TermPtr l = random_term(rng, depth - 1);
  TermPtr r = random_term(rng, depth - 1);
  return rng.coin() ? make_meet(l, r) : make_join(l, r);
}

TEST_SUITE("term") {

TEST_CASE("parser handles precedence, associativity, and parentheses") {
  // & binds tighter than |.
  CHECK(term_equal(parse_term("a & b | c"), parse_term("(a & b) | c")));
  CHECK(term_equal(parse_term("a | b & c"), parse_term("a | (b & c)")));
  // Both operators are left-associative.
  CHECK(term_equal(parse_term("a | b | c"), parse_term("(a | b) | c")));
  CHECK(term_equal(parse_term("a & b & c"), parse_term("(a & b) & c")));
  CHECK(!term_equal(parse_term("a | b | c"), parse_term("a | (b | c)")));
  // Parentheses override.
  CHECK(!term_equal(parse_term("a & (b | c)"), parse_term("a & b | c")));
  // Whitespace is free.
  CHECK(term_equal(parse_term("  a&b |c "), parse_term("a & b | c")));
}

TEST_CASE("print_term emits minimal parentheses") {
  CHECK(print_term(parse_term("x")) == "x");
  CHECK(print_term(parse_term("x & y1 | y2")) == "x & y1 | y2");
  CHECK(print_term(parse_term("x & (y1 | y2)")) == "x & (y1 | y2)");
  CHECK(print_term(parse_term("(x | y1) & (y2 | z)")) ==
        "(x | y1) & (y2 | z)");
}

TEST_CASE("parse errors carry byte positions") {
  auto pos_of = [](const std::string& text) -> std::size_t {
    try {
      parse_term(text);
    } catch (const ParseError& e) {
      return e.position;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(pos_of("x & (y1 | = z") == 10);
  CHECK(pos_of("&x") == 0);
  CHECK(pos_of("") == 0);
  CHECK_THROWS_AS(parse_term("x &"), ParseError);
  CHECK_THROWS_AS(parse_term("x y"), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
}

TEST_CASE("parse_identity reads both modes and rejects chains") {
  Identity eq = parse_identity("x = y1 | y2");
  CHECK(eq.mode == IdentityMode::Equation);
  Identity le = parse_identity("x <= y1 | y2");
  CHECK(le.mode == IdentityMode::Inequation);
  CHECK_THROWS_AS(parse_identity("x"), ParseError);
  CHECK_THROWS_AS(parse_identity("x = y = z"), ParseError);
  CHECK_THROWS_AS(parse_identity("x < y"), ParseError);
}

TEST_CASE("free variables come in first-occurrence order across sides") {
  Identity id = parse_identity("y2 & x = y1 | x | z");
  const std::vector<std::string> expect{"y2", "x", "y1", "z"};
  CHECK(id.free_vars == expect);
  CHECK(free_vars_of(parse_term("b | a | b & c")) ==
        std::vector<std::string>{"b", "a", "c"});
}

TEST_CASE("n-distribution builders print the expected shapes") {
  CHECK(print_identity(build_Dn(1)) == "x & (y1 | y2) = x & y2 | x & y1");
  CHECK(print_identity(build_Dn(2)) ==
        "x & (y1 | y2 | y3) = x & (y2 | y3) | x & (y1 | y3) | x & (y1 | y2)");
  const std::vector<std::string> d2_vars{"x", "y1", "y2", "y3"};
  CHECK(build_Dn(2).free_vars == d2_vars);
  CHECK(build_Dn(1).mode == IdentityMode::Equation);
}

TEST_CASE("the dual builder is dualize of the primal") {
  for (int n = 1; n <= 3; ++n) {
    Identity dual = dualize(build_Dn(n));
    Identity direct = build_Dn_op(n);
    CHECK(term_equal(dual.lhs, direct.lhs));
    CHECK(term_equal(dual.rhs, direct.rhs));
  }
}

TEST_CASE("dualize swaps operations, flips inequations, and involutes") {
  Identity le = parse_identity("x & y1 <= z");
  Identity dual = dualize(le);
  CHECK(print_identity(dual) == "z <= x | y1");
  CHECK(dual.mode == IdentityMode::Inequation);
  Identity twice = dualize(dual);
  CHECK(term_equal(twice.lhs, le.lhs));
  CHECK(term_equal(twice.rhs, le.rhs));
  CHECK(twice.mode == le.mode);
}

TEST_CASE("the N-generator variant degenerates to the next builder") {
  for (int n = 1; n <= 2; ++n) {
    Identity wide = build_Dn_N_ary(n, n + 2);
    Identity next = build_Dn(n + 1);
    CHECK(term_equal(wide.lhs, next.lhs));
    CHECK(term_equal(wide.rhs, next.rhs));
  }
}

TEST_CASE("the crossing inequality builder") {
  Identity r1 = build_radon_identity(1);
  CHECK(r1.mode == IdentityMode::Inequation);
  const std::vector<std::string> vars{"x", "y1", "y2", "y3"};
  CHECK(r1.free_vars == vars);
  CHECK(print_identity(r1) ==
        "(x | y1) & (x | y2) & (x | y3) <= "
        "x | ((y1 | y3) & y2 | (y1 | y2) & y3 | y1 & (y2 | y3))");
  // n = 2 quantifies over 2^3 - 1 = 7 splits of four generators.
  Identity r2 = build_radon_identity(2);
  CHECK(r2.free_vars.size() == 5);
}

TEST_CASE("wrap substitutes an identity into a one-hole context") {
  Identity inner = parse_identity("x & y1 = x | y1");
  TermPtr context = make_meet(make_join(make_var(kHoleName), make_var("z")),
                              make_var("w"));
  Identity wrapped = wrap(inner, context);
  CHECK(print_identity(wrapped) ==
        "(x & y1 | z) & w = (x | y1 | z) & w");
  const std::vector<std::string> vars{"x", "y1", "z", "w"};
  CHECK(wrapped.free_vars == vars);
  // The hole must occur exactly once.
  CHECK_THROWS_AS(wrap(inner, make_var("z")), std::invalid_argument);
  CHECK_THROWS_AS(
      wrap(inner, make_meet(make_var(kHoleName), make_var(kHoleName))),
      std::invalid_argument);
}

TEST_CASE("wrapped distribution builders print the frozen shapes") {
  CHECK(print_identity(build_wrapped_Dn(1)) ==
        "(x & (y1 | y2) | z) & y1 & y2 = (x & y2 | x & y1 | z) & y1 & y2");
  CHECK(print_identity(build_wrapped_Dn_pairs(1)) ==
        "(x & (y1 | y2) | z) & (y1 & y2) = "
        "(x & y2 | x & y1 | z) & (y1 & y2)");
  CHECK(print_identity(build_wrapped_Dn_covers(1)) ==
        "(x & (y1 | y2) | z) & (y2 & y1) = "
        "(x & y2 | x & y1 | z) & (y2 & y1)");
  CHECK(print_identity(build_wrapped_Dn_op(1)) ==
        "((x | y1 & y2) & zp | z) & (y1 & y2) = "
        "((x | y2) & (x | y1) & zp | z) & (y1 & y2)");
  // The wrappers add z (and zp) to the variable list.
  const std::vector<std::string> wd{"x", "y1", "y2", "z"};
  CHECK(build_wrapped_Dn(1).free_vars == wd);
  const std::vector<std::string> wdop{"x", "y1", "y2", "zp", "z"};
  CHECK(build_wrapped_Dn_op(1).free_vars == wdop);
}

TEST_CASE("seeded round-trip loop: parse(print(t)) == t") {
  Rng rng(1234);
  for (int i = 0; i < 100; ++i) {
    TermPtr t = random_term(rng, 4);
    CHECK(term_equal(parse_term(print_term(t)), t));
  }
  // Identity round trips, both modes.
  for (int i = 0; i < 50; ++i) {
    Identity id = make_identity(random_term(rng, 3), random_term(rng, 3),
                                rng.coin() ? IdentityMode::Equation
                                           : IdentityMode::Inequation);
    Identity back = parse_identity(print_identity(id));
    CHECK(term_equal(back.lhs, id.lhs));
    CHECK(term_equal(back.rhs, id.rhs));
    CHECK(back.mode == id.mode);
    CHECK(back.free_vars == id.free_vars);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace convlat
