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

#include "convlat/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace convlat {
namespace {

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  if (t->kind == Term::Kind::Var) {
    if (std::find(out.begin(), out.end(), t->var) == out.end()) {
      out.push_back(t->var);
    }
    return;
  }
  collect_vars(t->left, out);
  collect_vars(t->right, out);
}

// Recursive-descent parser over the grammar
//   identity := term ("=" | "<=") term
//   term     := factor { "|" factor }
//   factor   := atom { "&" atom }
//   atom     := IDENT | "(" term ")"
struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : text(text) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos), pos);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  TermPtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      TermPtr inner = parse_term_rule();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      fail(std::string("unexpected character '") + c + "'");
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    return make_var(text.substr(start, pos - start));
  }

  TermPtr parse_factor() {
    TermPtr t = parse_atom();
    while (eat('&')) t = make_meet(t, parse_atom());
    return t;
  }

  TermPtr parse_term_rule() {
    TermPtr t = parse_factor();
    while (eat('|')) t = make_join(t, parse_factor());
    return t;
  }
};

void print_rec(const TermPtr& t, int level, std::ostringstream& out) {
  // level 0 admits joins, level 1 admits meets, level 2 only atoms.
  switch (t->kind) {
    case Term::Kind::Var:
      out << t->var;
      return;
    case Term::Kind::Join:
      if (level > 0) {
        out << "(";
        print_rec(t, 0, out);
        out << ")";
        return;
      }
      print_rec(t->left, 0, out);
      out << " | ";
      print_rec(t->right, 1, out);
      return;
    case Term::Kind::Meet:
      if (level > 1) {
        out << "(";
        print_rec(t, 1, out);
        out << ")";
        return;
      }
      print_rec(t->left, 1, out);
      out << " & ";
      print_rec(t->right, 2, out);
      return;
  }
}

TermPtr join_all(const std::vector<TermPtr>& ts) {
  TermPtr t = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) t = make_join(t, ts[i]);
  return t;
}

TermPtr meet_all(const std::vector<TermPtr>& ts) {
  TermPtr t = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) t = make_meet(t, ts[i]);
  return t;
}

TermPtr y_var(int i) { return make_var("y" + std::to_string(i)); }

int count_holes(const TermPtr& t) {
  if (t->kind == Term::Kind::Var) return t->var == kHoleName ? 1 : 0;
  return count_holes(t->left) + count_holes(t->right);
}

TermPtr substitute(const TermPtr& t, const std::string& name,
                   const TermPtr& repl) {
  if (t->kind == Term::Kind::Var) return t->var == name ? repl : t;
  TermPtr l = substitute(t->left, name, repl);
  TermPtr r = substitute(t->right, name, repl);
  if (l == t->left && r == t->right) return t;
  return t->kind == Term::Kind::Meet ? make_meet(l, r) : make_join(l, r);
}

}  // namespace

TermPtr make_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->var = std::move(name);
  return t;
}

TermPtr make_meet(TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Meet;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

TermPtr make_join(TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Join;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == Term::Kind::Var) return a->var == b->var;
  return term_equal(a->left, b->left) && term_equal(a->right, b->right);
}

std::vector<std::string> free_vars_of(const TermPtr& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

Identity make_identity(TermPtr lhs, TermPtr rhs, IdentityMode mode) {
  Identity id;
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  id.mode = mode;
  collect_vars(id.lhs, id.free_vars);
  collect_vars(id.rhs, id.free_vars);
  return id;
}

TermPtr parse_term(const std::string& text) {
  Parser p(text);
  TermPtr t = p.parse_term_rule();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return t;
}

Identity parse_identity(const std::string& text) {
  Parser p(text);
  TermPtr lhs = p.parse_term_rule();
  IdentityMode mode;
  p.skip_ws();
  if (p.eat('=')) {
    mode = IdentityMode::Equation;
  } else if (p.eat('<')) {
    if (!p.eat('=')) p.fail("expected '<='");
    mode = IdentityMode::Inequation;
  } else {
    p.fail("expected '=' or '<='");
  }
  TermPtr rhs = p.parse_term_rule();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return make_identity(std::move(lhs), std::move(rhs), mode);
}

std::string print_term(const TermPtr& t) {
  std::ostringstream out;
  print_rec(t, 0, out);
  return out.str();
}

std::string print_identity(const Identity& id) {
  return print_term(id.lhs) +
         (id.mode == IdentityMode::Equation ? " = " : " <= ") +
         print_term(id.rhs);
}

Identity build_Dn(int n) {
  if (n < 1) throw std::invalid_argument("build_Dn: n must be >= 1");
  TermPtr x = make_var("x");
  std::vector<TermPtr> ys;
  for (int i = 1; i <= n + 1; ++i) ys.push_back(y_var(i));
  TermPtr lhs = make_meet(x, join_all(ys));
  std::vector<TermPtr> joinands;
  for (int i = 0; i <= n; ++i) {
    std::vector<TermPtr> rest;
    for (int j = 0; j <= n; ++j) {
      if (j != i) rest.push_back(ys[j]);
    }
    joinands.push_back(make_meet(x, join_all(rest)));
  }
  return make_identity(lhs, join_all(joinands), IdentityMode::Equation);
}

Identity build_Dn_op(int n) { return dualize(build_Dn(n)); }

Identity build_Dn_N_ary(int n, int N) {
  if (n < 1) throw std::invalid_argument("build_Dn_N_ary: n must be >= 1");
  if (N < n + 2) {
    throw std::invalid_argument("build_Dn_N_ary: need N >= n+2");
  }
  TermPtr x = make_var("x");
  std::vector<TermPtr> ys;
  for (int i = 1; i <= N; ++i) ys.push_back(y_var(i));
  TermPtr lhs = make_meet(x, join_all(ys));

  // All (n+1)-subsets, in descending lexicographic order so the
  // N = n+2 case reproduces build_Dn(n+1)'s leave-one-out order.
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(n + 1);
  for (int i = 0; i <= n; ++i) pick[i] = i;
  while (true) {
    subsets.push_back(pick);
    int pos = n;
    while (pos >= 0 && pick[pos] == N - 1 - (n - pos)) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i <= n; ++i) pick[i] = pick[i - 1] + 1;
  }
  std::reverse(subsets.begin(), subsets.end());

  std::vector<TermPtr> joinands;
  for (const auto& s : subsets) {
    std::vector<TermPtr> part;
    for (int j : s) part.push_back(ys[j]);
    joinands.push_back(make_meet(x, join_all(part)));
  }
  return make_identity(lhs, join_all(joinands), IdentityMode::Equation);
}

Identity build_radon_identity(int n) {
  if (n < 0) throw std::invalid_argument("build_radon_identity: n >= 0");
  const int k = n + 2;
  TermPtr x = make_var("x");
  std::vector<TermPtr> ys;
  for (int i = 1; i <= k; ++i) ys.push_back(y_var(i));
  std::vector<TermPtr> meetands;
  for (int i = 0; i < k; ++i) meetands.push_back(make_join(x, ys[i]));
  TermPtr lhs = meet_all(meetands);

  // Splits of {1..k}: the mask's bit b decides whether y_{b+2} goes to
  // the second part; y_1 stays in the first, so each unordered pair
  // occurs once.
  std::vector<TermPtr> joinands;
  for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
    std::vector<TermPtr> part1 = {ys[0]}, part2;
    for (int b = 0; b < k - 1; ++b) {
      ((mask >> b) & 1u ? part2 : part1).push_back(ys[b + 1]);
    }
    joinands.push_back(make_meet(join_all(part1), join_all(part2)));
  }
  TermPtr rhs = make_join(x, join_all(joinands));
  return make_identity(lhs, rhs, IdentityMode::Inequation);
}

Identity build_wrapped_Dn(int n) {
  TermPtr context = make_meet(
      make_meet(make_join(make_var(kHoleName), make_var("z")), y_var(1)),
      y_var(2));
  return wrap(build_Dn(n), context);
}

Identity build_wrapped_Dn_pairs(int n) {
  std::vector<TermPtr> pairs;
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      pairs.push_back(make_meet(y_var(i), y_var(j)));
    }
  }
  TermPtr context = make_meet(make_join(make_var(kHoleName), make_var("z")),
                              join_all(pairs));
  return wrap(build_Dn(n), context);
}

Identity build_wrapped_Dn_covers(int n) {
  std::vector<TermPtr> covers;
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<TermPtr> rest;
    for (int j = 1; j <= n + 1; ++j) {
      if (j != i) rest.push_back(y_var(j));
    }
    covers.push_back(join_all(rest));
  }
  TermPtr context = make_meet(make_join(make_var(kHoleName), make_var("z")),
                              meet_all(covers));
  return wrap(build_Dn(n), context);
}

Identity build_wrapped_Dn_op(int n) {
  std::vector<TermPtr> ys;
  for (int i = 1; i <= n + 1; ++i) ys.push_back(y_var(i));
  TermPtr context = make_meet(
      make_join(make_meet(make_var(kHoleName), make_var("zp")),
                make_var("z")),
      meet_all(ys));
  return wrap(build_Dn_op(n), context);
}

Identity wrap(const Identity& inner, const TermPtr& context) {
  int holes = count_holes(context);
  if (holes != 1) {
    throw std::invalid_argument(
        "wrap: context must contain HOLE exactly once (found " +
        std::to_string(holes) + ")");
  }
  TermPtr lhs = substitute(context, kHoleName, inner.lhs);
  TermPtr rhs = substitute(context, kHoleName, inner.rhs);
  Identity out = make_identity(std::move(lhs), std::move(rhs), inner.mode);
  // Keep the inner identity's variables first, then fresh context ones.
  std::vector<std::string> ordered = inner.free_vars;
  for (const std::string& v : out.free_vars) {
    if (std::find(ordered.begin(), ordered.end(), v) == ordered.end()) {
      ordered.push_back(v);
    }
  }
  out.free_vars = std::move(ordered);
  return out;
}

TermPtr dualize_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t;
    case Term::Kind::Meet:
      return make_join(dualize_term(t->left), dualize_term(t->right));
    case Term::Kind::Join:
      return make_meet(dualize_term(t->left), dualize_term(t->right));
  }
  return t;  // unreachable
}

Identity dualize(const Identity& id) {
  if (id.mode == IdentityMode::Equation) {
    return make_identity(dualize_term(id.lhs), dualize_term(id.rhs),
                         IdentityMode::Equation);
  }
  // lhs <= rhs dualizes to dual(rhs) <= dual(lhs).
  return make_identity(dualize_term(id.rhs), dualize_term(id.lhs),
                       IdentityMode::Inequation);
}

}  // namespace convlat
