#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "osa/basis.hpp"
#include "osa/chains.hpp"
#include "osa/checks.hpp"

using namespace osa;
using osa::test::E;
using osa::test::G;

TEST_CASE("in_B0 examples") {
  Params p(2, 2);
  CHECK(in_B0(G("s[1|2]", p)));
  CHECK_FALSE(in_B0(G("l(1,1)[1|2]", p)));
  CHECK_FALSE(in_B0(G("f(1,2;1,1)[|]", p)));
  CHECK(in_B0(G("f(1,2;2,1)[|]", p)));
  CHECK(in_B0(G("r(2,1)[|]", p)));
  CHECK(in_B0(G("s[|]", p)));
}

TEST_CASE("in_B4 examples") {
  Params p(2, 2);
  CHECK(in_B4(G("s[|]", p)));
  CHECK(in_B4(G("s[1|]", p)));
  CHECK_FALSE(in_B4(G("l(1,1)[2,1|2,1]", p)));
  CHECK(in_B4(G("r(1,2)[1|]", p)));
  CHECK_FALSE(in_B4(G("r(1,1)[1|]", p)));
  CHECK(in_B4(G("r(1,1)[2|]", p)));
  CHECK_FALSE(in_B4(G("s[1,2|1]", p)));
  CHECK_FALSE(in_B4(G("s[2,1|1]", p)));
  CHECK(in_B4(G("s[2,1|2]", p)));
  CHECK(in_B4(G("f(1,1;1,1)[1|1]", p)));
}

TEST_CASE("to_B0 examples") {
  Params p(2, 1);
  CHECK(to_B0(E("l(1,1)[1|2]", p), p) == E("s[1|2] - s[1,1|1,2] - s[2,1|2,2]", p));
  Element b0 = E("s[2|1] + 3*l(1,2)[1|] - f(2,1;1,2)[1,1|2]", Params(2, 2));
  CHECK(to_B0(b0, Params(2, 2)) == b0);
  Params q(1, 1);
  Element f = E("f(1,1;1,1)[|]", q);
  CHECK(to_B0(f, q) == E("s[|] - 2*s[1|1] + s[1,1|1,1]", q));
  CHECK(equal_on_chains(f, to_B0(f, q), 6, q));
  CHECK(canonical(f, BasisTag::B0, q).basis == BasisTag::B0);
}

TEST_CASE("to_B4 examples") {
  Params p(2, 1);
  Element l = E("l(1,1)[2,1|2,1]", p);
  CHECK(to_B4(l, p) == E("l(1,1)[2|2] - l(1,1)[2,2|2,2] - f(1,1;1,1)[2|2]", p));
  Element b4 = E("s[|1] + f(1,1;1,1)[1|1]", p);
  CHECK(to_B4(b4, p) == b4);
  Params q(3, 1);
  Element s = E("s[1,2|1,3]", q);
  Element frozen = E("s[2|3] - s[2,2|2,3] - s[3,2|3,3] - l(1,1)[2|3]", q);
  CHECK(to_B4(s, q) == frozen);
  CHECK(equal_on_chains(s, frozen, 5, q));
}

TEST_CASE("independence_check_B0 examples") {
  CHECK(independence_check_B0(1, 3, Params(1, 1)));
  CHECK(independence_check_B0(0, 2, Params(1, 1)));
  CHECK(independence_check_B0(2, 4, Params(2, 1)));
}

TEST_CASE("rewriting is sound, idempotent and consistent across bases") {
  for (auto [l, lf] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    Params p(l, lf);
    std::mt19937_64 rng(41 + l * 3 + lf);
    for (int i = 0; i < 40; ++i) {
      Element e = random_element(rng, p, 2, 3);
      Element b0 = to_B0(e, p), b4 = to_B4(e, p);
      CHECK(equal_on_chains(e, b0, 6, p));
      CHECK(equal_on_chains(e, b4, 6, p));
      for (const auto& [g, c] : b0) CHECK(in_B0(g));
      for (const auto& [g, c] : b4) CHECK(in_B4(g));
      CHECK(to_B0(b0, p) == b0);
      CHECK(to_B4(b4, p) == b4);
      CHECK(to_B0(b4, p) == b0);
    }
  }
}

TEST_CASE("canonical equality coincides with action equality") {
  Params p(2, 2);
  std::mt19937_64 rng(43);
  // Equal pairs: the sigma peeling identities and random rewrites.
  for (const Seq& I : sequences_up_to(2, 2))
    for (const Seq& J : sequences_up_to(2, 1)) {
      Element lhs(Generator::s(I, J)), rhs;
      for (int i = 1; i <= 2; ++i) rhs.add(Generator::s(concat({i}, I), concat({i}, J)), 1);
      for (int k = 1; k <= 2; ++k) rhs.add(Generator::l(k, k, I, J), 1);
      CHECK(equal_on_chains(lhs, rhs, 6, p));
      CHECK(to_B0(lhs, p) == to_B0(rhs, p));
    }
  for (int i = 0; i < 60; ++i) {
    Element a = random_element(rng, p, 2, 2), b = random_element(rng, p, 2, 2);
    CHECK((to_B0(a, p) == to_B0(b, p)) == equal_on_chains(a, b, 6, p));
    Element c = a + to_B4(b, p) - b;
    CHECK(to_B0(a, p) == to_B0(c, p));
    CHECK(equal_on_chains(a, c, 6, p));
  }
}

TEST_CASE("to_B4 depth is bounded by size plus two") {
  for (auto [l, lf] : {std::pair{1, 1}, {2, 2}}) {
    Params p(l, lf);
    int deep = 0;
    for (const Generator& g : all_generators(p, 4)) {
      const int d = to_B4_depth(g, p);
      CHECK(d <= g.size() + 2);
      CHECK((d == 0) == in_B4(g));
      deep = std::max(deep, d);
    }
    CHECK(deep >= 2);
  }
}
