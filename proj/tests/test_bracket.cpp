#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "osa/basis.hpp"
#include "osa/bracket.hpp"
#include "osa/chains.hpp"
#include "osa/checks.hpp"

using namespace osa;
using osa::test::E;
using osa::test::G;

TEST_CASE("bracket examples") {
  Params p(2, 1);
  CHECK(bracket(E("f(1,1;1,1)[1|2]", p), E("f(1,1;1,1)[2|1]", p), p) == E("f(1,1;1,1)[1|1] - f(1,1;1,1)[2|2]", p));
  Element a = E("2*s[1|2] - l(1,1)[|1] + f(1,1;1,1)[2|]", p);
  CHECK(bracket(a, a, p).empty());

  Params q(1, 1);
  Element lhs = bracket(E("s[|]", q), E("s[1|]", q), q);
  CHECK(to_B0(lhs, q) == to_B0(E("s[1|]", q), q));
  CHECK(equal_on_chains(lhs, E("s[1|]", q), 4, q));
}

TEST_CASE("bracket is bilinear") {
  Params p(2, 2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Element a = random_element(rng, p, 2, 3), b = random_element(rng, p, 2, 3), c = random_element(rng, p, 2, 3);
    CHECK(bracket(a + Q(3) * b, c, p) == bracket(a, c, p) + Q(3) * bracket(b, c, p));
  }
}

TEST_CASE("antisymmetry and Jacobi in canonical form") {
  for (auto [l, lf] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    SuiteResult r = jacobi_suite(100 + l * 10 + lf, 100, Params(l, lf), 2);
    CHECK(r.cases == 100);
    CHECK(r.ok());
  }
}

TEST_CASE("bracket agrees with the commutator of actions") {
  for (auto [l, lf] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    SuiteResult r = homomorphism_suite(200 + l * 10 + lf, 60, Params(l, lf), 2, 4);
    CHECK(r.ok());
  }
}

TEST_CASE("grading, subalgebras and the kind-I ideal") {
  Params p(2, 2);
  std::mt19937_64 rng(17);
  int raising_pairs = 0, lowering_pairs = 0;
  for (int i = 0; i < 600; ++i) {
    Generator a = random_generator(rng, p, 2), b = random_generator(rng, p, 2);
    Element br = bracket(Element(a), Element(b), p);
    for (const auto& [g, c] : br) CHECK(grade(g) == grade(a) + grade(b));
    if (a.kind == Kind::F || b.kind == Kind::F)
      for (const auto& [g, c] : br) CHECK(g.kind == Kind::F);
    const auto ca = classify(a), cb = classify(b);
    if (ca == cb && ca != TriangularClass::Diagonal) {
      (ca == TriangularClass::Raising ? raising_pairs : lowering_pairs) += 1;
      for (const auto& [g, c] : br) CHECK(classify(g) == ca);
    }
  }
  CHECK(raising_pairs > 20);
  CHECK(lowering_pairs > 20);
}

TEST_CASE("classify examples") {
  Params p(2, 2);
  CHECK(classify(G("f(1,1;1,1)[1|]", p)) == TriangularClass::Raising);
  CHECK(classify(G("s[2|1]", p)) == TriangularClass::Raising);
  CHECK(classify(G("f(1,1;1,1)[1|1]", p)) == TriangularClass::Diagonal);
  CHECK(classify(G("s[1|2]", p)) == TriangularClass::Lowering);
  CHECK(classify(G("f(2,1;1,1)[1|1]", p)) == TriangularClass::Raising);
  CHECK(classify(G("l(1,2)[1|1]", p)) == TriangularClass::Lowering);
  CHECK(classify(G("s[|]", p)) == TriangularClass::Diagonal);
  CHECK(std::string(class_name(TriangularClass::Raising)) == "Raising");
}

TEST_CASE("is_root_vector examples") {
  Params p(2, 1);
  auto rd = is_root_vector(E("f(1,1;1,1)[1|2]", p), p);
  REQUIRE(rd.has_value());
  REQUIRE(rd->pairs.size() == 2);
  bool plus = false, minus = false;
  for (const auto& [h, v] : rd->pairs) {
    if (h == G("f(1,1;1,1)[1|1]", p)) plus = v == 1;
    if (h == G("f(1,1;1,1)[2|2]", p)) minus = v == -1;
  }
  CHECK(plus);
  CHECK(minus);
  CHECK_FALSE(is_root_vector(E("s[1|2]", p), p).has_value());
  CHECK_FALSE(is_root_vector(E("f(1,1;1,1)[1|1]", p), p).has_value());
  CHECK(is_root_vector(E("-5*f(1,1;1,1)[1,2|]", p), p).has_value());
  CHECK_FALSE(is_root_vector(E("f(1,1;1,1)[1|2] + f(1,1;1,1)[2|1]", p), p).has_value());
}

TEST_CASE("cartan_commutes examples") {
  Params p(2, 1);
  CHECK(cartan_commutes(G("s[1|1]", p), G("s[2|2]", p), p));
  CHECK(cartan_commutes(G("f(1,1;1,1)[|]", p), G("s[1|1]", p), p));
  Generator g = G("l(1,1)[2,1|2,1]", p);
  CHECK(cartan_commutes(g, g, p));
  CHECK_THROWS_AS(cartan_commutes(G("s[1|2]", p), g, p), std::invalid_argument);
}

TEST_CASE("extended sigma expansion acts like the original") {
  Params p(2, 2);
  for (const char* s : {"s[|]", "s[1|]", "s[|2]", "s[2,1|]"}) {
    Generator g = G(s, p);
    CHECK(equal_on_chains(expand_extended_sigma(g, p), Element(g), 5, p));
  }
}
