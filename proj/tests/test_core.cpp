#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "osa/checks.hpp"
#include "osa/core.hpp"

using namespace osa;
using osa::test::E;
using osa::test::G;

namespace {

// Literal reading of the two ordering rules for sequences.
int brute_seq_order(const Seq& a, const Seq& b) {
  if (a.size() > b.size()) return 1;
  if (a.size() < b.size()) return -1;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool prefix_equal = true;
    for (std::size_t k = 0; k < r; ++k) prefix_equal = prefix_equal && a[k] == b[k];
    if (prefix_equal && a[r] > b[r]) return 1;
    if (prefix_equal && a[r] < b[r]) return -1;
  }
  return 0;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST_CASE("params validate") {
  CHECK_THROWS_AS(Params(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Params(1, 0), std::invalid_argument);
  CHECK_NOTHROW(Params(3, 2));
}

TEST_CASE("seq_compare examples") {
  CHECK(seq_compare({1, 1}, {2}) > 0);
  CHECK(seq_compare({2, 1}, {1, 2}) > 0);
  CHECK(seq_compare({}, {}) == 0);
}

TEST_CASE("seq_compare matches the literal rules") {
  auto seqs = sequences_up_to(2, 3);
  CHECK(seqs.size() == 15);
  for (const auto& a : seqs)
    for (const auto& b : seqs) CHECK(sign(seq_compare(a, b)) == brute_seq_order(a, b));
}

TEST_CASE("sequence helpers") {
  CHECK(concat({1}, {}, {2, 1}) == Seq{1, 2, 1});
  CHECK(concat(concat({1}, {2}), {3}) == concat({1}, concat({2}, {3})));
  CHECK(slice({1, 2, 3}, 1, 3) == Seq{2, 3});
  CHECK(starts_with({1, 2}, {1}));
  CHECK(ends_with({1, 2}, {2}));
  CHECK_FALSE(ends_with({1}, {1, 1}));
  CHECK(sequences_of_length(3, 2).size() == 9);
}

TEST_CASE("gen_compare examples") {
  Params p(2, 1);
  CHECK(gen_compare(G("s[1|2]", p), G("r(1,1)[1|2]", p)) > 0);
  CHECK(gen_compare(G("s[1,2|1]", p), G("s[1|1]", p)) > 0);
  Generator x = G("f(1,1;1,1)[2|1]", p);
  CHECK(gen_compare(x, x) == 0);
  // kind priority sigma > r > l > f at equal sequences
  CHECK(gen_compare(G("r(1,1)[1|2]", p), G("l(1,1)[1|2]", p)) > 0);
  CHECK(gen_compare(G("l(1,1)[1|2]", p), G("f(1,1;1,1)[1|2]", p)) > 0);
}

TEST_CASE("gen_compare is a total order") {
  Params p(2, 2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    Generator a = random_generator(rng, p, 2), b = random_generator(rng, p, 2), c = random_generator(rng, p, 2);
    CHECK(sign(gen_compare(a, b)) == -sign(gen_compare(b, a)));
    CHECK((gen_compare(a, b) == 0) == (a == b));
    if (gen_compare(a, b) < 0 && gen_compare(b, c) < 0) CHECK(gen_compare(a, c) < 0);
  }
}

TEST_CASE("grade examples") {
  Params p(2, 2);
  CHECK(grade(G("s[1,2|1]", p)) == 1);
  CHECK(grade(G("f(2,1;1,2)[|]", p)) == 0);
  CHECK(grade(G("l(1,1)[|1,1]", p)) == -2);
}

TEST_CASE("omega examples") {
  Params p(2, 2);
  CHECK(omega(E("s[1|2]", p)) == E("s[2|1]", p));
  CHECK(omega(E("3*l(2,1)[1|]", p)) == E("3*l(1,2)[|1]", p));
  CHECK(omega(E("f(1,2;2,1)[1|2,2]", p)) == E("f(2,1;1,2)[2,2|1]", p));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Element e = random_element(rng, p, 3, 4);
    CHECK(omega(omega(e)) == e);
    for (const auto& [g, c] : e) CHECK(grade(omega(g)) == -grade(g));
  }
}

TEST_CASE("element vector space laws") {
  Params p(2, 2);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Element a = random_element(rng, p, 2, 4), b = random_element(rng, p, 2, 4), c = random_element(rng, p, 2, 4);
    Q s(2, 3), t(-5, 7);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a - a).empty());
    CHECK(s * (a + b) == s * a + s * b);
    CHECK((s + t) * a == s * a + t * a);
    CHECK(s * (t * a) == (s * t) * a);
    CHECK(Q(0) * a == Element());
    for (const auto& [g, v] : s * a) CHECK(v != 0);
  }
}

TEST_CASE("rendering") {
  Params p(2, 2);
  CHECK(render(G("s[1,2|]", p)) == "s[1,2|]");
  CHECK(render(G("f(1,2;2,1)[1|2]", p)) == "f(1,2;2,1)[1|2]");
  CHECK(render(Element()) == "0");
  CHECK(render(E("-3/2*s[1|2] + l(2,1)[1|]", p)) == "-3/2*s[1|2] + l(2,1)[1|]");
  CHECK(render_rational(Q(6, 4)) == "3/2");
}

TEST_CASE("check_params rejects out-of-range indices") {
  Params p(1, 1);
  CHECK_THROWS_AS(check_params(Generator::s({2}, {}), p), RangeError);
  CHECK_THROWS_AS(check_params(Generator::l(1, 2, {}, {}), p), RangeError);
  CHECK_NOTHROW(check_params(Generator::f(1, 1, 1, 1, {1}, {1, 1}), p));
}
