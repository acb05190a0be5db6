#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "osa/basis.hpp"
#include "osa/bracket.hpp"
#include "osa/checks.hpp"
#include "osa/verma.hpp"

using namespace osa;
using osa::test::E;
using osa::test::G;

namespace {

Weight gamma_weight(std::vector<int> parts, const Params& p) { return weight_from_partition(Partition(parts), p); }

std::vector<Element> word(std::initializer_list<const char*> letters, const Params& p) {
  std::vector<Element> out;
  for (const char* l : letters) out.push_back(E(l, p));
  return out;
}

}  // namespace

TEST_CASE("apply examples") {
  Params p(1, 1);
  Weight w = gamma_weight({1}, p);
  CHECK(apply(E("f(1,1;1,1)[|1]", p), vacuum(), w).empty());
  CHECK(apply(E("s[|1]", p), vacuum(), w).empty());
  CHECK(apply(E("s[1|1]", p), vacuum(), w).empty());
  CHECK(apply(E("s[|]", p), vacuum(), w) == [] {
    VermaState s = vacuum();
    s.begin()->second = 1;
    return s;
  }());
  VermaState one = apply(E("f(1,1;1,1)[1|]", p), vacuum(), w);
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->first == PbwWord{G("f(1,1;1,1)[1|]", p)});
  CHECK(one.begin()->second == 1);
  CHECK(render(one) == "(f(1,1;1,1)[1|])");
  CHECK(render(vacuum()) == "(1)");
}

TEST_CASE("apply keeps words normal ordered") {
  Params p(2, 2);
  VermaModule m(gamma_weight({2, 1}, p));
  std::vector<Generator> letters = pbw_letters(p, 3);
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  for (int i = 0; i < 40; ++i) {
    VermaState s = vacuum();
    for (int k = 0; k < 3; ++k) s = m.apply(Element(letters[pick(rng)]), s);
    for (const auto& [w, c] : s) {
      for (const auto& g : w) {
        CHECK(in_B4(g));
        CHECK(classify(g) == TriangularClass::Raising);
      }
      for (std::size_t j = 1; j < w.size(); ++j) CHECK(gen_compare(w[j - 1], w[j]) >= 0);
    }
  }
}

TEST_CASE("expectation examples") {
  Params p(1, 1);
  Weight w = gamma_weight({1}, p);
  CHECK(expectation({}, w) == 1);
  CHECK(expectation(word({"f(1,1;1,1)[|1]", "f(1,1;1,1)[1|]"}, p), w) == 1);
  CHECK(expectation(word({"f(1,1;1,1)[1|]", "f(1,1;1,1)[|1]"}, p), w) == 0);
  CHECK(expectation(word({"s[1|]", "f(1,1;1,1)[1,1|]"}, p), w) == 0);
  Params q(2, 2);
  CHECK(expectation(word({"s[2|1]", "f(2,1;1,1)[1|]", "l(1,1)[2|]"}, q), gamma_weight({1, 1}, q)) == 0);
}

TEST_CASE("hermitian_form examples") {
  Params p(1, 1);
  Weight w = gamma_weight({1}, p);
  CHECK(hermitian_form(word({"f(1,1;1,1)[1|]"}, p), word({"f(1,1;1,1)[1|]"}, p), w) == 1);
  CHECK(hermitian_form(word({"s[1|]"}, p), word({"s[1|]"}, p), w) == 1);
  CHECK(hermitian_form(word({"s[1|]"}, p), word({"f(1,1;1,1)[1|]"}, p), w) == 1);
}

TEST_CASE("gram_matrix examples") {
  Params p(1, 1);
  GramMatrix g = gram_matrix(gamma_weight({1}, p), 2);
  auto pos = [&](const char* s) {
    for (std::size_t i = 0; i < g.index.size(); ++i)
      if (g.index[i] == PbwWord{G(s, p)}) return i;
    FAIL("missing word");
    return std::size_t{0};
  };
  std::size_t a = pos("s[1|]"), b = pos("f(1,1;1,1)[1|]");
  CHECK(g.entries[a][a] == 1);
  CHECK(g.entries[a][b] == 1);
  CHECK(g.entries[b][a] == 1);
  CHECK(g.entries[b][b] == 1);

  GramMatrix z = gram_matrix(gamma_weight({}, Params(2, 2)), 3);
  CHECK(z.entries[0][0] == 1);
  for (std::size_t i = 0; i < z.index.size(); ++i)
    for (std::size_t j = 0; j < z.index.size(); ++j)
      if (i || j) CHECK(z.entries[i][j] == 0);

  GramMatrix v = gram_matrix(gamma_weight({2}, Params(2, 2)), 0);
  CHECK(v.index.size() == 1);
  CHECK(v.entries == Matrix{{Q(1)}});
  CHECK(render(v) == "size 1\nword 0: 1\n1\n");
}

TEST_CASE("inertia examples") {
  Inertia a = inertia(Matrix{{1, 1}, {1, 1}});
  CHECK(a.positive == 1);
  CHECK(a.zero == 1);
  CHECK(a.negative == 0);
  REQUIRE(a.radical.size() == 1);
  CHECK(a.radical[0][0] == -a.radical[0][1]);
  CHECK(a.radical[0][0] != 0);
  Inertia id = inertia(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK((id.positive == 3 && id.zero == 0 && id.negative == 0));
  Inertia zero = inertia(Matrix{{0}});
  CHECK((zero.positive == 0 && zero.zero == 1 && zero.negative == 0));
  Inertia hyper = inertia(Matrix{{0, 2}, {2, 0}});
  CHECK((hyper.positive == 1 && hyper.negative == 1 && hyper.zero == 0));
  Inertia mixed = inertia(Matrix{{2, 1, 0}, {1, Q(1, 2), 0}, {0, 0, -3}});
  CHECK((mixed.positive == 1 && mixed.zero == 1 && mixed.negative == 1));
}

TEST_CASE("Gram matrices: symmetry, unitarity and the radical") {
  for (auto [l, lf, bound] : {std::tuple{1, 1, 4}, {2, 1, 3}, {1, 2, 3}, {2, 2, 2}}) {
    Params p(l, lf);
    for (std::vector<int> parts : {std::vector<int>{1}, {2}, {1, 1}, {2, 1}}) {
      Partition gamma(parts);
      GramMatrix g = gram_matrix(weight_from_partition(gamma, p), bound);
      for (std::size_t i = 0; i < g.index.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) CHECK(g.entries[i][j] == g.entries[j][i]);
      Inertia in = inertia(g);
      CHECK(in.negative == 0);
      CHECK(in.positive + in.zero == static_cast<int>(g.index.size()));
      CHECK(static_cast<int>(in.radical.size()) == in.zero);
      CHECK(radical_vanishes(g, in, gamma, p));
    }
  }
}

TEST_CASE("a non-unitary weight shows negative inertia") {
  Params p(1, 1);
  Weight w;
  w.params = p;
  w.set(HArg::I(1, {}, 1), -1);
  Inertia in = inertia(gram_matrix(w, 2));
  CHECK(in.negative > 0);
}

TEST_CASE("contravariance of the form") {
  Params p(2, 2);
  VermaModule m(gamma_weight({2, 1}, p));
  std::vector<PbwWord> words = pbw_words(p, 2);
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  int tested = 0;
  while (tested < 150) {
    Generator x = random_generator(rng, p, 2);
    if (classify(x) == TriangularClass::Diagonal) continue;
    ++tested;
    std::vector<Element> e1 = word_elements(words[pick(rng)]), e2 = word_elements(words[pick(rng)]);
    std::vector<Element> xe1{Element(x)}, ox_e2{omega(Element(x))};
    xe1.insert(xe1.end(), e1.begin(), e1.end());
    ox_e2.insert(ox_e2.end(), e2.begin(), e2.end());
    CHECK(m.hermitian_form(xe1, e2) == m.hermitian_form(e1, ox_e2));
  }
}

TEST_CASE("expectation does not depend on the straightening order") {
  for (const Params& p : {Params(1, 1), Params(2, 2)}) {
    VermaModule m(gamma_weight({2, 1}, p));
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> len(1, 4);
    for (int i = 0; i < 60; ++i) {
      std::vector<Element> w;
      for (int k = len(rng); k > 0; --k) w.emplace_back(random_generator(rng, p, 1));
      const Q direct = m.expectation(w);
      for (int rep = 0; rep < 3; ++rep) CHECK(m.expectation_reordered(w, rng) == direct);
    }
  }
}

TEST_CASE("diagonal generators outside B4 evaluate through the recursions") {
  for (const Params& p : {Params(1, 1), Params(2, 1), Params(1, 2), Params(2, 2)}) {
    for (std::vector<int> parts : {std::vector<int>{1}, {2, 1}}) {
      Weight w = gamma_weight(parts, p);
      Weight free = free_seeded_from(w, 3);
      for (Kind k : {Kind::L, Kind::R, Kind::S})
        for (const HArg& a : diagonal_args(k, p, 3)) {
          Generator g = diagonal_generator(a);
          CHECK(expectation({Element(g)}, w) == h_eval(w, a));
          CHECK(expectation({Element(g)}, free) == h_eval(w, a));
        }
    }
  }
}

TEST_CASE("sl2 triple examples") {
  Params p(1, 1);
  Sl2Triple t = sl2_triple({1}, {}, {1, 1, 1, 1}, p);
  CHECK(t.e == E("f(1,1;1,1)[1|]", p));
  CHECK(t.f == E("f(1,1;1,1)[|1]", p));
  CHECK(t.h == E("f(1,1;1,1)[1|1] - f(1,1;1,1)[|]", p));
  CHECK(to_B0(bracket(t.h, t.e, p) - Q(2) * t.e, p).empty());
  CHECK(to_B0(bracket(t.h, t.f, p) + Q(2) * t.f, p).empty());
  CHECK(bracket(t.f, t.e, p) == -t.h);
  // The norm of e v is the value of -h on the vacuum.
  Weight w = gamma_weight({1}, p);
  CHECK(expectation({t.h}, w) == -1);
  CHECK(expectation({t.f, t.e}, w) == 1);
  CHECK(expectation({t.e, t.f}, w) == 0);
  CHECK_THROWS_AS(sl2_triple({}, {1}, {1, 1, 1, 1}, p), std::invalid_argument);
  CHECK_THROWS_AS(sl2_triple({1}, {1}, {1, 1, 1, 1}, p), std::invalid_argument);
}

TEST_CASE("norm identity examples") {
  Params p(2, 1);
  Myeq1Result r = myeq1_evaluate({2}, {1}, 0, Partition({1}), p);
  CHECK(r.ok);
  CHECK(r.abstract_value == r.concrete_value);
  CHECK(myeq1_check({2}, {1}, 0, Partition({1}), p));

  Myeq1Result z = myeq1_evaluate({2, 1}, {1}, 2, Partition(), p);
  CHECK(z.abstract_value == 0);
  CHECK(z.concrete_value == 0);
  CHECK_THROWS_AS(myeq1_evaluate({1}, {2}, 0, Partition({1}), p), std::invalid_argument);
}

TEST_CASE("norm identity stabilizes once the differences are exhausted") {
  Params p(2, 1);
  const Partition gamma({2, 1, 1});
  const Seq I{2}, J{1};
  std::vector<Q> values;
  for (int depth = 0; depth <= 4; ++depth) {
    Myeq1Result r = myeq1_evaluate(I, J, depth, gamma, p);
    CHECK(r.ok);
    values.push_back(r.abstract_value);
  }
  // support reaches sequence length 1, #I = 1
  for (int depth = 2; depth <= 4; ++depth) CHECK(values[depth] == values[2]);
}

TEST_CASE("splitting count") {
  CHECK(splitting_count({2}, {1}, {}, {}) == 1);
  CHECK(splitting_count({1}, {}, {1}, {}) == 2);
  CHECK(splitting_count({1}, {}, {1}, {1}) == 3);
  CHECK(splitting_count({2}, {1}, {1}, {2}) == 1);
}
