#include "osa/checks.hpp"

#include "osa/basis.hpp"
#include "osa/bracket.hpp"
#include "osa/chains.hpp"

namespace osa {

namespace {

Seq random_seq(std::mt19937_64& rng, const Params& p, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), col(1, p.lambda);
  Seq s(static_cast<std::size_t>(len(rng)));
  for (int& v : s) v = col(rng);
  return s;
}

void expect_equal(SuiteResult& r, const Element& lhs, const Element& rhs, int max_len, const Params& p,
                  const std::string& label) {
  ++r.cases;
  if (!equal_on_chains(lhs, rhs, max_len, p)) r.failures.push_back(label + ": " + render(lhs));
}

}  // namespace

Generator random_generator(std::mt19937_64& rng, const Params& p, int max_len) {
  std::uniform_int_distribution<int> kind(0, 3), fl(1, p.lambda_f);
  Seq up = random_seq(rng, p, max_len), lo = random_seq(rng, p, max_len);
  switch (kind(rng)) {
    case 0: {
      int a = fl(rng), b = fl(rng), c = fl(rng), d = fl(rng);
      return Generator::f(a, b, c, d, up, lo);
    }
    case 1: {
      int a = fl(rng), b = fl(rng);
      return Generator::l(a, b, up, lo);
    }
    case 2: {
      int a = fl(rng), b = fl(rng);
      return Generator::r(a, b, up, lo);
    }
    default: return Generator::s(up, lo);
  }
}

Element random_element(std::mt19937_64& rng, const Params& p, int max_len, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3), count(1, std::max(terms, 1));
  Element e;
  for (int n = count(rng); n > 0; --n) e.add(random_generator(rng, p, max_len), coef(rng));
  return e;
}

SuiteResult jacobi_suite(std::uint64_t seed, long cases, const Params& p, int max_len) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (long i = 0; i < cases; ++i) {
    const Element a(random_generator(rng, p, max_len));
    const Element b(random_generator(rng, p, max_len));
    const Element c(random_generator(rng, p, max_len));
    ++r.cases;
    if (!to_B0(bracket(a, b, p) + bracket(b, a, p), p).empty())
      r.failures.push_back("antisymmetry: " + render(a) + ", " + render(b));
    Element jac = bracket(a, bracket(b, c, p), p) + bracket(b, bracket(c, a, p), p) + bracket(c, bracket(a, b, p), p);
    if (!to_B0(jac, p).empty())
      r.failures.push_back("jacobi: " + render(a) + ", " + render(b) + ", " + render(c));
  }
  return r;
}

SuiteResult homomorphism_suite(std::uint64_t seed, long cases, const Params& p, int gen_len, int max_len) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  const std::vector<Chain> chains = enumerate_chains(p, max_len);
  for (long i = 0; i < cases; ++i) {
    const Element a(random_generator(rng, p, gen_len));
    const Element b(random_generator(rng, p, gen_len));
    const Element ab = bracket(a, b, p);
    ++r.cases;
    for (const Chain& c : chains) {
      const ChainState psi = chain_state(c);
      ChainState lhs = act(ab, psi);
      ChainState rhs = act(a, act(b, psi));
      for (const auto& [k, v] : act(b, act(a, psi))) add_term(rhs, k, -v);
      if (lhs != rhs) {
        r.failures.push_back("homomorphism: " + render(a) + ", " + render(b) + " on " + render(c));
        break;
      }
    }
  }
  return r;
}

SuiteResult identity_suite(const Params& p, int max_size, int max_len) {
  SuiteResult r;
  const std::vector<Seq> seqs = sequences_up_to(p.lambda, max_size);
  const std::vector<Seq> pads = sequences_up_to(p.lambda, max_len);
  for (const Seq& I : seqs)
    for (const Seq& J : seqs) {
      if (static_cast<int>(I.size() + J.size()) > max_size) continue;
      const Element sig(Generator::s(I, J));
      Element left_peel, right_peel;
      for (int i = 1; i <= p.lambda; ++i) {
        left_peel.add(Generator::s(concat({i}, I), concat({i}, J)), 1);
        right_peel.add(Generator::s(concat(I, {i}), concat(J, {i})), 1);
      }
      for (int l = 1; l <= p.lambda_f; ++l) {
        left_peel.add(Generator::l(l, l, I, J), 1);
        right_peel.add(Generator::r(l, l, I, J), 1);
      }
      expect_equal(r, sig, left_peel, max_len, p, "sigma left peel");
      expect_equal(r, sig, right_peel, max_len, p, "sigma right peel");

      Element sig_f;
      for (const Seq& K1 : pads)
        for (const Seq& K2 : pads) {
          if (K1.size() + K2.size() + J.size() > static_cast<std::size_t>(max_len)) continue;
          for (int a = 1; a <= p.lambda_f; ++a)
            for (int b = 1; b <= p.lambda_f; ++b)
              sig_f.add(Generator::f(a, a, b, b, concat(K1, I, K2), concat(K1, J, K2)), 1);
        }
      expect_equal(r, sig, sig_f, max_len, p, "sigma as f sum");

      for (int a = 1; a <= p.lambda_f; ++a)
        for (int b = 1; b <= p.lambda_f; ++b) {
          Element l_f, r_f;
          for (const Seq& K : pads) {
            if (K.size() + J.size() > static_cast<std::size_t>(max_len)) continue;
            for (int c = 1; c <= p.lambda_f; ++c) {
              l_f.add(Generator::f(a, b, c, c, concat(I, K), concat(J, K)), 1);
              r_f.add(Generator::f(c, c, a, b, concat(K, I), concat(K, J)), 1);
            }
          }
          expect_equal(r, Element(Generator::l(a, b, I, J)), l_f, max_len, p, "l as f sum");
          expect_equal(r, Element(Generator::r(a, b, I, J)), r_f, max_len, p, "r as f sum");
        }
    }
  return r;
}

}  // namespace osa
