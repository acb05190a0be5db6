#include "osa/verma.hpp"

#include <algorithm>
#include <sstream>

#include "osa/basis.hpp"

namespace osa {

namespace {

std::strong_ordering word_compare(const PbwWord& a, const PbwWord& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = gen_compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void add_state(VermaState& acc, const VermaState& s, const Q& c) {
  for (const auto& [w, v] : s) add_term(acc, w, v * c);
}

int word_grade(const PbwWord& w) {
  int g = 0;
  for (const auto& x : w) g += grade(x);
  return g;
}

int rank_of(TriangularClass c) {
  switch (c) {
    case TriangularClass::Raising: return 0;
    case TriangularClass::Diagonal: return 1;
    case TriangularClass::Lowering: return 2;
  }
  return 1;
}

}  // namespace

bool WordLess::operator()(const PbwWord& a, const PbwWord& b) const { return word_compare(a, b) < 0; }

bool VermaModule::KeyLess::operator()(const std::pair<Generator, PbwWord>& a,
                                      const std::pair<Generator, PbwWord>& b) const {
  auto c = gen_compare(a.first, b.first);
  if (c != 0) return c < 0;
  return word_compare(a.second, b.second) < 0;
}

std::string render(const PbwWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += render(w[i]);
  }
  return out;
}

std::string render(const VermaState& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : s) {
    Q a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1) os << render_rational(a) << '*';
    os << '(' << render(w) << ')';
  }
  return os.str();
}

VermaState vacuum() {
  VermaState s;
  s.emplace(PbwWord{}, Q(1));
  return s;
}

VermaModule::VermaModule(Weight w) : w_(std::move(w)) {}

Q VermaModule::vacuum_value(const Generator& g) const {
  auto a = diagonal_arg(g);
  if (!a) throw std::invalid_argument("not a diagonal generator: " + render(g));
  return h_eval(w_, *a);
}

const VermaState& VermaModule::apply_gen(const Generator& x, const PbwWord& w) {
  auto key = std::make_pair(x, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  VermaState out;
  const TriangularClass cls = classify(x);
  if (w.empty()) {
    if (cls == TriangularClass::Raising)
      out.emplace(PbwWord{x}, Q(1));
    else if (cls == TriangularClass::Diagonal)
      add_term(out, PbwWord{}, vacuum_value(x));
  } else if (cls == TriangularClass::Raising && gen_compare(x, w.front()) >= 0) {
    PbwWord nw;
    nw.reserve(w.size() + 1);
    nw.push_back(x);
    nw.insert(nw.end(), w.begin(), w.end());
    out.emplace(std::move(nw), Q(1));
  } else {
    // x w0 rest = w0 (x rest) + [x, w0] rest
    const Generator w0 = w.front();
    const PbwWord rest(w.begin() + 1, w.end());
    const VermaState inner = apply_gen(x, rest);
    for (const auto& [iw, c] : inner) add_state(out, apply_gen(w0, iw), c);
    const Element br = to_B4(bracket(x, w0, w_.params), w_.params);
    for (const auto& [h, c] : br) add_state(out, apply_gen(h, rest), c);
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

VermaState VermaModule::apply(const Element& g, const VermaState& s) {
  const Element g4 = to_B4(g, w_.params);
  VermaState out;
  for (const auto& [x, c] : g4)
    for (const auto& [w, v] : s) add_state(out, apply_gen(x, w), c * v);
  return out;
}

Q VermaModule::expectation(const std::vector<Element>& word) {
  VermaState s = vacuum();
  for (auto it = word.rbegin(); it != word.rend() && !s.empty(); ++it) s = apply(*it, s);
  auto it = s.find(PbwWord{});
  return it == s.end() ? Q(0) : it->second;
}

Q VermaModule::hermitian_form(const std::vector<Element>& e1, const std::vector<Element>& e2) {
  std::vector<Element> word;
  word.reserve(e1.size() + e2.size());
  for (auto it = e1.rbegin(); it != e1.rend(); ++it) word.push_back(omega(*it));
  word.insert(word.end(), e2.begin(), e2.end());
  return expectation(word);
}

Q VermaModule::reorder(std::vector<Generator> word, std::mt19937_64& rng) {
  std::vector<std::size_t> inversions;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (rank_of(classify(word[i])) > rank_of(classify(word[i + 1]))) inversions.push_back(i);
  if (inversions.empty()) {
    Q prod = 1;
    for (const auto& g : word) {
      if (classify(g) != TriangularClass::Diagonal) return 0;
      prod *= vacuum_value(g);
      if (prod == 0) return 0;
    }
    return prod;
  }
  std::uniform_int_distribution<std::size_t> pick(0, inversions.size() - 1);
  const std::size_t i = inversions[pick(rng)];
  const Element br = bracket(word[i], word[i + 1], w_.params);
  std::vector<Generator> swapped = word;
  std::swap(swapped[i], swapped[i + 1]);
  Q total = reorder(std::move(swapped), rng);
  for (const auto& [h, c] : br) {
    std::vector<Generator> shorter;
    shorter.reserve(word.size() - 1);
    shorter.insert(shorter.end(), word.begin(), word.begin() + i);
    shorter.push_back(h);
    shorter.insert(shorter.end(), word.begin() + i + 2, word.end());
    total += c * reorder(std::move(shorter), rng);
  }
  return total;
}

Q VermaModule::expectation_reordered(const std::vector<Element>& word, std::mt19937_64& rng) {
  // Expand the product of sums into monomials.
  std::vector<std::pair<std::vector<Generator>, Q>> monomials{{{}, Q(1)}};
  for (const Element& e : word) {
    std::vector<std::pair<std::vector<Generator>, Q>> next;
    for (const auto& [m, c] : monomials)
      for (const auto& [g, v] : e) {
        auto nm = m;
        nm.push_back(g);
        next.emplace_back(std::move(nm), c * v);
      }
    monomials = std::move(next);
  }
  Q total = 0;
  for (auto& [m, c] : monomials) total += c * reorder(std::move(m), rng);
  return total;
}

VermaState apply(const Element& g, const VermaState& s, const Weight& w) { return VermaModule(w).apply(g, s); }

Q expectation(const std::vector<Element>& word, const Weight& w) { return VermaModule(w).expectation(word); }

Q hermitian_form(const std::vector<Element>& e1, const std::vector<Element>& e2, const Weight& w) {
  return VermaModule(w).hermitian_form(e1, e2);
}

std::vector<Element> word_elements(const PbwWord& w) {
  std::vector<Element> out;
  out.reserve(w.size());
  for (const auto& g : w) out.emplace_back(g);
  return out;
}

std::vector<Generator> pbw_letters(const Params& p, int max_cost) {
  std::vector<Generator> out;
  if (max_cost < 1) return out;
  for (const Generator& g : all_generators(p, max_cost - 1))
    if (in_B4(g) && classify(g) == TriangularClass::Raising) out.push_back(g);
  std::sort(out.begin(), out.end(), [](const Generator& a, const Generator& b) { return gen_compare(a, b) > 0; });
  return out;
}

namespace {

void extend_words(const std::vector<Generator>& letters, std::size_t from, int budget, PbwWord& cur,
                  std::vector<PbwWord>& out) {
  for (std::size_t i = from; i < letters.size(); ++i) {
    const int cost = letters[i].size() + 1;
    if (cost > budget) continue;
    cur.push_back(letters[i]);
    out.push_back(cur);
    extend_words(letters, i, budget - cost, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PbwWord> pbw_words(const Params& p, int max_size) {
  std::vector<PbwWord> out{PbwWord{}};
  PbwWord cur;
  extend_words(pbw_letters(p, max_size), 0, max_size, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const PbwWord& a, const PbwWord& b) {
    int ca = 0, cb = 0;
    for (const auto& g : a) ca += g.size() + 1;
    for (const auto& g : b) cb += g.size() + 1;
    return ca < cb;
  });
  return out;
}

GramMatrix gram_matrix(VermaModule& m, int max_word_size) {
  GramMatrix g;
  g.index = pbw_words(m.params(), max_word_size);
  const std::size_t n = g.index.size();
  g.entries.assign(n, std::vector<Q>(n, Q(0)));
  std::vector<int> grades(n);
  std::vector<std::vector<Element>> omega_rev(n);
  for (std::size_t i = 0; i < n; ++i) {
    grades[i] = word_grade(g.index[i]);
    for (auto it = g.index[i].rbegin(); it != g.index[i].rend(); ++it) omega_rev[i].emplace_back(omega(*it));
  }
  for (std::size_t j = 0; j < n; ++j) {
    VermaState ket;
    ket.emplace(g.index[j], Q(1));
    for (std::size_t i = 0; i < n; ++i) {
      if (grades[i] != grades[j]) continue;
      VermaState s = ket;
      // omega(E1) = omega(X_k) ... omega(X_1); X_1 acts first.
      for (auto it = omega_rev[i].rbegin(); it != omega_rev[i].rend() && !s.empty(); ++it) s = m.apply(*it, s);
      auto v = s.find(PbwWord{});
      if (v != s.end()) g.entries[i][j] = v->second;
    }
  }
  return g;
}

GramMatrix gram_matrix(const Weight& w, int max_word_size) {
  VermaModule m(w);
  return gram_matrix(m, max_word_size);
}

Inertia inertia(const GramMatrix& g) { return inertia(g.entries); }

std::string render(const GramMatrix& g) {
  std::ostringstream os;
  os << "size " << g.index.size() << '\n';
  for (std::size_t i = 0; i < g.index.size(); ++i) os << "word " << i << ": " << render(g.index[i]) << '\n';
  for (const auto& row : g.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << render_rational(row[j]);
    os << '\n';
  }
  return os.str();
}

Sl2Triple sl2_triple(const Seq& upper, const Seq& lower, const std::array<int, 4>& fl, const Params& p) {
  Generator e = Generator::f(fl[0], fl[1], fl[2], fl[3], upper, lower);
  check_params(e, p);
  if (classify(e) != TriangularClass::Raising)
    throw std::invalid_argument("sl2_triple needs upper.l1.l3 > lower.l2.l4: " + render(e));
  Sl2Triple t;
  t.e = Element(e);
  t.f = omega(t.e);
  t.h = bracket(t.e, t.f, p);
  return t;
}

TensorState act_word(const std::vector<Element>& word, const TensorState& v) {
  TensorState s = v;
  for (auto it = word.rbegin(); it != word.rend() && !s.empty(); ++it) s = act_tensor(*it, s);
  return s;
}

OracleReport concrete_oracle(const Partition& gamma, const Params& p, int max_size) {
  OracleReport rep;
  const TensorState v = lowest_weight_vector_concrete(gamma, p);
  const Q norm = inner_chain(v, v);
  VermaModule m(weight_from_partition(gamma, p));
  const std::vector<PbwWord> words = pbw_words(p, max_size);
  std::vector<TensorState> images;
  images.reserve(words.size());
  for (const auto& w : words) images.push_back(act_word(word_elements(w), v));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      const Q abstract = m.hermitian_form(word_elements(words[i]), word_elements(words[j]));
      const Q concrete = inner_chain(images[i], images[j]) / norm;
      ++rep.pairs;
      if (abstract != concrete && rep.ok) {
        rep.ok = false;
        rep.failure = "<" + render(words[i]) + " | " + render(words[j]) + ">: form " + render_rational(abstract) +
                      ", concrete " + render_rational(concrete);
      }
    }
  }
  return rep;
}

bool radical_vanishes(const GramMatrix& g, const Inertia& in, const Partition& gamma, const Params& p) {
  const TensorState v = lowest_weight_vector_concrete(gamma, p);
  std::vector<TensorState> images;
  images.reserve(g.index.size());
  for (const auto& w : g.index) images.push_back(act_word(word_elements(w), v));
  for (const auto& r : in.radical) {
    TensorState sum;
    sum.arity = v.arity;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      for (const auto& [t, c] : images[i].terms) add_term(sum.terms, t, c * r[i]);
    }
    if (!sum.empty()) return false;
  }
  return true;
}

long splitting_count(const Seq& I, const Seq& J, const Seq& K, const Seq& L) {
  const Seq X = concat(K, I, L);
  const Seq Y = concat(K, J, L);
  long count = 0;
  for (std::size_t t = 0; t + I.size() <= X.size() && t + J.size() <= Y.size(); ++t) {
    if (slice(X, 0, t) != slice(Y, 0, t)) break;
    if (slice(X, t, t + I.size()) != I || slice(Y, t, t + J.size()) != J) continue;
    if (slice(X, t + I.size(), X.size()) == slice(Y, t + J.size(), Y.size())) ++count;
  }
  return count;
}

Myeq1Result myeq1_evaluate(const Seq& upper, const Seq& lower, int p, const Partition& gamma, const Params& params) {
  if (seq_compare(upper, lower) <= 0) throw std::invalid_argument("norm identity needs upper > lower");
  Myeq1Result res;
  const Weight w = weight_from_partition(gamma, params);
  VermaModule m(w);
  const Generator sig = Generator::s(upper, lower);
  check_params(sig, params);
  res.abstract_value = m.expectation({Element(omega(sig)), Element(sig)});

  Element tilde(sig);
  const std::vector<Seq> seqs = sequences_up_to(params.lambda, p);
  for (const Seq& K : seqs)
    for (const Seq& L : seqs) {
      if (static_cast<int>(K.size() + L.size()) > p) continue;
      const long s = splitting_count(upper, lower, K, L);
      const Seq KIL = concat(K, upper, L), KJL = concat(K, lower, L);
      for (int l1 = 1; l1 <= params.lambda_f; ++l1)
        for (int l2 = 1; l2 <= params.lambda_f; ++l2) {
          if (s != 0)
            res.abstract_value -= Q(s) * (h_eval(w, HArg::I(l1, KJL, l2)) - h_eval(w, HArg::I(l1, KIL, l2)));
          tilde.add(Generator::f(l1, l1, l2, l2, KIL, KJL), -1);
        }
    }

  const TensorState v = lowest_weight_vector_concrete(gamma, params);
  const TensorState x = act_tensor(tilde, v);
  res.concrete_value = inner_chain(x, x) / inner_chain(v, v);
  res.ok = res.abstract_value == res.concrete_value && res.abstract_value >= 0;
  return res;
}

bool myeq1_check(const Seq& upper, const Seq& lower, int p, const Partition& gamma, const Params& params) {
  return myeq1_evaluate(upper, lower, p, gamma, params).ok;
}

}  // namespace osa
