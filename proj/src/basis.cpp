#include "osa/basis.hpp"

#include <mutex>
#include <shared_mutex>

#include "osa/chains.hpp"
#include "osa/linalg.hpp"

namespace osa {

bool in_B0(const Generator& g) {
  switch (g.kind) {
    case Kind::F: return g.fl[0] + g.fl[1] > 2 && g.fl[2] + g.fl[3] > 2;
    case Kind::L:
    case Kind::R: return g.fl[0] != 1 || g.fl[1] != 1;
    case Kind::S: return true;
  }
  return false;
}

bool in_B4(const Generator& g) {
  const Seq& I = g.upper;
  const Seq& J = g.lower;
  switch (g.kind) {
    case Kind::F: return true;
    case Kind::L: return I.empty() || J.empty() || I.back() != 1 || J.back() != 1;
    case Kind::R: {
      const bool unit = g.fl[0] == 1 && g.fl[1] == 1;
      if (I.empty() && J.empty()) return !unit;
      if (J.empty()) return !unit || I.front() != 1;
      if (I.empty()) return !unit || J.front() != 1;
      return I.front() != 1 || J.front() != 1;
    }
    case Kind::S:
      if (I.empty() || J.empty()) return true;
      return (I.front() != 1 || J.front() != 1) && (I.back() != 1 || J.back() != 1);
  }
  return false;
}

namespace {

Seq pre(int i, const Seq& s) { return concat({i}, s); }
Seq post(const Seq& s, int j) { return concat(s, {j}); }

Element rewrite_B0(const Generator& g, const Params& p) {
  const Seq& I = g.upper;
  const Seq& J = g.lower;
  Element out;
  switch (g.kind) {
    case Kind::L:
      out.add(Generator::s(I, J), 1);
      for (int i = 1; i <= p.lambda; ++i) out.add(Generator::s(pre(i, I), pre(i, J)), -1);
      for (int l = 2; l <= p.lambda_f; ++l) out.add(Generator::l(l, l, I, J), -1);
      return out;
    case Kind::R:
      out.add(Generator::s(I, J), 1);
      for (int j = 1; j <= p.lambda; ++j) out.add(Generator::s(post(I, j), post(J, j)), -1);
      for (int l = 2; l <= p.lambda_f; ++l) out.add(Generator::r(l, l, I, J), -1);
      return out;
    case Kind::F:
      break;
    case Kind::S:
      return Element(g);
  }
  const int l1 = g.fl[0], l2 = g.fl[1], l3 = g.fl[2], l4 = g.fl[3];
  const bool left_unit = l1 + l2 <= 2;
  const bool right_unit = l3 + l4 <= 2;
  if (!left_unit) {
    out.add(Generator::l(l1, l2, I, J), 1);
    for (int j = 1; j <= p.lambda; ++j) out.add(Generator::l(l1, l2, post(I, j), post(J, j)), -1);
    for (int l = 2; l <= p.lambda_f; ++l) out.add(Generator::f(l1, l2, l, l, I, J), -1);
    return out;
  }
  if (!right_unit) {
    out.add(Generator::r(l3, l4, I, J), 1);
    for (int i = 1; i <= p.lambda; ++i) out.add(Generator::r(l3, l4, pre(i, I), pre(i, J)), -1);
    for (int l = 2; l <= p.lambda_f; ++l) out.add(Generator::f(l, l, l3, l4, I, J), -1);
    return out;
  }
  out.add(Generator::s(I, J), 1);
  for (int i = 1; i <= p.lambda; ++i) {
    out.add(Generator::s(pre(i, I), pre(i, J)), -1);
    out.add(Generator::s(post(I, i), post(J, i)), -1);
    for (int j = 1; j <= p.lambda; ++j) out.add(Generator::s(post(pre(i, I), j), post(pre(i, J), j)), 1);
  }
  for (int l = 2; l <= p.lambda_f; ++l) {
    out.add(Generator::l(l, l, I, J), -1);
    out.add(Generator::r(l, l, I, J), -1);
    for (int j = 1; j <= p.lambda; ++j) {
      out.add(Generator::l(l, l, post(I, j), post(J, j)), 1);
      out.add(Generator::r(l, l, pre(j, I), pre(j, J)), 1);
    }
    for (int m = 2; m <= p.lambda_f; ++m) out.add(Generator::f(l, l, m, m, I, J), 1);
  }
  return out;
}

// One peeling step for a generator outside B4.
Element rewrite_B4_step(const Generator& g, const Params& p) {
  const Seq& I = g.upper;
  const Seq& J = g.lower;
  Element out;
  switch (g.kind) {
    case Kind::L: {
      Seq A = slice(I, 0, I.size() - 1), B = slice(J, 0, J.size() - 1);
      out.add(Generator::l(g.fl[0], g.fl[1], A, B), 1);
      for (int j = 2; j <= p.lambda; ++j) out.add(Generator::l(g.fl[0], g.fl[1], post(A, j), post(B, j)), -1);
      for (int l = 1; l <= p.lambda_f; ++l) out.add(Generator::f(g.fl[0], g.fl[1], l, l, A, B), -1);
      return out;
    }
    case Kind::R: {
      if (!I.empty() && !J.empty()) {
        Seq A = slice(I, 1, I.size()), B = slice(J, 1, J.size());
        out.add(Generator::r(g.fl[0], g.fl[1], A, B), 1);
        for (int i = 2; i <= p.lambda; ++i) out.add(Generator::r(g.fl[0], g.fl[1], pre(i, A), pre(i, B)), -1);
        for (int l = 1; l <= p.lambda_f; ++l) out.add(Generator::f(l, l, g.fl[0], g.fl[1], A, B), -1);
        return out;
      }
      out.add(Generator::s(I, J), 1);
      for (int j = 1; j <= p.lambda; ++j) out.add(Generator::s(post(I, j), post(J, j)), -1);
      for (int l = 2; l <= p.lambda_f; ++l) out.add(Generator::r(l, l, I, J), -1);
      return out;
    }
    case Kind::S: {
      if (I.front() == 1 && J.front() == 1) {
        Seq A = slice(I, 1, I.size()), B = slice(J, 1, J.size());
        out.add(Generator::s(A, B), 1);
        for (int i = 2; i <= p.lambda; ++i) out.add(Generator::s(pre(i, A), pre(i, B)), -1);
        for (int l = 1; l <= p.lambda_f; ++l) out.add(Generator::l(l, l, A, B), -1);
        return out;
      }
      Seq A = slice(I, 0, I.size() - 1), B = slice(J, 0, J.size() - 1);
      out.add(Generator::s(A, B), 1);
      for (int j = 2; j <= p.lambda; ++j) out.add(Generator::s(post(A, j), post(B, j)), -1);
      for (int l = 1; l <= p.lambda_f; ++l) out.add(Generator::r(l, l, A, B), -1);
      return out;
    }
    case Kind::F:
      break;
  }
  return Element(g);
}

struct B4Entry {
  Element value;
  int depth = 0;
};

class B4Cache {
 public:
  const B4Entry& get(const Generator& g, const Params& p) {
    {
      std::shared_lock lock(mu_);
      auto it = tables_.find({p.lambda, p.lambda_f});
      if (it != tables_.end()) {
        auto jt = it->second.find(g);
        if (jt != it->second.end()) return jt->second;
      }
    }
    B4Entry entry;
    if (in_B4(g)) {
      entry.value = Element(g);
    } else {
      for (const auto& [h, c] : rewrite_B4_step(g, p)) {
        const B4Entry& sub = get(h, p);
        entry.value.add(sub.value, c);
        entry.depth = std::max(entry.depth, sub.depth + 1);
      }
      if (entry.depth == 0) entry.depth = 1;
    }
    std::unique_lock lock(mu_);
    auto& table = tables_[{p.lambda, p.lambda_f}];
    return table.emplace(g, std::move(entry)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<std::pair<int, int>, std::map<Generator, B4Entry, GenLess>> tables_;
};

B4Cache& b4_cache() {
  static B4Cache cache;
  return cache;
}

}  // namespace

Element to_B0(const Element& e, const Params& p) {
  check_params(e, p);
  Element out;
  for (const auto& [g, c] : e) {
    if (in_B0(g))
      out.add(g, c);
    else
      out.add(rewrite_B0(g, p), c);
  }
  return out;
}

Element to_B4(const Element& e, const Params& p) {
  check_params(e, p);
  Element out;
  for (const auto& [g, c] : e) out.add(b4_cache().get(g, p).value, c);
  return out;
}

CanonicalElement canonical(const Element& e, BasisTag basis, const Params& p) {
  return {basis, basis == BasisTag::B0 ? to_B0(e, p) : to_B4(e, p)};
}

int to_B4_depth(const Generator& g, const Params& p) {
  check_params(g, p);
  return b4_cache().get(g, p).depth;
}

std::vector<Generator> all_generators(const Params& p, int max_size) {
  std::vector<Generator> out;
  std::vector<Seq> seqs = sequences_up_to(p.lambda, max_size);
  for (const Seq& I : seqs) {
    for (const Seq& J : seqs) {
      if (static_cast<int>(I.size() + J.size()) > max_size) continue;
      for (int a = 1; a <= p.lambda_f; ++a)
        for (int b = 1; b <= p.lambda_f; ++b) {
          for (int c = 1; c <= p.lambda_f; ++c)
            for (int d = 1; d <= p.lambda_f; ++d) out.push_back(Generator::f(a, b, c, d, I, J));
          out.push_back(Generator::l(a, b, I, J));
          out.push_back(Generator::r(a, b, I, J));
        }
      out.push_back(Generator::s(I, J));
    }
  }
  return out;
}

bool independence_check_B0(int max_size, int max_len, const Params& p) {
  std::vector<Chain> chains = enumerate_chains(p, max_len);
  std::map<std::pair<std::size_t, Chain>, long, bool (*)(const std::pair<std::size_t, Chain>&,
                                                          const std::pair<std::size_t, Chain>&)>
      coords([](const std::pair<std::size_t, Chain>& x, const std::pair<std::size_t, Chain>& y) {
        if (x.first != y.first) return x.first < y.first;
        return chain_compare(x.second, y.second) < 0;
      });
  std::vector<SparseIntRow> rows;
  for (const Generator& g : all_generators(p, max_size)) {
    if (!in_B0(g)) continue;
    SparseIntRow row;
    for (std::size_t ci = 0; ci < chains.size(); ++ci) {
      for (const auto& [out, c] : act(g, chains[ci])) {
        auto key = std::make_pair(ci, out);
        auto it = coords.find(key);
        long col = it != coords.end() ? it->second : coords.emplace(key, static_cast<long>(coords.size())).first->second;
        row[col] = c.get_num();
      }
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  return rank_fraction_free(std::move(rows)) == n;
}

}  // namespace osa
