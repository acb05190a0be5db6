#include "osa/chains.hpp"

#include <algorithm>
#include <numeric>

namespace osa {

std::strong_ordering chain_compare(const Chain& x, const Chain& y) {
  if (auto c = seq_compare(x.body, y.body); c != 0) return c;
  if (auto c = x.a <=> y.a; c != 0) return c;
  return x.b <=> y.b;
}

bool ChainTupleLess::operator()(const std::vector<Chain>& x, const std::vector<Chain>& y) const {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), ChainLess{});
}

std::string render(const Chain& c) {
  return "chain(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")[" + render_seq(c.body) + "]";
}

namespace {

template <class Map, class KeyRender>
std::string render_sum(const Map& m, KeyRender key) {
  if (m.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : m) {
    Q mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += render_rational(mag) + "*";
    out += key(k);
    first = false;
  }
  return out;
}

}  // namespace

std::string render(const ChainState& s) {
  return render_sum(s, [](const Chain& c) { return render(c); });
}

std::string render(const TensorState& t) {
  return render_sum(t.terms, [](const std::vector<Chain>& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) out += " (x) ";
      out += render(tuple[i]);
    }
    return out;
  });
}

void check_params(const Chain& c, const Params& p) {
  if (c.a < 1 || c.a > p.lambda_f || c.b < 1 || c.b > p.lambda_f)
    throw RangeError("chain flavor outside [1, Lambda_F=" + std::to_string(p.lambda_f) + "] in " + render(c));
  for (int v : c.body)
    if (v < 1 || v > p.lambda)
      throw RangeError("chain color outside [1, Lambda=" + std::to_string(p.lambda) + "] in " + render(c));
}

ChainState chain_state(const Chain& c, const Q& coeff) {
  ChainState s;
  add_term(s, c, coeff);
  return s;
}

TensorState tensor_state(const std::vector<Chain>& tuple, const Q& coeff) {
  TensorState t;
  t.arity = static_cast<int>(tuple.size());
  add_term(t.terms, tuple, coeff);
  return t;
}

std::vector<Chain> enumerate_chains(const Params& p, int max_len) {
  std::vector<Chain> out;
  for (const Seq& body : sequences_up_to(p.lambda, max_len))
    for (int a = 1; a <= p.lambda_f; ++a)
      for (int b = 1; b <= p.lambda_f; ++b) out.push_back(Chain{a, body, b});
  return out;
}

ChainState act(const Generator& g, const Chain& c) {
  ChainState out;
  const std::size_t n = c.body.size();
  const std::size_t nj = g.lower.size();
  switch (g.kind) {
    case Kind::F:
      if (c.a == g.fl[1] && c.b == g.fl[3] && c.body == g.lower)
        add_term(out, Chain{g.fl[0], g.upper, g.fl[2]}, Q(1));
      break;
    case Kind::L:
      if (c.a == g.fl[1] && starts_with(c.body, g.lower))
        add_term(out, Chain{g.fl[0], concat(g.upper, slice(c.body, nj, n)), c.b}, Q(1));
      break;
    case Kind::R:
      if (c.b == g.fl[1] && ends_with(c.body, g.lower))
        add_term(out, Chain{c.a, concat(slice(c.body, 0, n - nj), g.upper), g.fl[0]}, Q(1));
      break;
    case Kind::S:
      if (nj > n) break;
      for (std::size_t pos = 0; pos + nj <= n; ++pos) {
        if (!std::equal(g.lower.begin(), g.lower.end(), c.body.begin() + static_cast<std::ptrdiff_t>(pos)))
          continue;
        add_term(out, Chain{c.a, concat(slice(c.body, 0, pos), g.upper, slice(c.body, pos + nj, n)), c.b},
                 Q(1));
      }
      break;
  }
  return out;
}

ChainState act(const Element& e, const ChainState& psi) {
  ChainState out;
  for (const auto& [c, cc] : psi)
    for (const auto& [g, gc] : e)
      for (const auto& [d, dc] : act(g, c)) add_term(out, d, cc * gc * dc);
  return out;
}

ChainState act(const Element& e, const ChainState& psi, const Params& p) {
  check_params(e, p);
  for (const auto& kv : psi) check_params(kv.first, p);
  return act(e, psi);
}

TensorState act_tensor(const Element& e, const TensorState& psi) {
  TensorState out;
  out.arity = psi.arity;
  for (const auto& [tuple, tc] : psi.terms) {
    for (std::size_t slot = 0; slot < tuple.size(); ++slot) {
      ChainState img = act(e, chain_state(tuple[slot]));
      for (const auto& [c, cc] : img) {
        auto next = tuple;
        next[slot] = c;
        add_term(out.terms, next, tc * cc);
      }
    }
  }
  return out;
}

namespace {

using Perm = std::vector<int>;

// All permutations of {0..d-1} that preserve each block, with their signs.
std::vector<std::pair<Perm, int>> block_group(const std::vector<std::vector<int>>& blocks, int d) {
  std::vector<std::pair<Perm, int>> group;
  Perm id(static_cast<std::size_t>(d));
  std::iota(id.begin(), id.end(), 0);
  group.emplace_back(id, 1);
  for (const auto& block : blocks) {
    std::vector<std::pair<Perm, int>> next;
    std::vector<int> images = block;
    std::sort(images.begin(), images.end());
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
          if (images[i] > images[j]) ++inversions;
      int sign = inversions % 2 ? -1 : 1;
      for (const auto& [perm, s] : group) {
        Perm composed = perm;
        for (std::size_t i = 0; i < block.size(); ++i)
          composed[static_cast<std::size_t>(block[i])] = images[i];
        next.emplace_back(composed, s * sign);
      }
    } while (std::next_permutation(images.begin(), images.end()));
    group = std::move(next);
  }
  return group;
}

TensorState permute_sum(const TensorState& psi, const std::vector<std::pair<Perm, int>>& group, bool signed_sum) {
  TensorState out;
  out.arity = psi.arity;
  for (const auto& [tuple, c] : psi.terms) {
    for (const auto& [perm, sign] : group) {
      std::vector<Chain> moved(tuple.size());
      for (std::size_t k = 0; k < tuple.size(); ++k) moved[static_cast<std::size_t>(perm[k])] = tuple[k];
      add_term(out.terms, moved, signed_sum ? c * sign : c);
    }
  }
  return out;
}

}  // namespace

TensorState young_project(const TensorState& psi, const Partition& gamma) {
  const int d = gamma.size();
  if (d != psi.arity)
    throw std::invalid_argument("partition size " + std::to_string(d) + " does not match tensor arity " +
                                std::to_string(psi.arity));
  std::vector<std::vector<int>> rows, cols;
  int slot = 0;
  for (int len : gamma.parts) {
    rows.emplace_back();
    for (int c = 0; c < len; ++c) {
      rows.back().push_back(slot);
      if (static_cast<int>(cols.size()) <= c) cols.emplace_back();
      cols[static_cast<std::size_t>(c)].push_back(slot);
      ++slot;
    }
  }
  TensorState sym = permute_sum(psi, block_group(rows, d), false);
  return permute_sum(sym, block_group(cols, d), true);
}

Q inner_chain(const ChainState& a, const ChainState& b) {
  Q total = 0;
  for (const auto& [c, v] : a) {
    auto it = b.find(c);
    if (it != b.end()) total += v * it->second;
  }
  return total;
}

Q inner_chain(const TensorState& a, const TensorState& b) {
  if (a.arity != b.arity) throw std::invalid_argument("tensor arity mismatch in inner product");
  Q total = 0;
  for (const auto& [t, v] : a.terms) {
    auto it = b.terms.find(t);
    if (it != b.terms.end()) total += v * it->second;
  }
  return total;
}

bool equal_on_chains(const Element& a, const Element& b, int max_len, const Params& p) {
  Element diff = a - b;
  if (diff.empty()) return true;
  for (const Chain& c : enumerate_chains(p, max_len))
    if (!act(diff, chain_state(c)).empty()) return false;
  return true;
}

TensorState lowest_weight_vector_concrete(const Partition& gamma, const Params& p) {
  std::vector<Chain> tuple;
  int row = 1;
  for (int len : gamma.parts) {
    HArg arg = arg_enumerate(row, p);
    for (int c = 0; c < len; ++c) tuple.push_back(Chain{arg.l1, arg.seq, arg.l2});
    ++row;
  }
  TensorState v = young_project(tensor_state(tuple), gamma);
  if (v.empty()) throw ZeroVectorError("Young symmetrizer annihilates the seed tensor");
  return v;
}

}  // namespace osa
