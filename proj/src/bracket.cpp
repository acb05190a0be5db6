#include "osa/bracket.hpp"

#include <stdexcept>

#include "osa/basis.hpp"

namespace osa {

namespace {

// A generator is a replacement rule on the extended word a.K.b of a chain,
// where the two flavors are boundary letters of their own alphabets.
constexpr int kRightBase = 1 << 20;

int left_letter(int flavor) { return -flavor; }
int right_letter(int flavor) { return -(kRightBase + flavor); }
bool is_left(int x) { return x < 0 && x > -kRightBase; }
bool is_right(int x) { return x <= -kRightBase; }
int left_flavor(int x) { return -x; }
int right_flavor(int x) { return -x - kRightBase; }

struct Pattern {
  Seq in;
  Seq out;
};

Pattern to_pattern(const Generator& g) {
  switch (g.kind) {
    case Kind::F:
      return {concat({left_letter(g.fl[1])}, g.lower, {right_letter(g.fl[3])}),
              concat({left_letter(g.fl[0])}, g.upper, {right_letter(g.fl[2])})};
    case Kind::L:
      return {concat({left_letter(g.fl[1])}, g.lower), concat({left_letter(g.fl[0])}, g.upper)};
    case Kind::R:
      return {concat(g.lower, {right_letter(g.fl[1])}), concat(g.upper, {right_letter(g.fl[0])})};
    case Kind::S:
      break;
  }
  return {g.lower, g.upper};
}

Generator from_pattern(const Seq& in, const Seq& out) {
  const bool left = is_left(in.front());
  const bool right = is_right(in.back());
  const std::size_t ni = in.size();
  const std::size_t no = out.size();
  if (left && right)
    return Generator::f(left_flavor(out.front()), left_flavor(in.front()), right_flavor(out.back()),
                        right_flavor(in.back()), slice(out, 1, no - 1), slice(in, 1, ni - 1));
  if (left)
    return Generator::l(left_flavor(out.front()), left_flavor(in.front()), slice(out, 1, no), slice(in, 1, ni));
  if (right)
    return Generator::r(right_flavor(out.back()), right_flavor(in.back()), slice(out, 0, no - 1),
                        slice(in, 0, ni - 1));
  return Generator::s(out, in);
}

// Sum over placements of A's input window that share at least one letter
// with the output window of B, i.e. the connected part of A after B.
void compose_overlaps(const Pattern& a, const Pattern& b, const Q& sign, Element& acc) {
  const long na = static_cast<long>(a.in.size());
  const long nb = static_cast<long>(b.out.size());
  for (long d = 1 - na; d < nb; ++d) {
    bool ok = true;
    for (long x = std::max(d, 0L); x < std::min(d + na, nb) && ok; ++x)
      ok = a.in[static_cast<std::size_t>(x - d)] == b.out[static_cast<std::size_t>(x)];
    if (!ok) continue;
    Seq in, out;
    if (d < 0) in = slice(a.in, 0, static_cast<std::size_t>(-d));
    in.insert(in.end(), b.in.begin(), b.in.end());
    if (d + na > nb) {
      Seq tail = slice(a.in, static_cast<std::size_t>(nb - d), a.in.size());
      in.insert(in.end(), tail.begin(), tail.end());
    }
    if (d > 0) out = slice(b.out, 0, static_cast<std::size_t>(d));
    out.insert(out.end(), a.out.begin(), a.out.end());
    if (nb > d + na) {
      Seq tail = slice(b.out, static_cast<std::size_t>(d + na), b.out.size());
      out.insert(out.end(), tail.begin(), tail.end());
    }
    acc.add(from_pattern(in, out), sign);
  }
}

Element bracket_windows(const Generator& x, const Generator& y) {
  Element acc;
  Pattern px = to_pattern(x);
  Pattern py = to_pattern(y);
  compose_overlaps(px, py, Q(1), acc);
  compose_overlaps(py, px, Q(-1), acc);
  return acc;
}

bool is_extended_sigma(const Generator& g) {
  return g.kind == Kind::S && (g.upper.empty() || g.lower.empty());
}

}  // namespace

const char* class_name(TriangularClass c) {
  switch (c) {
    case TriangularClass::Lowering: return "Lowering";
    case TriangularClass::Diagonal: return "Diagonal";
    case TriangularClass::Raising: return "Raising";
  }
  return "?";
}

Element expand_extended_sigma(const Generator& g, const Params& p) {
  if (!is_extended_sigma(g)) return Element(g);
  Element out;
  for (int i = 1; i <= p.lambda; ++i) out.add(Generator::s(concat({i}, g.upper), concat({i}, g.lower)), 1);
  for (int l = 1; l <= p.lambda_f; ++l) out.add(Generator::l(l, l, g.upper, g.lower), 1);
  return out;
}

Element bracket(const Generator& a, const Generator& b, const Params& p) {
  check_params(a, p);
  check_params(b, p);
  if (is_extended_sigma(a) || is_extended_sigma(b)) {
    Element out;
    for (const auto& [x, cx] : expand_extended_sigma(a, p))
      for (const auto& [y, cy] : expand_extended_sigma(b, p)) out.add(bracket_windows(x, y), cx * cy);
    return out;
  }
  return bracket_windows(a, b);
}

Element bracket(const Element& a, const Element& b, const Params& p) {
  Element out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add(bracket(x, y, p), cx * cy);
  return out;
}

TriangularClass classify(const Generator& g) {
  if (int gr = grade(g); gr != 0) return gr > 0 ? TriangularClass::Raising : TriangularClass::Lowering;
  Seq up = g.upper, low = g.lower;
  switch (g.kind) {
    case Kind::F:
      up.insert(up.end(), {g.fl[0], g.fl[2]});
      low.insert(low.end(), {g.fl[1], g.fl[3]});
      break;
    case Kind::L:
    case Kind::R:
      up.push_back(g.fl[0]);
      low.push_back(g.fl[1]);
      break;
    case Kind::S:
      break;
  }
  auto c = seq_compare(up, low);
  if (c > 0) return TriangularClass::Raising;
  if (c < 0) return TriangularClass::Lowering;
  return TriangularClass::Diagonal;
}

std::optional<RootData> is_root_vector(const Element& e, const Params& p) {
  if (e.size() != 1) return std::nullopt;
  const Generator& g = e.begin()->first;
  if (g.kind != Kind::F || classify(g) == TriangularClass::Diagonal) return std::nullopt;
  RootData data;
  for (const Generator& h : {Generator::f(g.fl[0], g.fl[0], g.fl[2], g.fl[2], g.upper, g.upper),
                             Generator::f(g.fl[1], g.fl[1], g.fl[3], g.fl[3], g.lower, g.lower)}) {
    Element br = bracket(Element(h), e, p);
    Q ratio = br.coeff(g) / e.begin()->second;
    if (br.size() > 1 || ratio.get_den() != 1)
      throw std::logic_error("Cartan element does not act diagonally on " + render(g));
    data.pairs.emplace_back(h, static_cast<int>(ratio.get_num().get_si()));
  }
  return data;
}

bool cartan_commutes(const Generator& g1, const Generator& g2, const Params& p) {
  if (classify(g1) != TriangularClass::Diagonal || classify(g2) != TriangularClass::Diagonal)
    throw std::invalid_argument("cartan_commutes needs two Diagonal generators");
  return to_B0(bracket(g1, g2, p), p).empty();
}

}  // namespace osa
