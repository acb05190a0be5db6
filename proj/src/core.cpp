#include "osa/core.hpp"

#include <algorithm>
#include <sstream>

namespace osa {

Params::Params(int l, int lf) : lambda(l), lambda_f(lf) {
  if (l < 1 || lf < 1) throw std::invalid_argument("lambda and lambda_f must be positive");
}

std::strong_ordering seq_compare(const Seq& a, const Seq& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

Seq concat(const Seq& a, const Seq& b) {
  Seq out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Seq concat(const Seq& a, const Seq& b, const Seq& c) { return concat(concat(a, b), c); }

Seq slice(const Seq& a, std::size_t from, std::size_t to) {
  return Seq(a.begin() + static_cast<std::ptrdiff_t>(from),
             a.begin() + static_cast<std::ptrdiff_t>(to));
}

bool starts_with(const Seq& s, const Seq& prefix) {
  return prefix.size() <= s.size() && std::equal(prefix.begin(), prefix.end(), s.begin());
}

bool ends_with(const Seq& s, const Seq& suffix) {
  return suffix.size() <= s.size() &&
         std::equal(suffix.begin(), suffix.end(), s.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

std::vector<Seq> sequences_of_length(int lambda, int length) {
  std::vector<Seq> out;
  Seq cur(static_cast<std::size_t>(length), 1);
  while (true) {
    out.push_back(cur);
    int i = length - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == lambda) {
      cur[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<Seq> sequences_up_to(int lambda, int max_len) {
  std::vector<Seq> out;
  for (int n = 0; n <= max_len; ++n) {
    auto layer = sequences_of_length(lambda, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::F: return "I";
    case Kind::L: return "II";
    case Kind::R: return "III";
    case Kind::S: return "IV";
  }
  return "?";
}

Generator Generator::f(int l1, int l2, int l3, int l4, Seq upper, Seq lower) {
  return Generator{Kind::F, {l1, l2, l3, l4}, std::move(upper), std::move(lower)};
}

Generator Generator::l(int l1, int l2, Seq upper, Seq lower) {
  return Generator{Kind::L, {l1, l2, 0, 0}, std::move(upper), std::move(lower)};
}

Generator Generator::r(int l1, int l2, Seq upper, Seq lower) {
  return Generator{Kind::R, {l1, l2, 0, 0}, std::move(upper), std::move(lower)};
}

Generator Generator::s(Seq upper, Seq lower) {
  return Generator{Kind::S, {0, 0, 0, 0}, std::move(upper), std::move(lower)};
}

int grade(const Generator& g) {
  return static_cast<int>(g.upper.size()) - static_cast<int>(g.lower.size());
}

std::strong_ordering gen_compare(const Generator& x, const Generator& y) {
  if (auto c = grade(x) <=> grade(y); c != 0) return c;
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  if (auto c = seq_compare(x.lower, y.lower); c != 0) return c;
  if (auto c = seq_compare(x.upper, y.upper); c != 0) return c;
  if (auto c = static_cast<int>(x.kind) <=> static_cast<int>(y.kind); c != 0) return c;
  switch (x.kind) {
    case Kind::F:
      if (auto c = seq_compare({x.fl[1], x.fl[3]}, {y.fl[1], y.fl[3]}); c != 0) return c;
      return seq_compare({x.fl[0], x.fl[2]}, {y.fl[0], y.fl[2]});
    case Kind::L:
    case Kind::R:
      if (auto c = x.fl[1] <=> y.fl[1]; c != 0) return c;
      return x.fl[0] <=> y.fl[0];
    case Kind::S:
      break;
  }
  return std::strong_ordering::equal;
}

namespace {

int flavor_count(Kind k) {
  switch (k) {
    case Kind::F: return 4;
    case Kind::L:
    case Kind::R: return 2;
    case Kind::S: return 0;
  }
  return 0;
}

}  // namespace

void check_params(const Generator& g, const Params& p) {
  for (int i = 0; i < flavor_count(g.kind); ++i) {
    int v = g.fl[static_cast<std::size_t>(i)];
    if (v < 1 || v > p.lambda_f)
      throw RangeError("flavor index " + std::to_string(v) + " outside [1, Lambda_F=" +
                       std::to_string(p.lambda_f) + "] in " + render(g));
  }
  for (const Seq* s : {&g.upper, &g.lower})
    for (int v : *s)
      if (v < 1 || v > p.lambda)
        throw RangeError("color index " + std::to_string(v) + " outside [1, Lambda=" +
                         std::to_string(p.lambda) + "] in " + render(g));
}

Generator omega(const Generator& g) {
  Generator out = g;
  std::swap(out.upper, out.lower);
  std::swap(out.fl[0], out.fl[1]);
  std::swap(out.fl[2], out.fl[3]);
  return out;
}

std::string render_seq(const Seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

std::string render(const Generator& g) {
  std::ostringstream os;
  switch (g.kind) {
    case Kind::F:
      os << "f(" << g.fl[0] << ',' << g.fl[1] << ';' << g.fl[2] << ',' << g.fl[3] << ')';
      break;
    case Kind::L: os << "l(" << g.fl[0] << ',' << g.fl[1] << ')'; break;
    case Kind::R: os << "r(" << g.fl[0] << ',' << g.fl[1] << ')'; break;
    case Kind::S: os << 's'; break;
  }
  os << '[' << render_seq(g.upper) << '|' << render_seq(g.lower) << ']';
  return os.str();
}

std::string render_rational(const Q& q) {
  Q c = q;
  c.canonicalize();
  return c.get_str();
}

Element::Element(const Generator& g, const Q& c) { add(g, c); }

void Element::add(const Generator& g, const Q& c) { add_term(terms_, g, c); }

void Element::add(const Element& e, const Q& c) {
  if (c == 0) return;
  for (const auto& [g, v] : e.terms_) add(g, v * c);
}

Q Element::coeff(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Q(0) : it->second;
}

Element& Element::operator+=(const Element& o) {
  add(o, 1);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  add(o, -1);
  return *this;
}

Element& Element::operator*=(const Q& c) {
  Q k = c;
  k.canonicalize();
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= k;
  return *this;
}

bool Element::operator==(const Element& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (!(a->first == b->first) || a->second != b->second) return false;
  return true;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= -1; }
Element operator*(const Q& c, Element a) { return a *= c; }

Element omega(const Element& e) {
  Element out;
  for (const auto& [g, c] : e) out.add(omega(g), c);
  return out;
}

void check_params(const Element& e, const Params& p) {
  for (const auto& kv : e) check_params(kv.first, p);
}

std::string render(const Element& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : e) {
    Q mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += render_rational(mag) + "*";
    out += render(g);
    first = false;
  }
  return out;
}

}  // namespace osa
