// Index sequences, generators of the open string algebra, elements with
// exact rational coefficients, the anti-involution and the grading.
#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace osa {

using Q = mpq_class;
using Seq = std::vector<int>;

/// Number of adjoint colors (lambda) and fundamental flavors (lambda_f).
struct Params {
  int lambda = 1;
  int lambda_f = 1;

  Params() = default;
  Params(int l, int lf);
  bool operator==(const Params&) const = default;
};

/// Raised when an index violates the bounds of a Params.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Length first, then lexicographic at the first differing entry.
std::strong_ordering seq_compare(const Seq& a, const Seq& b);

Seq concat(const Seq& a, const Seq& b);
Seq concat(const Seq& a, const Seq& b, const Seq& c);
Seq slice(const Seq& a, std::size_t from, std::size_t to);
bool starts_with(const Seq& s, const Seq& prefix);
bool ends_with(const Seq& s, const Seq& suffix);

/// All sequences over [1, lambda] of exactly the given length, ascending.
std::vector<Seq> sequences_of_length(int lambda, int length);
/// All sequences of length <= max_len in ascending seq_compare order.
std::vector<Seq> sequences_up_to(int lambda, int max_len);

/// F: Xi-bar (x) f (x) Xi, L: Xi-bar (x) l, R: r (x) Xi, S: sigma.
enum class Kind { F = 0, L = 1, R = 2, S = 3 };

const char* kind_name(Kind k);

struct Generator {
  Kind kind = Kind::S;
  std::array<int, 4> fl{0, 0, 0, 0};
  Seq upper;
  Seq lower;

  static Generator f(int l1, int l2, int l3, int l4, Seq upper, Seq lower);
  static Generator l(int l1, int l2, Seq upper, Seq lower);
  static Generator r(int l1, int l2, Seq upper, Seq lower);
  static Generator s(Seq upper, Seq lower);

  int size() const { return static_cast<int>(upper.size() + lower.size()); }
  bool operator==(const Generator&) const = default;
};

int grade(const Generator& g);

/// Total order on generators: grade, size, lower sequence, upper sequence,
/// kind (sigma > r > l > f), then flavor tie-breaks.
std::strong_ordering gen_compare(const Generator& x, const Generator& y);

struct GenLess {
  bool operator()(const Generator& a, const Generator& b) const {
    return gen_compare(a, b) < 0;
  }
};

/// Throws RangeError if any index is outside the bounds of p.
void check_params(const Generator& g, const Params& p);

Generator omega(const Generator& g);

std::string render_seq(const Seq& s);
std::string render(const Generator& g);
std::string render_rational(const Q& q);

/// Finite linear combination of generators; zero coefficients are never stored.
class Element {
 public:
  using Map = std::map<Generator, Q, GenLess>;

  Element() = default;
  Element(const Generator& g, const Q& c = 1);

  void add(const Generator& g, const Q& c);
  void add(const Element& e, const Q& c = 1);

  Q coeff(const Generator& g) const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Q& c);

  bool operator==(const Element& o) const;

 private:
  Map terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(const Q& c, Element a);

Element omega(const Element& e);
void check_params(const Element& e, const Params& p);

/// Canonical text: terms ascending by gen_compare, "p/q*" coefficients,
/// unit coefficients elided, "0" for the zero element.
std::string render(const Element& e);

/// Generic helper shared by chain and tensor states.
/// Values are kept canonical so that equality of maps is exact.
template <class Key, class Less>
void add_term(std::map<Key, Q, Less>& m, const Key& k, const Q& c) {
  Q v = c;
  v.canonicalize();
  if (v == 0) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, std::move(v));
    return;
  }
  it->second += v;
  if (it->second == 0) m.erase(it);
}

}  // namespace osa
