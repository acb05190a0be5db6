#include "osa/parse.hpp"

#include <cctype>

namespace osa {

ParseError::ParseError(const std::string& what, int column)
    : std::invalid_argument("column " + std::to_string(column) + ": " + what), column_(column) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Params& p) : s_(text), p_(p) {}

  Expression run() {
    Expression out;
    skip();
    if (at_end()) fail("empty expression");
    bool have_kind = false;
    bool first = true;
    while (true) {
      skip();
      Q sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      term(out, sign, have_kind);
      skip();
      if (at_end()) break;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  int column() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, column()); }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool is_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  mpz_class integer() {
    skip();
    if (!is_digit()) fail("expected integer");
    std::size_t start = pos_;
    while (is_digit()) ++pos_;
    return mpz_class(s_.substr(start, pos_ - start));
  }

  int small_int() {
    const int col = (skip(), column());
    mpz_class v = integer();
    if (!v.fits_sint_p()) throw ParseError("integer too large", col);
    return static_cast<int>(v.get_si());
  }

  int flavor() {
    skip();
    const int col = column();
    int v = small_int();
    if (v < 1 || v > p_.lambda_f)
      throw RangeError("column " + std::to_string(col) + ": flavor index " + std::to_string(v) +
                       " outside [1, Lambda_F=" + std::to_string(p_.lambda_f) + "]");
    return v;
  }

  Seq seq(char terminator) {
    Seq out;
    skip();
    if (peek() == terminator) return out;
    while (true) {
      skip();
      const int col = column();
      int v = small_int();
      if (v < 1 || v > p_.lambda)
        throw RangeError("column " + std::to_string(col) + ": color index " + std::to_string(v) +
                         " outside [1, Lambda=" + std::to_string(p_.lambda) + "]");
      out.push_back(v);
      skip();
      if (peek() != ',') break;
      ++pos_;
    }
    return out;
  }

  std::pair<Seq, Seq> indices() {
    expect('[');
    Seq up = seq('|');
    expect('|');
    Seq lo = seq(']');
    expect(']');
    return {std::move(up), std::move(lo)};
  }

  bool keyword(const char* word) {
    std::size_t n = std::char_traits<char>::length(word);
    if (s_.compare(pos_, n, word) != 0) return false;
    pos_ += n;
    return true;
  }

  void term(Expression& out, const Q& sign, bool& have_kind) {
    skip();
    Q coeff = sign;
    if (is_digit()) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        const int col = column();
        den = integer();
        if (den == 0) throw ParseError("zero denominator", col);
      }
      Q c(num, den);
      c.canonicalize();
      coeff *= c;
      skip();
      if (at_end() || peek() == '+' || peek() == '-') {
        if (c != 0) fail("expected '*'");
        return;  // a literal zero term
      }
      expect('*');
      skip();
    }
    const int col = column();
    const bool chain = s_.compare(pos_, 5, "chain") == 0;
    if (have_kind && chain != out.is_chain) throw ParseError("cannot mix chains and generators", col);
    have_kind = true;
    out.is_chain = chain;
    if (keyword("chain")) {
      expect('(');
      int a = flavor();
      expect(',');
      int b = flavor();
      expect(')');
      expect('[');
      Seq body = seq(']');
      expect(']');
      add_term(out.chains, Chain{a, std::move(body), b}, coeff);
    } else if (keyword("f")) {
      expect('(');
      int l1 = flavor();
      expect(',');
      int l2 = flavor();
      expect(';');
      int l3 = flavor();
      expect(',');
      int l4 = flavor();
      expect(')');
      auto [up, lo] = indices();
      out.element.add(Generator::f(l1, l2, l3, l4, up, lo), coeff);
    } else if (peek() == 'l' || peek() == 'r') {
      const bool left = peek() == 'l';
      ++pos_;
      expect('(');
      int l1 = flavor();
      expect(',');
      int l2 = flavor();
      expect(')');
      auto [up, lo] = indices();
      out.element.add(left ? Generator::l(l1, l2, up, lo) : Generator::r(l1, l2, up, lo), coeff);
    } else if (keyword("s")) {
      auto [up, lo] = indices();
      out.element.add(Generator::s(up, lo), coeff);
    } else {
      fail("expected f, l, r, s or chain");
    }
  }

  const std::string& s_;
  const Params& p_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(const std::string& text, const Params& p) { return Parser(text, p).run(); }

Element parse_element(const std::string& text, const Params& p) {
  Expression e = parse(text, p);
  if (e.is_chain) throw ParseError("expected generators, found chains", 1);
  return e.element;
}

ChainState parse_chains(const std::string& text, const Params& p) {
  Expression e = parse(text, p);
  if (!e.is_chain && !e.element.empty()) throw ParseError("expected chains, found generators", 1);
  return e.chains;
}

}  // namespace osa
