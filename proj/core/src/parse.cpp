#include "fano/parse.hpp"

#include <cctype>

#include "fano/error.hpp"

namespace fano {

std::optional<RingTag> ring_from_prefix(char c) {
  switch (c) {
    case 'x': return kPlaneForms;
    case 'd': return kPlaneOperators;
    case 'z': return kSpaceForms;
    case 'w': return kSpaceOperators;
    default: return std::nullopt;
  }
}

namespace {

struct Term {
  Rational coeff;
  Exponent exp{};
  std::size_t start = 0;
};

class Parser {
 public:
  Parser(std::string_view s, std::optional<RingTag> ring) : s_(s), ring_(ring) {}

  MultiPoly<Rational> run() {
    std::vector<Term> terms;
    skip();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(neg));
    for (skip(); pos_ < s_.size(); skip()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("expected '+' or '-', got '") + c + "'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    if (!ring_) {
      bool constant = true;
      for (const auto& t : terms) constant = constant && total_degree(t.exp) == 0;
      if (constant) throw ParseError(0, "a constant needs an explicit ring");
    }
    int degree = -1;
    std::size_t first = 0;
    for (const auto& t : terms) {
      if (degree < 0) {
        degree = total_degree(t.exp);
        first = t.start;
      } else if (total_degree(t.exp) != degree) {
        throw ParseError(t.start, "not homogeneous: term of degree " + std::to_string(total_degree(t.exp)) +
                                      " after a term of degree " + std::to_string(degree) + " at position " +
                                      std::to_string(first));
      }
    }
    MultiPoly<Rational> p(*ring_, degree);
    for (const auto& t : terms) p.add_term(t.exp, t.coeff);
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  mpz_class integer() {
    skip();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) throw ParseError(b, "expected an integer");
    return mpz_class(std::string(s_.substr(b, pos_ - b)));
  }

  Term term(bool neg) {
    skip();
    Term t;
    t.start = pos_;
    t.coeff = Rational(1);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer(), den = 1;
      skip();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      t.coeff = Rational(num, den);
      skip();
      need_factor = false;
      if (peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    if (need_factor) {
      factor(t.exp);
      for (skip(); peek() == '*'; skip()) {
        ++pos_;
        factor(t.exp);
      }
    }
    if (neg) t.coeff = -t.coeff;
    return t;
  }

  void factor(Exponent& e) {
    skip();
    const std::size_t at = pos_;
    auto ring = ring_from_prefix(peek());
    if (!ring) {
      if (pos_ >= s_.size()) throw ParseError(at, "unexpected end of input, expected a variable");
      throw ParseError(at, std::string("expected a variable, got '") + peek() + "'");
    }
    ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected a variable index");
    const int idx = peek() - '0';
    ++pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(at, "variable index out of range");
    if (!ring_) ring_ = ring;
    if (*ring != *ring_)
      throw ParseError(at, "variable " + ring->variable(idx) + " is not in the ring of " + ring_->variable(0) + "..");
    if (idx >= ring_->nvars) throw ParseError(at, "variable " + ring->variable(idx) + " out of range");
    int k = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      const std::size_t ep = pos_;
      mpz_class v = integer();
      if (v > 60) throw ParseError(ep, "exponent too large");
      k = static_cast<int>(v.get_si());
    }
    const int total = e[static_cast<std::size_t>(idx)] + k;
    if (total > 60) throw ParseError(at, "exponent too large");
    e[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(total);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<RingTag> ring_;
};

}  // namespace

MultiPoly<Rational> parse_poly(std::string_view text, RingTag ring) { return Parser(text, ring).run(); }

MultiPoly<Rational> parse_poly(std::string_view text) { return Parser(text, std::nullopt).run(); }

std::vector<std::string> split_polys(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  bool comment = false;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t\r");
    if (b != std::string::npos) out.push_back(cur.substr(b, cur.find_last_not_of(" \t\r") + 1 - b));
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n' || c == ';') {
      flush();
      comment = false;
    } else if (c == '#') {
      comment = true;
    } else if (!comment) {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace fano
