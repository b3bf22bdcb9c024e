#ifndef REESKIT_PARSE_HPP
#define REESKIT_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "reeskit/polynomial.hpp"

namespace reeskit {

/// Syntax error with a 1-based column into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

namespace detail {

template <class F>
class PolyParser {
 public:
  PolyParser(RingPtr<F> ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial<F> parse() {
    std::vector<Term<F>> terms;
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_ + 1);
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-' but found '") + peek() + "'", pos_ + 1);
      }
      terms.push_back(term(negative));
      first = false;
      skip();
    }
    return Polynomial<F>::from_terms(ring_, std::move(terms));
  }

 private:
  Term<F> term(bool negative) {
    const F& k = ring_->field();
    auto coeff = negative ? k.neg(k.one()) : k.one();
    Monomial mono(ring_->nvars());
    bool any = false;
    while (true) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = k.mul(coeff, number());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        std::string name = identifier();
        auto idx = ring_->find(name);
        if (!idx) throw ParseError("unknown variable '" + name + "'", start + 1);
        unsigned e = 1;
        skip();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip();
          e = exponent();
        }
        unsigned total = unsigned(mono[*idx]) + e;
        if (total > 65535) throw ParseError("exponent too large", start + 1);
        mono.set(*idx, static_cast<Exponent>(total));
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_ + 1);
      }
      any = true;
      skip();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (peek() == '*') {
        ++pos_;
        skip();
        if (at_end()) throw ParseError("dangling '*'", pos_ + 1);
      }
    }
    if (!any) throw ParseError("missing term", pos_ + 1);
    return {coeff, mono};
  }

  typename F::Element number() {
    std::size_t start = pos_;
    mpz_class num(digits());
    mpz_class den(1);
    skip();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected denominator", pos_ + 1);
      den = mpz_class(digits());
    }
    try {
      return ring_->field().from_fraction(num, den);
    } catch (const Error& e) {
      throw ParseError(std::string("coefficient not in field: ") + e.what(), start + 1);
    }
  }

  unsigned exponent() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_ + 1);
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 5 || std::stoul(d) > 65535) throw ParseError("exponent too large", start + 1);
    return static_cast<unsigned>(std::stoul(d));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  RingPtr<F> ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a +/- separated sum of coefficient*monomial words, e.g.
/// "x1^2 - 2*x2*x3" or "3/2 x1 x2". The '*' between factors is optional.
template <class F>
Polynomial<F> parse_poly(const RingPtr<F>& ring, std::string_view text) {
  return detail::PolyParser<F>(ring, text).parse();
}

enum class ArithOp { Add, Sub, Mul };

template <class F>
Polynomial<F> poly_arith(ArithOp op, const Polynomial<F>& p, const Polynomial<F>& q) {
  switch (op) {
    case ArithOp::Add:
      return p + q;
    case ArithOp::Sub:
      return p - q;
    case ArithOp::Mul:
      return p * q;
  }
  throw Error("unknown arithmetic operation");
}

}  // namespace reeskit

#endif  // REESKIT_PARSE_HPP
