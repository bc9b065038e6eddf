#include "lpi/text.hpp"

#include <cctype>

#include "lpi/errors.hpp"

namespace lpi {

namespace {

void append_term(std::string& out, const Int& c, int i, int j, const std::string& xvar) {
  const bool neg = c < 0;
  Int a = abs(c);
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  std::string body;
  if (i > 0) body += i == 1 ? xvar : xvar + "^" + std::to_string(i);
  if (j > 0) {
    if (!body.empty()) body += "*";
    body += j == 1 ? std::string("q") : "q^" + std::to_string(j);
  }
  if (body.empty()) {
    out += a.get_str();
  } else if (a == 1) {
    out += body;
  } else {
    out += a.get_str() + "*" + body;
  }
}

} // namespace

std::string to_string(const PolyQ& p) {
  std::string out;
  for (int j = 0; j <= p.degree(); ++j)
    if (p.coeff(j) != 0) append_term(out, p.coeff(j), 0, j, "x");
  return out.empty() ? "0" : out;
}

std::string to_string(const BiPoly& p, const std::string& xvar) {
  std::string out;
  for (int i = 0; i <= p.deg_x(); ++i) {
    const PolyQ& c = p.coeff(i);
    for (int j = 0; j <= c.degree(); ++j)
      if (c.coeff(j) != 0) append_term(out, c.coeff(j), i, j, xvar);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const RationalQ& r) {
  if (r.den().is_one()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::string to_string(const BiRat& r, const std::string& xvar) {
  if (r.den().is_one()) return to_string(r.num(), xvar);
  return "(" + to_string(r.num(), xvar) + ")/(" + to_string(r.den(), xvar) + ")";
}

std::string to_string(const SeriesQ& s) {
  std::string out = "[";
  for (int i = 0; i < s.order(); ++i) {
    if (i) out += ", ";
    out += s[i].get_str();
  }
  return out + "]";
}

namespace {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  BiRat parse() {
    BiRat v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"",
                     static_cast<long>(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return s_.substr(start, pos_ - start);
  }
  int exponent() {
    bool paren = eat('(');
    bool neg = eat('-');
    long e = std::stol(digits());
    if (paren && !eat(')')) fail("expected ')'");
    return static_cast<int>(neg ? -e : e);
  }

  BiRat expr() {
    BiRat v;
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (!first && !eat('+')) {
        break;
      } else if (first) {
        eat('+');
      }
      BiRat t = term();
      if (neg) v -= t;
      else v += t;
      first = false;
    }
    return v;
  }

  BiRat term() {
    BiRat v = power();
    while (true) {
      if (eat('*')) v *= power();
      else if (eat('/')) {
        BiRat d = power();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else break;
    }
    return v;
  }

  BiRat power() {
    BiRat base = atom();
    if (eat('^')) return base.pow(exponent());
    return base;
  }

  BiRat atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BiRat v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return BiRat(BiPoly::monomial(Int(1), 0, 1));
    }
    if (c == 'x' || c == 'S') {
      ++pos_;
      return BiRat(BiPoly::monomial(Int(1), 1, 0));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return BiRat(BiPoly(PolyQ(Int(digits()))));
    fail("unexpected character");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

} // namespace

BiRat parse_birat(const std::string& text) { return Parser(text).parse(); }

BiPoly parse_bipoly(const std::string& text) {
  BiRat r = parse_birat(text);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial: " + text);
  return r.num();
}

RationalQ parse_ratq(const std::string& text) {
  BiRat r = parse_birat(text);
  if (r.num().deg_x() > 0 || r.den().deg_x() > 0)
    throw ParseError("expected a function of q alone: " + text);
  return RationalQ(r.num().coeff(0), r.den().coeff(0));
}

PolyQ parse_polyq(const std::string& text) {
  RationalQ r = parse_ratq(text);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial in q: " + text);
  return r.num();
}

} // namespace lpi
