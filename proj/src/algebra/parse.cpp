#include "afh/algebra/parse.hpp"

#include <cctype>

namespace afh {

namespace {

template <class K>
class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, bool complex_vars)
      : text_(text), nvars_(nvars), complex_(complex_vars) {}

  Poly<K> parse_all() {
    Poly<K> p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  Poly<K> expression() {
    skip_ws();
    Poly<K> acc(nvars_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly<K> t = term();
    acc += negate ? -t : t;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly<K> next = term();
      acc += c == '-' ? -next : next;
    }
    return acc;
  }

  std::size_t pos() const { return pos_; }
  std::string_view text() const { return text_; }

  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

 private:
  Poly<K> term() {
    Poly<K> acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'z' ||
           c == 'c' || c == 'i';
  }

  Poly<K> factor() {
    skip_ws();
    char c = peek();
    Poly<K> base(nvars_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Poly<K>::constant(nvars_, K(number()));
    } else if (c == '(') {
      ++pos_;
      base = expression();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (c == 'i') {
      if constexpr (ScalarTraits<K>::is_complex) {
        ++pos_;
        base = Poly<K>::constant(nvars_, GaussRational::i());
      } else {
        fail("imaginary unit in a real polynomial");
      }
    } else if (c == 'x' || c == 'z' || c == 'c') {
      base = Poly<K>::variable(nvars_, variable());
    } else if (c == '\0') {
      fail("unexpected end of input");
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(e);
    }
    return base;
  }

  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    Integer num(std::string(text_.substr(start, pos_ - start)), 10);
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t ds = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (ds == pos_) fail("expected denominator");
      Integer den(std::string(text_.substr(ds, pos_ - ds)), 10);
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  std::size_t variable() {
    char kind = peek();
    std::size_t at = pos_;
    ++pos_;
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) {
      pos_ = at;
      fail("expected variable index");
    }
    std::size_t idx = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (idx == 0) {
      pos_ = at;
      fail("variable indices start at 1");
    }
    std::size_t limit = complex_ ? nvars_ / 2 : nvars_;
    if ((kind == 'x') == complex_) {
      pos_ = at;
      fail(std::string("variable '") + kind + "' not allowed here");
    }
    if (idx > limit) {
      pos_ = at;
      fail("variable index " + std::to_string(idx) + " exceeds " + std::to_string(limit));
    }
    return kind == 'c' ? limit + idx - 1 : idx - 1;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t nvars_;
  bool complex_;
  std::size_t pos_ = 0;
};

}  // namespace

RPoly parse_real_poly(std::string_view text, std::size_t nvars) {
  return Parser<Rational>(text, nvars, false).parse_all();
}

CPoly parse_complex_poly(std::string_view text, std::size_t n) {
  return Parser<GaussRational>(text, 2 * n, true).parse_all();
}

std::pair<RPoly, int> parse_constraint(std::string_view text, std::size_t nvars) {
  auto op = text.find_first_of("<>");
  if (op == std::string_view::npos) throw ParseError("constraint needs '>' or '<'", 1, 1);
  RPoly lhs = parse_real_poly(text.substr(0, op), nvars);
  RPoly rhs;
  try {
    rhs = parse_real_poly(text.substr(op + 1), nvars);
  } catch (const ParseError& e) {
    throw ParseError(std::string("constraint right-hand side: ") + e.what(), e.line(),
                     e.column() + static_cast<int>(op) + 1);
  }
  int sign = text[op] == '>' ? 1 : -1;
  return {lhs - rhs, sign};
}

}  // namespace afh
