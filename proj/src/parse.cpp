#include "pdquad/parse.hpp"

#include <cctype>

namespace pdquad {
namespace {

template <class F>
class PolynomialParser {
 public:
  PolynomialParser(const RingPtr<F>& ring, std::string_view text, int line, int column)
      : ring_(ring), text_(text), line_(line), column_(column) {}

  Polynomial<F> parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial<F> p = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  using Poly = Polynomial<F>;

  Poly expression() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      const bool minus = peek() == '-';
      ++pos_;
      Poly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * power();
    }
    return acc;
  }

  Poly power() {
    Poly base = factor();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 3 || std::stoi(digits) > kMaxExponent) fail_at(start, "exponent too large");
      base = base.pow(std::stoi(digits));
    }
    return base;
  }

  Poly factor() {
    skip_space();
    if (at_end()) fail("unexpected end of polynomial");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail(std::string("unexpected character '") + c + "'");
  }

  Poly number() {
    const auto& K = ring_->field();
    mpz_class numerator = digits();
    skip_space();
    if (peek() == '/') {
      const std::size_t slash = pos_;
      ++pos_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator after '/'");
      mpz_class denominator = digits();
      auto d = K.from_integer(denominator);
      if (K.is_zero(d)) fail_at(slash, "denominator vanishes in " + K.name());
      return Poly::constant(ring_, K.div(K.from_integer(numerator), d));
    }
    return Poly::constant(ring_, K.from_integer(numerator));
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Poly variable() {
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto index = ring_->index_of(name);
    if (!index) fail_at(start, "undeclared variable '" + name + "'");
    return Poly::variable(ring_, *index);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    throw ParseError(message, line_, column_ + static_cast<int>(at));
  }

  const RingPtr<F>& ring_;
  std::string_view text_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text, int line, int column) {
  return PolynomialParser<F>(ring, text, line, column).parse();
}

std::vector<ListItem> split_top_level(std::string_view text, int column) {
  std::vector<ListItem> items;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == ',' && depth <= 0) {
      std::size_t b = start, e = i;
      while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
      while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
      items.push_back({std::string(text.substr(b, e - b)), column + static_cast<int>(b)});
      start = i + 1;
    }
  }
  return items;
}

template Polynomial<PrimeField> parse_polynomial(const RingPtr<PrimeField>&, std::string_view, int, int);
template Polynomial<RationalField> parse_polynomial(const RingPtr<RationalField>&, std::string_view,
                                                    int, int);

}  // namespace pdquad
