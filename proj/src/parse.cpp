#include "chv/parse.hpp"

#include <cctype>

#include "chv/error.hpp"

namespace chv {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PolyElem parse() {
    PolyElem e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  PolyElem expr() {
    PolyElem e = term();
    for (;;) {
      if (eat('+'))
        e += term();
      else if (eat('-'))
        e -= term();
      else
        return e;
    }
  }

  PolyElem term() {
    PolyElem t = factor();
    while (eat('*')) t *= factor();
    return t;
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  std::uint32_t exponent() {
    skip_ws();
    std::size_t at = pos_;
    Int e = integer();
    if (e > 0xffffffffu) {
      pos_ = at;
      fail("exponent too large");
    }
    return static_cast<std::uint32_t>(e);
  }

  PolyElem factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      PolyElem e = expr();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) return e.pow(exponent());
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      if (eat('/')) {
        std::size_t at = pos_;
        Int den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        return PolyElem(Rational(num, den));
      }
      return PolyElem(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < s_.size()) {
        unsigned char u = static_cast<unsigned char>(s_[pos_]);
        if (std::isalnum(u) || u == '_')
          ++pos_;
        else
          break;
      }
      PolyElem v = PolyElem::variable(s_.substr(start, pos_ - start));
      if (eat('^')) return v.pow(exponent());
      return v;
    }
    fail(pos_ >= s_.size() ? "unexpected end of input" : "unexpected character");
  }
};

}  // namespace

PolyElem parse_entry(std::string_view text) { return Parser(text).parse(); }

}  // namespace chv
