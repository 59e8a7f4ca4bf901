// Recursive-descent reader for expressions such as "(1+u3)^2/(u1*u2)".
#include <cctype>

#include "frieze_lab/error.hpp"
#include "frieze_lab/exactalg/rational_function.hpp"

namespace frieze_lab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction parse_all() {
    RationalFunction f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw Error(std::string("cannot parse '") + std::string(s_) + "': " + what + " at offset " +
                std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
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
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  RationalFunction expr() {
    RationalFunction f = term();
    while (true) {
      if (accept('+'))
        f += term();
      else if (accept('-'))
        f -= term();
      else
        return f;
    }
  }

  RationalFunction term() {
    RationalFunction f = unary();
    while (true) {
      if (accept('*')) {
        f *= unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        f /= d;
      } else {
        return f;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    int e = std::stoi(d);
    if (negative && base.is_zero()) fail("division by zero");
    return base.pow(negative ? -e : e);
  }

  RationalFunction atom() {
    skip();
    if (accept('(')) {
      RationalFunction f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (pos_ < s_.size() && s_[pos_] == 'u') {
      ++pos_;
      std::string d = digits();
      if (d.size() > 9) fail("variable index too large");
      return RationalFunction::var(static_cast<Var>(std::stoul(d)));
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return Polynomial(mpz_class(digits()));
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace frieze_lab
