#include <cctype>
#include <string>

#include "algstat/error.hpp"
#include "algstat/polyring.hpp"

namespace algstat {

namespace {

class Parser {
 public:
  Parser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  MultiPoly parse() {
    MultiPoly result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool factor_start(char c) { return std::isdigit(static_cast<unsigned char>(c)) || ident_start(c) || c == '('; }

  MultiPoly expression() {
    MultiPoly acc(ring_);
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      if (sign < 0) acc -= t;
      else acc += t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (factor_start(c)) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  MultiPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = integer();
      BigInt den = 1;
      skip_space();
      if (text_.compare(pos_, 2, "//") == 0) {
        pos_ += 2;
        skip_space();
        den = integer();
      } else if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        den = integer();
      }
      if (den == 0) fail("zero denominator");
      BigRat q(num, den);
      q.canonicalize();
      return MultiPoly::constant(ring_, q);
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '[') {
        std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated '['");
        pos_ = close + 1;
      }
      std::string name = normalize_var_name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw Error(ErrorCode::ParseError, "unknown variable '" + name + "' in '" + std::string(text_) + "'");
      return MultiPoly::variable(ring_, *idx);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const Ring& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace algstat
