// Recursive-descent parser for scalar literals:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | '+' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | '(' expr ')'
#include <algorithm>
#include <cctype>

#include "rbalg/scalar.hpp"

namespace rbalg {

namespace {

class LiteralParser {
 public:
  LiteralParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  Scalar parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty literal");
    Scalar v = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("in scalar literal '" + std::string(text_) + "': " + what, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    unsigned long e = std::stoul(digits);
    Scalar r = field_.one();
    for (unsigned long k = 0; k < e; ++k) r = r * base;
    return r;
  }

  Scalar atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of literal");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class z(std::string(text_.substr(start, pos_ - start)));
      return field_.from_rational(mpq_class(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      const auto& ps = field_.params();
      if (field_.kind() != FieldSpec::Kind::rational_function ||
          std::find(ps.begin(), ps.end(), name) == ps.end()) {
        pos_ = start;
        fail("unknown parameter '" + name + "' for field " + field_.to_string());
      }
      return field_.parameter(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Field::parse(std::string_view literal) const { return LiteralParser(*this, literal).parse(); }

}  // namespace rbalg
