#include "lsakit/parser.hpp"

#include <algorithm>
#include <cctype>

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> coords)
      : text_(text), coords_(coords) {}

  Poly parse() {
    Poly result = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw SyntaxError(pos_, "operator '+', '-', '*', '^' or end of input");
    }
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip_ws();
    bool negate = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      skip_ws();
      const std::string digits = read_digits("non-negative integer exponent");
      unsigned long e = 0;
      try {
        e = std::stoul(digits);
      } catch (const std::out_of_range&) {
        throw Error(Errc::DegreeOverflow, "exponent " + digits + " is too large");
      }
      if (e > max_total_degree() && !b.is_constant()) {
        throw Error(Errc::DegreeOverflow, "exponent " + digits + " exceeds the degree limit");
      }
      b = b.pow(static_cast<unsigned>(std::min<unsigned long>(e, 1ul << 20)));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "number, identifier or '('");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw SyntaxError(pos_, "number, identifier or '('");
  }

  std::string read_digits(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError(pos_, what);
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly rational() {
    Rational value(read_digits("integer"), 10);
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Rational den(read_digits("positive integer denominator"), 10);
      if (den == 0) throw SyntaxError(at, "positive integer denominator");
      value /= den;
    }
    value.canonicalize();
    return Poly::constant(coords_.size(), value);
  }

  Poly identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto it = std::find(coords_.begin(), coords_.end(), name);
    if (it == coords_.end()) {
      throw Error(Errc::UnknownVariable, std::string(name));
    }
    return Poly::variable(coords_.size(), static_cast<std::size_t>(it - coords_.begin()));
  }

  std::string_view text_;
  std::span<const std::string> coords_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> coords) {
  return PolyParser(text, coords).parse();
}

}  // namespace lsakit
