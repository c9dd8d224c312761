#include "parse.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace aurea::cli {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw Error(Errc::syntax_error, what + " at byte " + std::to_string(at),
                at);
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'", pos);
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) fail("expected digits", start);
    return Int(std::string(text.substr(start, pos - start)));
  }

  // int or int/int; a literal zero denominator is malformed input here,
  // not a runtime division
  Rational number() {
    const Int num = integer();
    if (!consume('/')) return Rational(num);
    skip_ws();
    const std::size_t at = pos;
    const Int den = integer();
    if (den == 0) fail("zero denominator", at);
    return Rational(num, den);
  }
};

}  // namespace

ParsedEquation parse_polynomial(std::string_view text) {
  Lexer lx{text};
  if (lx.eof()) lx.fail("empty equation", 0);
  std::vector<Rational> coeffs;
  char variable = 0;
  bool first = true;
  while (!lx.eof() && lx.peek() != '=') {
    int sign = +1;
    const char c = lx.peek();
    if (c == '+' || c == '-') {
      ++lx.pos;
      if (c == '-') sign = -1;
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms", lx.pos);
    }
    Rational coef(1);
    bool have_coef = false;
    if (is_digit(lx.peek())) {
      coef = lx.number();
      have_coef = true;
      lx.consume('*');
    }
    unsigned exp = 0;
    if (is_alpha(lx.peek())) {
      const std::size_t var_at = lx.pos;
      const char v = text[lx.pos++];
      if (lx.pos < text.size() && is_alpha(text[lx.pos]))
        lx.fail("variables are single letters", lx.pos);
      if (variable == 0)
        variable = v;
      else if (variable != v)
        throw Error(Errc::mixed_variables,
                    std::string("variable '") + v + "' conflicts with '" +
                        variable + "' at byte " + std::to_string(var_at),
                    var_at);
      exp = 1;
      if (lx.consume('^')) {
        lx.skip_ws();
        const std::size_t exp_at = lx.pos;
        const Int e = lx.integer();
        if (e > 16)
          throw Error(Errc::exponent_too_large,
                      "exponent " + e.get_str() + " exceeds 16 at byte " +
                          std::to_string(exp_at),
                      exp_at);
        exp = static_cast<unsigned>(e.get_ui());
      }
    } else if (!have_coef) {
      lx.fail("expected a coefficient or a variable", lx.pos);
    }
    if (coeffs.size() <= exp) coeffs.resize(exp + 1);
    coeffs[exp] += sign < 0 ? -coef : coef;
    first = false;
  }
  if (lx.consume('=')) {
    lx.skip_ws();
    const std::size_t at = lx.pos;
    const Int z = lx.integer();
    if (z != 0) lx.fail("only '= 0' is accepted after the polynomial", at);
  }
  if (!lx.eof()) lx.fail("unexpected trailing input", lx.pos);
  return {Polynomial(std::move(coeffs)), variable == 0 ? 'x' : variable};
}

Matrix parse_matrix(std::string_view text) {
  Lexer lx{text};
  if (lx.eof()) lx.fail("empty matrix", 0);
  std::vector<std::vector<Rational>> rows(1);
  bool need_entry = true;
  while (!lx.eof()) {
    const char c = lx.peek();
    if (c == ';') {
      if (need_entry) lx.fail("empty matrix row", lx.pos);
      ++lx.pos;
      rows.emplace_back();
      need_entry = true;
      continue;
    }
    if (c == ',') {
      if (need_entry) lx.fail("expected a matrix entry before ','", lx.pos);
      ++lx.pos;
      need_entry = true;
      continue;
    }
    int sign = +1;
    if (c == '+' || c == '-') {
      ++lx.pos;
      if (c == '-') sign = -1;
    }
    if (!is_digit(lx.peek())) lx.fail("expected a matrix entry", lx.pos);
    Rational entry = lx.number();
    rows.back().push_back(sign < 0 ? -entry : entry);
    need_entry = false;
  }
  if (need_entry) lx.fail("matrix ends without an entry", lx.pos);

  const std::size_t cols = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != cols)
      throw Error(Errc::ragged_rows,
                  "row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " entries; expected " +
                      std::to_string(cols));
  if (rows.size() != cols)
    throw Error(Errc::non_square,
                "matrix is " + std::to_string(rows.size()) + "x" +
                    std::to_string(cols) + "; a square matrix is required");

  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, std::move(rows[i][j]));
  return m;
}

namespace {

class RadicalParser {
 public:
  explicit RadicalParser(std::string_view text) : lx_{text} {}

  Radical parse() {
    Radical v = expr();
    if (!lx_.eof()) lx_.fail("unexpected trailing input", lx_.pos);
    return v;
  }

 private:
  Radical expr() {
    int sign = +1;
    if (lx_.peek() == '+') {
      ++lx_.pos;
    } else if (lx_.peek() == '-') {
      ++lx_.pos;
      sign = -1;
    }
    Radical acc = addend();
    if (sign < 0) acc = acc.negated();
    while (true) {
      const char c = lx_.peek();
      if (c == '+') {
        ++lx_.pos;
        acc = acc.plus(addend());
      } else if (c == '-') {
        ++lx_.pos;
        acc = acc.minus(addend());
      } else {
        break;
      }
    }
    return acc;
  }

  Radical addend() {
    Radical acc = factor();
    while (true) {
      const char c = lx_.peek();
      if (c == '*') {
        ++lx_.pos;
        acc = acc.times(factor());
      } else if (c == '/') {
        ++lx_.pos;
        acc = acc.divided_by(factor());
      } else if (is_digit(c) || c == '(' || is_alpha(c)) {
        acc = acc.times(factor());  // implicit multiplication
      } else {
        break;
      }
    }
    return acc;
  }

  Radical factor() {
    Radical base = primary();
    if (!lx_.consume('^')) return base;
    lx_.skip_ws();
    const std::size_t at = lx_.pos;
    const Int e = lx_.integer();
    if (e > 16)
      throw Error(Errc::exponent_too_large,
                  "exponent " + e.get_str() + " exceeds 16 at byte " +
                      std::to_string(at),
                  at);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Radical primary() {
    const char c = lx_.peek();
    const std::size_t at = lx_.pos;
    if (is_digit(c)) return Radical(Rational(lx_.integer()));
    if (c == '(') {
      ++lx_.pos;
      Radical v = expr();
      lx_.expect(')');
      return v;
    }
    if (is_alpha(c)) {
      std::size_t end = lx_.pos;
      while (end < lx_.text.size() && is_alpha(lx_.text[end])) ++end;
      const std::string_view word = lx_.text.substr(lx_.pos, end - lx_.pos);
      if (word != "sqrt")
        lx_.fail("unknown function '" + std::string(word) + "'", at);
      lx_.pos = end;
      lx_.expect('(');
      Radical inner = expr();
      lx_.expect(')');
      if (inner.tier() == 2)
        throw Error(Errc::nesting_too_deep,
                    "radicals nest at most one level deep here (sqrt of an "
                    "already-nested value at byte " +
                        std::to_string(at) + ")",
                    at);
      return Radical::sqrt_of(inner.tier1_value());
    }
    lx_.fail("expected a number, '(' or sqrt(...)", at);
  }

  Lexer lx_;
};

}  // namespace

Radical parse_radical(std::string_view text) {
  return RadicalParser(text).parse();
}

}  // namespace aurea::cli
