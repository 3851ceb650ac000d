#ifndef FROBKIT_EXPR_HPP
#define FROBKIT_EXPR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frobkit {

/// Syntax error carrying a 1-based source position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Arithmetic expression tree shared by field literals and the ring DSL.
struct Expr {
  enum class Op { number, symbol, add, sub, neg, mul, div, pow };

  Op op = Op::number;
  std::string text;         // decimal digits for numbers, name for symbols
  std::uint32_t exponent = 0;  // for pow
  std::vector<Expr> args;
  int line = 0;
  int column = 0;

  static Expr number(std::string digits);
  static Expr symbol(std::string name);
  static Expr binary(Op op, Expr lhs, Expr rhs);

  /// Structural equality; source positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);
};

struct Token {
  enum class Kind { end, number, ident, punct };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

/// Tokenizer over ASCII source; '#' starts a comment running to end of line.
class Lexer {
public:
  explicit Lexer(std::string_view source);
  const Token& peek() const { return current_; }
  Token next();
  bool accept(std::string_view punct);
  void expect(std::string_view punct);
  [[noreturn]] void fail(const std::string& message) const;

private:
  void advance();

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

/// sum := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
/// unary := '-' unary | power ; power := atom ('^' INT)? ; atom := INT | IDENT | '(' sum ')'
Expr parse_expr(Lexer& lex);
Expr parse_expr(std::string_view source);

/// Canonical rendering with minimal parentheses; parse_expr(to_string(e)) == e.
std::string to_string(const Expr& e);

}  // namespace frobkit

#endif  // FROBKIT_EXPR_HPP
