#include "frobkit/expr.hpp"

#include <cctype>
#include <limits>

namespace frobkit {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Expr Expr::number(std::string digits) {
  Expr e;
  e.op = Op::number;
  e.text = std::move(digits);
  return e;
}

Expr Expr::symbol(std::string name) {
  Expr e;
  e.op = Op::symbol;
  e.text = std::move(name);
  return e;
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  Expr e;
  e.op = op;
  e.line = lhs.line;
  e.column = lhs.column;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  return a.op == b.op && a.text == b.text && a.exponent == b.exponent && a.args == b.args;
}

Lexer::Lexer(std::string_view source) : src_(source) { advance(); }

Token Lexer::next() {
  Token t = current_;
  advance();
  return t;
}

bool Lexer::accept(std::string_view punct) {
  if (current_.kind == Token::Kind::punct && current_.text == punct) {
    advance();
    return true;
  }
  return false;
}

void Lexer::expect(std::string_view punct) {
  if (!accept(punct)) {
    std::string got = current_.kind == Token::Kind::end ? "end of input" : "'" + current_.text + "'";
    fail("expected '" + std::string(punct) + "' but found " + got);
  }
}

void Lexer::fail(const std::string& message) const {
  throw ParseError(message, current_.line, current_.column);
}

void Lexer::advance() {
  for (;;) {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
    if (pos_ < src_.size() && src_[pos_] == '#') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      continue;
    }
    break;
  }
  current_ = Token{};
  current_.line = line_;
  current_.column = column_;
  if (pos_ >= src_.size()) return;
  const char c = src_[pos_];
  std::size_t start = pos_;
  if (std::isdigit(static_cast<unsigned char>(c))) {
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    current_.kind = Token::Kind::number;
  } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    current_.kind = Token::Kind::ident;
  } else {
    ++pos_;
    current_.kind = Token::Kind::punct;
  }
  current_.text = std::string(src_.substr(start, pos_ - start));
  column_ += static_cast<int>(pos_ - start);
}

namespace {

Expr parse_sum(Lexer& lex);

Expr parse_atom(Lexer& lex) {
  const Token& t = lex.peek();
  if (t.kind == Token::Kind::number) {
    Token tok = lex.next();
    Expr e = Expr::number(tok.text);
    e.line = tok.line;
    e.column = tok.column;
    return e;
  }
  if (t.kind == Token::Kind::ident) {
    Token tok = lex.next();
    Expr e = Expr::symbol(tok.text);
    e.line = tok.line;
    e.column = tok.column;
    return e;
  }
  if (lex.accept("(")) {
    Expr inner = parse_sum(lex);
    lex.expect(")");
    return inner;
  }
  lex.fail(t.kind == Token::Kind::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
}

Expr parse_power(Lexer& lex) {
  Expr base = parse_atom(lex);
  if (lex.accept("^")) {
    const Token& t = lex.peek();
    if (t.kind != Token::Kind::number) lex.fail("exponent must be a nonnegative integer");
    Token tok = lex.next();
    unsigned long long v = 0;
    for (char ch : tok.text) {
      v = v * 10 + static_cast<unsigned>(ch - '0');
      if (v > std::numeric_limits<std::uint32_t>::max())
        throw ParseError("exponent too large", tok.line, tok.column);
    }
    Expr e;
    e.op = Expr::Op::pow;
    e.exponent = static_cast<std::uint32_t>(v);
    e.line = base.line;
    e.column = base.column;
    e.args.push_back(std::move(base));
    return e;
  }
  return base;
}

Expr parse_unary(Lexer& lex) {
  const Token t = lex.peek();
  if (lex.accept("-")) {
    Expr e;
    e.op = Expr::Op::neg;
    e.line = t.line;
    e.column = t.column;
    e.args.push_back(parse_unary(lex));
    return e;
  }
  return parse_power(lex);
}

Expr parse_term(Lexer& lex) {
  Expr lhs = parse_unary(lex);
  for (;;) {
    if (lex.accept("*")) {
      lhs = Expr::binary(Expr::Op::mul, std::move(lhs), parse_unary(lex));
    } else if (lex.accept("/")) {
      lhs = Expr::binary(Expr::Op::div, std::move(lhs), parse_unary(lex));
    } else {
      return lhs;
    }
  }
}

Expr parse_sum(Lexer& lex) {
  Expr lhs = parse_term(lex);
  for (;;) {
    if (lex.accept("+")) {
      lhs = Expr::binary(Expr::Op::add, std::move(lhs), parse_term(lex));
    } else if (lex.accept("-")) {
      lhs = Expr::binary(Expr::Op::sub, std::move(lhs), parse_term(lex));
    } else {
      return lhs;
    }
  }
}

int precedence(const Expr& e) {
  switch (e.op) {
    case Expr::Op::add:
    case Expr::Op::sub: return 1;
    case Expr::Op::mul:
    case Expr::Op::div: return 2;
    case Expr::Op::neg: return 3;
    case Expr::Op::pow: return 4;
    default: return 5;
  }
}

void render(const Expr& e, std::string& out);

void render_wrapped(const Expr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render(e, out);
  if (wrap) out += ')';
}

void render(const Expr& e, std::string& out) {
  switch (e.op) {
    case Expr::Op::number:
    case Expr::Op::symbol: out += e.text; return;
    case Expr::Op::neg:
      out += '-';
      render_wrapped(e.args[0], precedence(e.args[0]) < 3, out);
      return;
    case Expr::Op::pow:
      render_wrapped(e.args[0], precedence(e.args[0]) <= 4, out);
      out += '^';
      out += std::to_string(e.exponent);
      return;
    case Expr::Op::add:
    case Expr::Op::sub:
    case Expr::Op::mul:
    case Expr::Op::div: {
      const int prec = precedence(e);
      // Left-associative: the left operand may share our precedence, the right
      // operand must bind tighter.
      render_wrapped(e.args[0], precedence(e.args[0]) < prec, out);
      switch (e.op) {
        case Expr::Op::add: out += " + "; break;
        case Expr::Op::sub: out += " - "; break;
        case Expr::Op::mul: out += '*'; break;
        default: out += '/'; break;
      }
      // A unary minus directly after a binary operator is only legal as a factor.
      const bool right_wrap = precedence(e.args[1]) <= prec ||
                              (e.args[1].op == Expr::Op::neg && prec == 1);
      render_wrapped(e.args[1], right_wrap, out);
      return;
    }
  }
}

}  // namespace

Expr parse_expr(Lexer& lex) { return parse_sum(lex); }

Expr parse_expr(std::string_view source) {
  Lexer lex(source);
  Expr e = parse_sum(lex);
  if (lex.peek().kind != Token::Kind::end) lex.fail("trailing input '" + lex.peek().text + "'");
  return e;
}

std::string to_string(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

}  // namespace frobkit
