#include "frobkit/dsl.hpp"

#include <algorithm>
#include <set>

namespace frobkit {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t digits_mod(const std::string& digits, std::uint32_t p) {
  std::uint64_t r = 0;
  for (char c : digits) r = (r * 10 + static_cast<unsigned>(c - '0')) % p;
  return static_cast<std::uint32_t>(r);
}

[[noreturn]] void fail_at(const Expr& e, const std::string& message) { throw ParseError(message, e.line, e.column); }

void check_symbols(const Expr& e, const std::set<std::string>& allowed) {
  if (e.op == Expr::Op::symbol && !allowed.count(e.text)) fail_at(e, "unknown variable '" + e.text + "'");
  for (const auto& a : e.args) check_symbols(a, allowed);
}

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : lex_(text) {}

  RingSpecDocument run() {
    if (!keyword("char")) lex_.fail("a spec starts with 'char <p>;'");
    const Token tok = lex_.peek();
    if (tok.kind != Token::Kind::number) lex_.fail("expected the characteristic");
    lex_.next();
    if (tok.text.size() > 9 || !is_prime(std::stoull(tok.text)))
      throw ParseError(tok.text + " is not a prime", tok.line, tok.column);
    doc_.characteristic = static_cast<std::uint32_t>(std::stoul(tok.text));
    lex_.expect(";");
    while (lex_.peek().kind != Token::Kind::end) statement();
    if (doc_.vars.empty()) lex_.fail("missing 'vars' declaration");
    return std::move(doc_);
  }

private:
  bool keyword(std::string_view word) {
    if (lex_.peek().kind == Token::Kind::ident && lex_.peek().text == word) {
      lex_.next();
      return true;
    }
    return false;
  }

  std::string fresh_name(const std::string& what) {
    const Token tok = lex_.peek();
    if (tok.kind != Token::Kind::ident) lex_.fail("expected " + what + " name");
    if (reserved(tok.text)) throw ParseError("'" + tok.text + "' is a keyword", tok.line, tok.column);
    if (!names_.insert(tok.text).second)
      throw ParseError("duplicate name '" + tok.text + "'", tok.line, tok.column);
    lex_.next();
    return tok.text;
  }

  static bool reserved(const std::string& s) {
    static const std::set<std::string> words{"char", "ext", "param", "vars", "rel", "origin", "ideal", "elt"};
    return words.count(s) > 0;
  }

  void require_vars(const char* what) {
    if (doc_.vars.empty()) lex_.fail(std::string("'") + what + "' must follow 'vars'");
  }

  std::set<std::string> ring_symbols() const {
    std::set<std::string> s(doc_.vars.begin(), doc_.vars.end());
    if (doc_.ext_symbol) s.insert(*doc_.ext_symbol);
    if (doc_.parameter) s.insert(*doc_.parameter);
    return s;
  }

  Expr ring_expr() {
    Expr e = parse_expr(lex_);
    check_symbols(e, ring_symbols());
    return e;
  }

  std::vector<Expr> expr_list() {
    lex_.expect("(");
    std::vector<Expr> out;
    if (lex_.accept(")")) return out;
    do out.push_back(ring_expr());
    while (lex_.accept(","));
    lex_.expect(")");
    return out;
  }

  void statement() {
    const Token tok = lex_.peek();
    if (keyword("ext")) {
      if (doc_.ext_symbol || doc_.parameter || !doc_.vars.empty())
        throw ParseError("'ext' must come right after 'char' and at most once", tok.line, tok.column);
      doc_.ext_symbol = fresh_name("generator");
      lex_.expect(":");
      Expr m = parse_expr(lex_);
      check_symbols(m, {*doc_.ext_symbol});
      doc_.ext_modulus = std::move(m);
    } else if (keyword("param")) {
      if (doc_.ext_symbol || doc_.parameter || !doc_.vars.empty())
        throw ParseError("'param' must come right after 'char' and at most once", tok.line, tok.column);
      doc_.parameter = fresh_name("parameter");
    } else if (keyword("vars")) {
      if (!doc_.vars.empty()) throw ParseError("'vars' declared twice", tok.line, tok.column);
      while (lex_.peek().kind == Token::Kind::ident) doc_.vars.push_back(fresh_name("variable"));
      if (doc_.vars.empty()) lex_.fail("expected at least one variable");
    } else if (keyword("rel")) {
      require_vars("rel");
      doc_.relations.push_back(ring_expr());
    } else if (keyword("origin")) {
      require_vars("origin");
      if (doc_.origin) throw ParseError("'origin' declared twice", tok.line, tok.column);
      doc_.origin = expr_list();
    } else if (keyword("ideal")) {
      require_vars("ideal");
      NamedIdeal ideal{fresh_name("ideal"), {}};
      lex_.expect("=");
      ideal.generators = expr_list();
      doc_.ideals.push_back(std::move(ideal));
    } else if (keyword("elt")) {
      require_vars("elt");
      NamedElement elt{fresh_name("element"), {}};
      lex_.expect("=");
      elt.value = ring_expr();
      doc_.elements.push_back(std::move(elt));
    } else {
      lex_.fail(tok.kind == Token::Kind::end ? "unexpected end of input" : "unknown statement '" + tok.text + "'");
    }
    lex_.expect(";");
  }

  Lexer lex_;
  RingSpecDocument doc_;
  std::set<std::string> names_;
};

std::string join(const std::vector<Expr>& list) {
  std::string out = "(";
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? ", " : "") + to_string(list[i]);
  return out + ")";
}

UniPoly modulus_of(const Expr& e, std::uint32_t p) {
  switch (e.op) {
    case Expr::Op::number: return UniPoly{digits_mod(e.text, p)};
    case Expr::Op::symbol: return UniPoly{0, 1};
    case Expr::Op::neg: return unipoly::sub({}, modulus_of(e.args[0], p), p);
    case Expr::Op::add: return unipoly::add(modulus_of(e.args[0], p), modulus_of(e.args[1], p), p);
    case Expr::Op::sub: return unipoly::sub(modulus_of(e.args[0], p), modulus_of(e.args[1], p), p);
    case Expr::Op::mul: return unipoly::mul(modulus_of(e.args[0], p), modulus_of(e.args[1], p), p);
    case Expr::Op::pow: {
      UniPoly out{1};
      const UniPoly base = modulus_of(e.args[0], p);
      for (std::uint32_t i = 0; i < e.exponent; ++i) out = unipoly::mul(out, base, p);
      return out;
    }
    case Expr::Op::div: fail_at(e, "division is not allowed in a modulus");
  }
  fail_at(e, "bad modulus");
}

}  // namespace

const NamedIdeal* RingSpecDocument::find_ideal(std::string_view name) const {
  for (const auto& i : ideals)
    if (i.name == name) return &i;
  return nullptr;
}

const NamedElement* RingSpecDocument::find_element(std::string_view name) const {
  for (const auto& e : elements)
    if (e.name == name) return &e;
  return nullptr;
}

RingSpecDocument parse_spec(std::string_view text) { return SpecParser(text).run(); }

std::string print_spec(const RingSpecDocument& doc) {
  std::string out = "char " + std::to_string(doc.characteristic) + ";\n";
  if (doc.ext_symbol) out += "ext " + *doc.ext_symbol + " : " + to_string(*doc.ext_modulus) + ";\n";
  if (doc.parameter) out += "param " + *doc.parameter + ";\n";
  out += "vars";
  for (const auto& v : doc.vars) out += " " + v;
  out += ";\n";
  for (const auto& r : doc.relations) out += "rel " + to_string(r) + ";\n";
  if (doc.origin) out += "origin " + join(*doc.origin) + ";\n";
  for (const auto& i : doc.ideals) out += "ideal " + i.name + " = " + join(i.generators) + ";\n";
  for (const auto& e : doc.elements) out += "elt " + e.name + " = " + to_string(e.value) + ";\n";
  return out;
}

FieldSpecPtr field_spec_of(const RingSpecDocument& doc) {
  const std::uint32_t p = doc.characteristic;
  if (doc.parameter) return FieldSpec::rational_function(p, *doc.parameter);
  if (doc.ext_symbol) {
    try {
      return FieldSpec::extension(p, modulus_of(*doc.ext_modulus, p), *doc.ext_symbol);
    } catch (const std::invalid_argument& err) {
      fail_at(*doc.ext_modulus, err.what());
    }
  }
  return FieldSpec::prime(p);
}

template <class K>
Polynomial<K> build_polynomial(const typename PresentedRing<K>::Ptr& ring, const Expr& e) {
  using Poly = Polynomial<K>;
  const auto& field = ring->field();
  switch (e.op) {
    case Expr::Op::number:
      return Poly::constant(field, field->from_int(digits_mod(e.text, ring->characteristic())));
    case Expr::Op::symbol: {
      const auto& names = ring->names();
      const auto it = std::find(names.begin(), names.end(), e.text);
      if (it != names.end()) return Poly::variable(field, static_cast<std::size_t>(it - names.begin()));
      if (e.text == ring->spec()->symbol()) return Poly::constant(field, field->generator());
      fail_at(e, "unknown variable '" + e.text + "'");
    }
    case Expr::Op::neg: return -build_polynomial<K>(ring, e.args[0]);
    case Expr::Op::add: return build_polynomial<K>(ring, e.args[0]) + build_polynomial<K>(ring, e.args[1]);
    case Expr::Op::sub: return build_polynomial<K>(ring, e.args[0]) - build_polynomial<K>(ring, e.args[1]);
    case Expr::Op::mul: return build_polynomial<K>(ring, e.args[0]) * build_polynomial<K>(ring, e.args[1]);
    case Expr::Op::pow: return build_polynomial<K>(ring, e.args[0]).pow(e.exponent);
    case Expr::Op::div: {
      const Poly d = build_polynomial<K>(ring, e.args[1]);
      if (!d.is_constant()) fail_at(e.args[1], "division by a non-constant");
      if (d.is_zero()) fail_at(e.args[1], "division by zero");
      return build_polynomial<K>(ring, e.args[0]).scale(field->inv(d.leading().coeff));
    }
  }
  fail_at(e, "bad expression");
}

template <class K>
BuiltSpec<K> build_spec(const RingSpecDocument& doc) {
  const auto field = std::make_shared<const K>(field_spec_of(doc));
  // Relations are built against a bare ring carrying the variable names.
  const auto bare = PresentedRing<K>::make(field, doc.vars, {});
  std::vector<Polynomial<K>> rels, origin;
  for (const auto& r : doc.relations) rels.push_back(build_polynomial<K>(bare, r));
  std::optional<std::vector<Polynomial<K>>> maybe_origin;
  if (doc.origin) {
    for (const auto& g : *doc.origin) origin.push_back(build_polynomial<K>(bare, g));
    maybe_origin = std::move(origin);
  }
  BuiltSpec<K> out;
  out.ring = PresentedRing<K>::make(field, doc.vars, std::move(rels), std::move(maybe_origin));
  for (const auto& i : doc.ideals) {
    std::vector<Polynomial<K>> gens;
    for (const auto& g : i.generators) gens.push_back(build_polynomial<K>(out.ring, g));
    out.ideals.emplace(i.name, Ideal<K>(out.ring, std::move(gens)));
  }
  for (const auto& e : doc.elements) out.elements.emplace(e.name, build_polynomial<K>(out.ring, e.value));
  return out;
}

template <class K>
const Ideal<K>& BuiltSpec<K>::ideal(const std::string& name) const {
  const auto it = ideals.find(name);
  if (it == ideals.end()) throw InputError("no ideal named '" + name + "'");
  return it->second;
}

template <class K>
const Polynomial<K>& BuiltSpec<K>::element(const std::string& name) const {
  const auto it = elements.find(name);
  if (it == elements.end()) throw InputError("no element named '" + name + "'");
  return it->second;
}

template struct BuiltSpec<GaloisField>;
template struct BuiltSpec<RationalFunctionField>;
template BuiltSpec<GaloisField> build_spec(const RingSpecDocument&);
template BuiltSpec<RationalFunctionField> build_spec(const RingSpecDocument&);
template Polynomial<GaloisField> build_polynomial(const PresentedRing<GaloisField>::Ptr&, const Expr&);
template Polynomial<RationalFunctionField> build_polynomial(const PresentedRing<RationalFunctionField>::Ptr&,
                                                            const Expr&);

}  // namespace frobkit
