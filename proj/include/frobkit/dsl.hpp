#ifndef FROBKIT_DSL_HPP
#define FROBKIT_DSL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobkit/expr.hpp"
#include "frobkit/ring.hpp"

namespace frobkit {

struct NamedIdeal {
  std::string name;
  std::vector<Expr> generators;
  friend bool operator==(const NamedIdeal&, const NamedIdeal&) = default;
};

struct NamedElement {
  std::string name;
  Expr value;
  friend bool operator==(const NamedElement&, const NamedElement&) = default;
};

/// Parsed ring specification:
///
///   char 2;
///   ext a : a^2 + a + 1;     # optional extension F_p[a]/(modulus)
///   param t;                 # optional transcendental parameter, F_p(t)
///   vars x y z;
///   rel z^4 + x*y*z^2;       # zero or more relations
///   origin (x, y, z);        # optional, defaults to the variables
///   ideal m = (x, y, z);
///   elt c = y^2;
struct RingSpecDocument {
  std::uint32_t characteristic = 0;
  std::optional<std::string> ext_symbol;
  std::optional<Expr> ext_modulus;
  std::optional<std::string> parameter;
  std::vector<std::string> vars;
  std::vector<Expr> relations;
  std::optional<std::vector<Expr>> origin;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedElement> elements;

  friend bool operator==(const RingSpecDocument&, const RingSpecDocument&) = default;

  const NamedIdeal* find_ideal(std::string_view name) const;
  const NamedElement* find_element(std::string_view name) const;
};

/// Throws ParseError with the position of the offending token.
RingSpecDocument parse_spec(std::string_view text);

/// Canonical text; parse_spec(print_spec(d)) == d.
std::string print_spec(const RingSpecDocument& doc);

FieldSpecPtr field_spec_of(const RingSpecDocument& doc);

/// Ring, ideals and elements of a document over the field type K.
template <class K>
struct BuiltSpec {
  typename PresentedRing<K>::Ptr ring;
  std::map<std::string, Ideal<K>> ideals;
  std::map<std::string, Polynomial<K>> elements;

  const Ideal<K>& ideal(const std::string& name) const;
  const Polynomial<K>& element(const std::string& name) const;
};

template <class K>
BuiltSpec<K> build_spec(const RingSpecDocument& doc);

/// Polynomial from an expression over the ring's variables; the extension
/// generator or parameter may appear in coefficients.
template <class K>
Polynomial<K> build_polynomial(const typename PresentedRing<K>::Ptr& ring, const Expr& e);

}  // namespace frobkit

#endif  // FROBKIT_DSL_HPP
