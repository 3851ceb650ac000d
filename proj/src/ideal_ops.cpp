#include "frobkit/ideal_ops.hpp"

#include <stdexcept>

namespace frobkit {

namespace {

std::vector<std::size_t> shift_map(int by) {
  std::vector<std::size_t> map(kMaxVars);
  for (std::size_t i = 0; i < kMaxVars; ++i)
    map[i] = by > 0 ? (i + 1 < kMaxVars ? i + 1 : i) : (i == 0 ? 0 : i - 1);
  return map;
}

template <class K>
Polynomial<K> shift_up(const Polynomial<K>& f) {
  if (f.support_width() >= kMaxVars) throw InputError("no free slot for an elimination variable");
  return f.relocate(shift_map(1));
}

template <class K>
Polynomial<K> shift_down(const Polynomial<K>& f) {
  return f.relocate(shift_map(-1));
}

}  // namespace

template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& a, const Polynomial<K>& f) {
  if (f.is_zero()) throw std::domain_error("division by zero polynomial");
  const K& field = f.domain();
  const auto& lead = f.leading();
  const auto inv = field.inv(lead.coeff);
  std::vector<Term<K>> out;
  Polynomial<K> rest = a;
  while (!rest.is_zero()) {
    const auto& t = rest.leading();
    if (!lead.mono.divides(t.mono)) throw std::domain_error("inexact polynomial division");
    const Monomial m = quotient(t.mono, lead.mono);
    const auto c = field.mul(t.coeff, inv);
    out.push_back({m, c});
    rest = rest - f.mul_term(m, c);
  }
  return Polynomial<K>::from_terms(f.field(), std::move(out));
}

template <class K>
std::vector<Polynomial<K>> intersect_generators(const std::shared_ptr<const K>& field,
                                                const std::vector<Polynomial<K>>& a,
                                                const std::vector<Polynomial<K>>& b) {
  using Poly = Polynomial<K>;
  const Poly t = Poly::variable(field, 0);
  const Poly one_minus_t = Poly::constant(field, field->one()) - t;
  std::vector<Poly> gens;
  for (const auto& g : a)
    if (!g.is_zero()) gens.push_back(t * shift_up(g));
  for (const auto& g : b)
    if (!g.is_zero()) gens.push_back(one_minus_t * shift_up(g));
  const auto basis = groebner_basis<K>(field, gens, MonomialOrder::block(1));
  std::vector<Poly> out;
  for (const auto& e : basis.elements())
    if (e.lead[0] == 0) out.push_back(shift_down(Poly::from_terms(field, e.terms)));
  return out;
}

template <class K>
std::vector<Polynomial<K>> colon_generators(const std::shared_ptr<const K>& field,
                                            const std::vector<Polynomial<K>>& a, const Polynomial<K>& f) {
  if (f.is_zero()) throw InputError("colon by the zero polynomial");
  const auto basis = groebner_basis<K>(field, a, MonomialOrder::grevlex());
  const auto r = basis.normal_form(f);
  if (r.is_zero()) return {Polynomial<K>::constant(field, field->one())};
  std::vector<Polynomial<K>> out;
  for (const auto& g : intersect_generators<K>(field, a, {r})) out.push_back(divide_exact(g, r));
  return out;
}

template <class K>
Ideal<K> ideal_colon(const Ideal<K>& ideal, const Polynomial<K>& f) {
  std::vector<Polynomial<K>> all = ideal.ring()->relations();
  all.insert(all.end(), ideal.generators().begin(), ideal.generators().end());
  return canonical_form(Ideal<K>(ideal.ring(), colon_generators<K>(ideal.ring()->field(), all, f)));
}

template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring() != b.ring()) throw InputError("ideals live in different rings");
  const auto& rel = a.ring()->relations();
  std::vector<Polynomial<K>> ga = rel, gb = rel;
  ga.insert(ga.end(), a.generators().begin(), a.generators().end());
  gb.insert(gb.end(), b.generators().begin(), b.generators().end());
  return canonical_form(Ideal<K>(a.ring(), intersect_generators<K>(a.ring()->field(), ga, gb)));
}

template <class K>
Ideal<K> ideal_colon_ideal(const Ideal<K>& ideal, const Ideal<K>& other) {
  if (ideal.ring() != other.ring()) throw InputError("ideals live in different rings");
  std::optional<Ideal<K>> result;
  for (const auto& g : other.generators()) {
    if (ideal.contains(g)) continue;
    Ideal<K> c = ideal_colon(ideal, g);
    result = result ? ideal_intersect(*result, c) : c;
  }
  if (!result) return Ideal<K>(ideal.ring(), {ideal.ring()->one()});
  return *result;
}

template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const Ideal<K>& other) {
  Ideal<K> current = canonical_form(ideal);
  for (;;) {
    Ideal<K> next = ideal_colon_ideal(current, other);
    if (next.basis()->same_as(*current.basis())) return current;
    current = std::move(next);
  }
}

template <class K>
Ideal<K> canonical_form(const Ideal<K>& ideal) {
  const auto& ring = ideal.ring();
  std::vector<Polynomial<K>> gens;
  if (ring->relations().empty()) {
    gens = ideal.basis()->polynomials();
  } else {
    const Ideal<K> zero(ring, {});
    for (auto& g : ideal.basis()->polynomials())
      if (!zero.contains(g)) gens.push_back(std::move(g));
  }
  Ideal<K> out(ring, std::move(gens));
  return out;
}

#define FROBKIT_INSTANTIATE(K)                                                                               \
  template Polynomial<K> divide_exact(const Polynomial<K>&, const Polynomial<K>&);                          \
  template std::vector<Polynomial<K>> intersect_generators(const std::shared_ptr<const K>&,                 \
                                                           const std::vector<Polynomial<K>>&,               \
                                                           const std::vector<Polynomial<K>>&);              \
  template std::vector<Polynomial<K>> colon_generators(const std::shared_ptr<const K>&,                     \
                                                       const std::vector<Polynomial<K>>&, const Polynomial<K>&); \
  template Ideal<K> ideal_colon(const Ideal<K>&, const Polynomial<K>&);                                     \
  template Ideal<K> ideal_colon_ideal(const Ideal<K>&, const Ideal<K>&);                                    \
  template Ideal<K> ideal_intersect(const Ideal<K>&, const Ideal<K>&);                                      \
  template Ideal<K> saturate(const Ideal<K>&, const Ideal<K>&);                                             \
  template Ideal<K> canonical_form(const Ideal<K>&);

FROBKIT_INSTANTIATE(GaloisField)
FROBKIT_INSTANTIATE(RationalFunctionField)

#undef FROBKIT_INSTANTIATE

}  // namespace frobkit
