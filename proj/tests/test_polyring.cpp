#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace frobkit;
using namespace frobkit::testing;

namespace {

using Poly = Polynomial<GaloisField>;

GaloisField::Elem naive_eval(const GaloisField& k, const Poly& f, const std::vector<GaloisField::Elem>& pt) {
  GaloisField::Elem total = 0;
  for (const auto& t : f.terms()) {
    GaloisField::Elem v = t.coeff;
    for (std::size_t i = 0; i < pt.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v = k.mul(v, pt[i]);
    total = k.add(total, v);
  }
  return total;
}

Poly random_over(const std::shared_ptr<const GaloisField>& k, std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(1, static_cast<std::uint32_t>(k->spec()->order() - 1));
  std::vector<Term<GaloisField>> terms;
  for (int i = 0; i < 5; ++i) terms.push_back({random_monomial(n, 3, rng), coeff(rng)});
  return Poly::from_terms(k, std::move(terms));
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  const Monomial a = Monomial::from_exponents(std::vector<unsigned>{3, 2, 0});
  const Monomial b = Monomial::from_exponents(std::vector<unsigned>{1, 4, 2});
  CHECK(lcm(a, b) == Monomial::from_exponents(std::vector<unsigned>{3, 4, 2}));
  CHECK(gcd(a, b) == Monomial::from_exponents(std::vector<unsigned>{1, 2, 0}));
  CHECK((a * b).degree() == a.degree() + b.degree());
  CHECK(lcm(a, b) * gcd(a, b) == a * b);
  CHECK(gcd(a, b).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(quotient(a * b, b) == a);
  CHECK(coprime(Monomial::variable(0), Monomial::variable(1)));
  CHECK(monomial_to_string(a, {"x", "y", "z"}) == "x^3*y^2");
  CHECK(monomial_to_string(Monomial{}, {"x"}) == "1");
  CHECK_THROWS_AS(Monomial::variable(0, 70000), std::overflow_error);
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal") {
  Rng rng(3);
  for (const auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
    for (int i = 0; i < 300; ++i) {
      const Monomial a = random_monomial(4, 4, rng), b = random_monomial(4, 4, rng), c = random_monomial(4, 4, rng);
      const int ab = order.compare(a, b);
      CHECK(ab == -order.compare(b, a));
      CHECK((ab == 0) == (a == b));
      CHECK(order.compare(a * c, b * c) == ab);
      if (!a.is_one()) CHECK(order.compare(Monomial{}, a) < 0);
      if (ab < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
    }
  }
  const Monomial x = Monomial::variable(0), y2 = Monomial::variable(1, 2);
  CHECK(MonomialOrder::lex().compare(x, y2) > 0);
  CHECK(MonomialOrder::grevlex().compare(x, y2) < 0);
  // grevlex: x*z < y^2 in three variables
  CHECK(MonomialOrder::grevlex().compare(Monomial::variable(0) * Monomial::variable(2), y2) < 0);
  // block(1) compares the first variable before anything else
  CHECK(MonomialOrder::block(1).compare(x, Monomial::variable(1, 5)) > 0);
}

TEST_CASE("polynomial arithmetic agrees with evaluation at random points") {
  for (const auto& spec : {FieldSpec::prime(5), FieldSpec::extension(2, {1, 1, 0, 0, 1}), FieldSpec::extension(3, {2, 2, 1})}) {
    const auto k = std::make_shared<const GaloisField>(spec);
    Rng rng(spec->order());
    std::uniform_int_distribution<std::uint32_t> elem(0, static_cast<std::uint32_t>(spec->order() - 1));
    for (int i = 0; i < 50; ++i) {
      const Poly f = random_over(k, 3, rng), g = random_over(k, 3, rng);
      const std::vector<GaloisField::Elem> pt{elem(rng), elem(rng), elem(rng)};
      const auto fv = naive_eval(*k, f, pt), gv = naive_eval(*k, g, pt);
      CHECK(naive_eval(*k, f + g, pt) == k->add(fv, gv));
      CHECK(naive_eval(*k, f - g, pt) == k->sub(fv, gv));
      CHECK(naive_eval(*k, f * g, pt) == k->mul(fv, gv));
      CHECK(naive_eval(*k, f.pow(3), pt) == k->pow(fv, 3));
      CHECK(naive_eval(*k, f.frobenius(1), pt) == k->frobenius(naive_eval(*k, f, pt), 1));
      CHECK((f * g - g * f).is_zero());
      CHECK(((f + g) * g) == f * g + g * g);
    }
  }
}

TEST_CASE("polynomial structure") {
  const auto k = prime_field(3);
  const Poly x = Poly::variable(k, 0), y = Poly::variable(k, 1);
  const Poly f = x * x * y + y.scale(2) + Poly::constant(k, 1);
  CHECK(f.size() == 3);
  CHECK(f.total_degree() == 3);
  CHECK(f.leading().mono == Monomial::from_exponents(std::vector<unsigned>{2, 1}));
  CHECK(f.to_string({"x", "y"}) == "x^2*y + 2*y + 1");
  CHECK(f.derivative(0) == (x * y).scale(2));
  CHECK(f.derivative(1) == x * x + Poly::constant(k, 2));
  CHECK(f.frobenius(1) == f.pow(3));
  CHECK((f - f).is_zero());
  CHECK(f.make_monic() == f);
  CHECK(f.scale(2).make_monic() == f);
  CHECK(f.truncate_box({2, 0}) == y.scale(2) + Poly::constant(k, 1));
  CHECK(f.relocate({1, 0}) == y * y * x + x.scale(2) + Poly::constant(k, 1));
  CHECK((x * y).support() == std::vector<bool>{true, true, false, false, false, false, false, false});
}

TEST_CASE("ring_make examples and errors") {
  const auto f2 = prime_field(2);
  const Poly x = Poly::variable(f2, 0), y = Poly::variable(f2, 1), z = Poly::variable(f2, 2);
  const Poly q0 = z.pow(4) + x * y * z * z + (x.pow(3) + y.pow(3)) * z;
  const auto ring = PresentedRing<GaloisField>::make(f2, {"x", "y", "z"}, {q0});
  CHECK(ring->dimension() == 2);
  CHECK(PresentedRing<GaloisField>::make(prime_field(3), {"x"}, {})->dimension() == 1);

  const auto kt = std::make_shared<const RationalFunctionField>(FieldSpec::rational_function(2, "t"));
  using TPoly = Polynomial<RationalFunctionField>;
  const TPoly X = TPoly::variable(kt, 0), Y = TPoly::variable(kt, 1), Z = TPoly::variable(kt, 2);
  const TPoly qt = Z.pow(4) + X * Y * Z * Z + (X.pow(3) + Y.pow(3)) * Z + (X * X * Y * Y).scale(kt->generator());
  CHECK(PresentedRing<RationalFunctionField>::make(kt, {"x", "y", "z"}, {qt})->dimension() == 2);

  using R = PresentedRing<GaloisField>;
  CHECK_THROWS_AS(R::make(f2, {"x", "y"}, {x + Poly::constant(f2, 1), x}), InputError);  // unit ideal
  CHECK_THROWS_AS(R::make(f2, {"x", "x"}, {}), InputError);
  CHECK_THROWS_AS(R::make(f2, {"x", "y"}, {x + Poly::constant(f2, 1)}), InputError);  // origin misses relation
  CHECK_THROWS_AS(R::make(f2, {"x", "y"}, {}, std::vector<Poly>{x}), InputError);    // origin not maximal
  CHECK_THROWS_AS(R::make(f2, {"a", "b", "c", "d", "e", "f", "g", "h"}, {}), InputError);
  const auto shifted = R::make(f2, {"x", "y"}, {}, std::vector<Poly>{x + Poly::constant(f2, 1), y});
  CHECK(shifted->dimension() == 2);
}

TEST_CASE("ideal constructions") {
  const auto f2 = prime_field(2);
  const auto ring = PresentedRing<GaloisField>::make(f2, {"x", "y"}, {});
  const Ideal<GaloisField> ix(ring, {ring->variable(0)}), iy(ring, {ring->variable(1)});
  const auto m = ideal_sum(ix, iy);
  CHECK(m.equals(origin_ideal<GaloisField>(ring)));
  const auto m2 = ideal_power(m, 2);
  CHECK(m2.generators().size() == 3);
  CHECK(m2.equals(Ideal<GaloisField>(ring, {ring->variable(0).pow(2), ring->variable(0) * ring->variable(1),
                                             ring->variable(1).pow(2)})));
  CHECK(colength_finite(m2) == 3);
  CHECK(ideal_power(m, 5).equals(ideal_product(ideal_power(m, 2), ideal_power(m, 3))));
  CHECK(m.is_origin_primary());
  CHECK_FALSE(ix.is_origin_primary());
  CHECK(ix.dimension() == 1);
  CHECK_FALSE(ix.colength().finite);
  CHECK_THROWS_AS(colength_finite(ix), InputError);
  const auto other = PresentedRing<GaloisField>::make(f2, {"x", "y"}, {});
  CHECK_THROWS_AS(ideal_sum(ix, Ideal<GaloisField>(other, {other->variable(0)})), InputError);
}

TEST_CASE("ideal power identity on random ideals") {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t p = i % 2 ? 3 : 2;
    const auto ring = PresentedRing<GaloisField>::make(prime_field(p), {"x", "y", "z"}, {});
    std::vector<Poly> gens;
    for (int j = 0; j < 2; ++j) gens.push_back(random_poly(ring->field(), 3, 1, 2, 2, rng));
    const Ideal<GaloisField> ideal(ring, gens);
    const unsigned a = 1 + i % 2, b = 1 + (i / 2) % 2;
    CHECK(ideal_power(ideal, a + b).equals(ideal_product(ideal_power(ideal, a), ideal_power(ideal, b))));
  }
}

TEST_CASE("Brenner-Monsky maximal ideals") {
  const auto bm = load_finite("brenner_monsky.ring");
  const auto& ring = bm.ring;
  CHECK(ring->dimension() == 3);
  const auto& field = ring->field();
  const GaloisField::Elem alpha = field->generator();
  const auto m_alpha = ideal_sum(bm.ideal("p"), Ideal<GaloisField>(ring, {ring->variable(3) - ring->constant(alpha)}));
  CHECK(m_alpha.dimension() == 0);
  CHECK(colength_finite(m_alpha) == 1);
}

TEST_CASE("basis cache is shared and order specific") {
  const auto built = load_finite("a1_char2.ring");
  const auto m = built.ideal("m");
  const auto a = m.basis();
  const auto b = m.basis();
  CHECK(a.get() == b.get());
  const auto lex = m.basis(MonomialOrder::lex());
  CHECK(lex.get() != a.get());
  CHECK(satisfies_buchberger_criterion(*lex));
}
