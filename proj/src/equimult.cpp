#include "frobkit/equimult.hpp"

#include <algorithm>

#include "frobkit/parallel.hpp"

namespace frobkit {

namespace {

/// Slot map sending t to the last used slot and the other variables down in order.
std::vector<std::size_t> t_last_map(std::size_t nvars, std::size_t t) {
  std::vector<std::size_t> map(nvars);
  std::size_t next = 0;
  for (std::size_t i = 0; i < nvars; ++i) map[i] = i == t ? nvars - 1 : next++;
  return map;
}

std::vector<Polynomial<GaloisField>> relocated_generators(const FiniteIdeal& ideal, std::size_t t) {
  const auto map = t_last_map(ideal.ring()->nvars(), t);
  std::vector<Polynomial<GaloisField>> out;
  for (const auto& r : ideal.ring()->relations()) out.push_back(r.relocate(map));
  for (const auto& g : ideal.generators()) out.push_back(g.relocate(map));
  return out;
}

/// Re-read a polynomial over k(t) with t in the coefficients; throws if a
/// coefficient leaves the prime field.
Polynomial<RationalFunctionField> to_fiber(const Polynomial<GaloisField>& f, std::size_t t,
                                           const std::shared_ptr<const RationalFunctionField>& kt) {
  std::vector<Term<RationalFunctionField>> terms;
  for (const auto& term : f.terms()) {
    if (!f.domain().in_prime_subfield(term.coeff)) throw InputError("coefficient outside the prime field");
    Monomial m;
    std::size_t next = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (i == t) continue;
      if (term.mono[i]) m.set(next, term.mono[i]);
      ++next;
    }
    UniPoly num(term.mono[t] + 1, 0);
    num[term.mono[t]] = term.coeff;
    terms.push_back({m, kt->make(std::move(num), {1})});
  }
  return Polynomial<RationalFunctionField>::from_terms(kt, std::move(terms));
}

bool coefficients_in_prime_field(const std::vector<Polynomial<GaloisField>>& polys) {
  for (const auto& f : polys)
    for (const auto& t : f.terms())
      if (!f.domain().in_prime_subfield(t.coeff)) return false;
  return true;
}

bool has_parameter_shape(const FiniteIdeal& prime, std::size_t t) {
  const std::size_t n = prime.ring()->nvars();
  const auto gens = relocated_generators(prime, t);
  const auto basis = groebner_basis<GaloisField>(prime.ring()->field(), gens, MonomialOrder::block(
                                                                                  static_cast<unsigned>(n - 1)));
  if (basis.is_unit()) return false;
  for (const auto& e : basis.elements()) {
    bool only_t = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (e.lead[i]) only_t = false;
    if (only_t) return false;  // P meets k[t]
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const auto r = basis.normal_form(Polynomial<GaloisField>::variable(prime.ring()->field(), j));
    for (const auto& term : r.terms())
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (term.mono[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::size_t> find_parameter_variable(const FiniteIdeal& prime) {
  for (std::size_t t = 0; t < prime.ring()->nvars(); ++t)
    if (has_parameter_shape(prime, t)) return t;
  return std::nullopt;
}

FiberPresentation fiber_presentation(const FiniteIdeal& prime, std::size_t t_index) {
  const auto& ring = prime.ring();
  if (t_index >= ring->nvars()) throw InputError("parameter variable out of range");
  if (ring->nvars() < 2) throw InputError("localization needs at least two variables");
  if (!has_parameter_shape(prime, t_index))
    throw InputError("R/P is not a polynomial ring in " + ring->names()[t_index]);
  FiberPresentation fp{ring, prime, t_index, nullptr, std::nullopt, ring->dimension() - 1};

  std::vector<Polynomial<GaloisField>> all = ring->relations();
  all.insert(all.end(), prime.generators().begin(), prime.generators().end());
  if (!coefficients_in_prime_field(all)) return fp;

  const auto kt = std::make_shared<const RationalFunctionField>(
      FieldSpec::rational_function(ring->characteristic(), ring->names()[t_index]));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (i != t_index) names.push_back(ring->names()[i]);
  std::vector<Polynomial<RationalFunctionField>> rels, origin;
  for (const auto& r : ring->relations()) rels.push_back(to_fiber(r, t_index, kt));
  for (const auto& g : prime.generators()) origin.push_back(to_fiber(g, t_index, kt));
  fp.fiber = FiberRing::make(kt, std::move(names), std::move(rels), origin);
  fp.prime_image.emplace(fp.fiber, std::move(origin));
  if (fp.fiber->dimension() != fp.fiber_dimension) throw InputError("fiber dimension mismatch");
  return fp;
}

BigInt fiber_colength_block(const FiniteIdeal& prime, std::size_t t_index, unsigned e) {
  const std::size_t n = prime.ring()->nvars();
  const auto gens = relocated_generators(frobenius_power(prime, e), t_index);
  const auto basis = groebner_basis<GaloisField>(prime.ring()->field(), gens,
                                                 MonomialOrder::block(static_cast<unsigned>(n - 1)), {false});
  std::vector<Monomial> xparts;
  for (auto m : basis.leading_monomials()) {
    m.set(n - 1, 0);
    xparts.push_back(m);
  }
  const auto c = count_standard_monomials(xparts, n - 1);
  if (!c.finite) throw InputError("the fiber quotient is not finite dimensional");
  return c.count;
}

BigInt fiber_colength(const FiberPresentation& fp, unsigned e) {
  if (!fp.uses_fiber_ring()) return fiber_colength_block(fp.prime, fp.t_index, e);
  return colength_finite(frobenius_power(*fp.prime_image, e));
}

HKReport localized_hk(const FiberPresentation& fp, unsigned e_max, bool parallel) {
  HKReport report;
  report.dimension = fp.fiber_dimension;
  const auto p = fp.ring->characteristic();
  auto cell = [&](std::size_t i) {
    const unsigned e = static_cast<unsigned>(i) + 1;
    const unsigned q = frobenius_q(p, e);
    BigInt len = fiber_colength(fp, e);
    Rational norm(len, ipow(BigInt(q), fp.fiber_dimension));
    return HKRow{e, q, std::move(len), std::move(norm)};
  };
  report.rows = parallel ? parallel_map(e_max, cell) : serial_map(e_max, cell);
  report.cauchy = cauchy_differences(report.rows);
  report.estimate = affine_fit(report.rows, report.cauchy);
  return report;
}

FiniteRing::Ptr specialize_parameter(const FiniteIdeal& prime, std::size_t t_index, GaloisField::Elem alpha) {
  const auto& ring = prime.ring();
  const auto& field = ring->field();
  auto substitute = [&](const Polynomial<GaloisField>& f) {
    std::vector<Term<GaloisField>> terms;
    for (const auto& term : f.terms()) {
      Monomial m;
      std::size_t next = 0;
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (i == t_index) continue;
        if (term.mono[i]) m.set(next, term.mono[i]);
        ++next;
      }
      terms.push_back({m, field->mul(term.coeff, field->pow(alpha, term.mono[t_index]))});
    }
    return Polynomial<GaloisField>::from_terms(field, std::move(terms));
  };
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (i != t_index) names.push_back(ring->names()[i]);
  std::vector<Polynomial<GaloisField>> rels, origin;
  for (const auto& r : ring->relations()) rels.push_back(substitute(r));
  for (const auto& g : prime.generators()) origin.push_back(substitute(g));
  return FiniteRing::make(field, std::move(names), std::move(rels), std::move(origin));
}

std::string to_string(EquimultStatus status) {
  switch (status) {
    case EquimultStatus::consistent: return "consistent";
    case EquimultStatus::violates_necessary_condition: return "violates-necessary-condition";
    case EquimultStatus::inconclusive: return "inconclusive";
  }
  return {};
}

EquimultVerdict equimult_check(const FiniteIdeal& prime, const Polynomial<GaloisField>& c, unsigned e_max,
                               unsigned tc_e_max) {
  const auto& ring = prime.ring();
  if (prime.dimension() != 1) throw InputError("equimultiplicity needs a prime of dimension one");
  const FiniteIdeal origin(ring, ring->origin());
  EquimultVerdict verdict;
  verdict.multiplier = ring->format(c);
  verdict.tc_e_max = tc_e_max;
  for (unsigned e = 1; e <= e_max; ++e) {
    const FiniteIdeal bracket = frobenius_power(prime, e);
    const FiniteIdeal sat = saturate(bracket, origin);
    EquimultRecord record{e, sat.generators().size(), {}};
    for (const auto& z : sat.generators()) {
      if (bracket.contains(z)) continue;
      SaturationWitness w{ring->format(z), frobenius_closure_membership(z, bracket, tc_e_max),
                          tc_membership(z, bracket, c, tc_e_max)};
      if (w.tight_closure.status == ClosureStatus::non_member && !verdict.witness) {
        verdict.witness = w.element;
        verdict.witness_e = e;
        verdict.conditional_on_test_element = true;
      }
      record.extras.push_back(std::move(w));
    }
    verdict.records.push_back(std::move(record));
  }
  if (verdict.witness) verdict.status = EquimultStatus::violates_necessary_condition;
  else if (e_max > 0) verdict.status = EquimultStatus::consistent;
  return verdict;
}

IdentityReport colength_identity_check(const FiberPresentation& fp, const Polynomial<GaloisField>& x,
                                       unsigned e_max) {
  const auto& ring = fp.ring;
  if (fp.prime.contains(x)) throw InputError("the parameter lies in the prime");
  std::vector<Polynomial<GaloisField>> rels = ring->relations();
  rels.insert(rels.end(), fp.prime.generators().begin(), fp.prime.generators().end());
  const auto quotient = FiniteRing::make(ring->field(), ring->names(), rels, ring->origin());
  IdentityReport report;
  report.multiplicity = hs_multiplicity<GaloisField>(quotient, x).multiplicity;
  for (unsigned e = 1; e <= e_max; ++e) {
    IdentityRow row;
    row.e = e;
    row.lhs = colength_finite(ideal_sum(frobenius_power(fp.prime, e), FiniteIdeal(ring, {x})));
    row.rhs = BigInt(report.multiplicity) * fiber_colength(fp, e);
    row.residual = row.lhs - row.rhs;
    if (row.residual != 0) report.all_zero = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

RigidityReport rigidity_check(const FiberPresentation& fp, unsigned e_max) {
  const auto& ring = fp.ring;
  const unsigned quotient_dim = fp.prime.dimension();
  if (quotient_dim + fp.fiber_dimension != ring->dimension()) throw InputError("dimension mismatch");
  const FiniteIdeal origin(ring, ring->origin());
  RigidityReport report;
  for (unsigned e = 1; e <= e_max; ++e) {
    const unsigned q = frobenius_q(ring->characteristic(), e);
    RigidityRow row{e, colength_finite(frobenius_power(origin, e)),
                    ipow(BigInt(q), quotient_dim) * fiber_colength(fp, e), false};
    row.pass = row.ambient == row.scaled;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<LocalizationRow> localization_surrogate(const FiberPresentation& fp, unsigned e_max) {
  const auto& ring = fp.ring;
  const unsigned quotient_dim = fp.prime.dimension();
  const FiniteIdeal origin(ring, ring->origin());
  std::vector<LocalizationRow> rows;
  for (unsigned e = 1; e <= e_max; ++e) {
    const unsigned q = frobenius_q(ring->characteristic(), e);
    LocalizationRow row{e, ipow(BigInt(q), quotient_dim) * fiber_colength(fp, e),
                        colength_finite(frobenius_power(origin, e)), 0};
    row.slack = row.fiber_scaled - row.ambient;
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
FiltrationReport filtration_check(const Ideal<K>& ideal, const std::function<Ideal<K>(unsigned)>& sequence,
                                  unsigned e_max) {
  if (!ideal.is_origin_primary()) throw InputError("the ideal is not primary to the origin");
  const unsigned d = ideal.ring()->dimension();
  std::vector<Ideal<K>> filtration;
  for (unsigned e = 1; e <= e_max; ++e) filtration.push_back(sequence(e));
  FiltrationReport report;
  for (unsigned e = 1; e <= e_max; ++e) {
    const auto& l = filtration[e - 1];
    const Ideal<K> bracket = frobenius_power(ideal, e);
    const BigInt qd = ipow(BigInt(frobenius_q(ideal.ring()->characteristic(), e)), d);
    FiltrationRow row{e, Rational(colength_finite(bracket), qd), Rational(colength_finite(l), qd),
                      l.contains(bracket), true};
    if (e < e_max) row.chain = filtration[e].contains(frobenius_power(l, 1));
    if (!row.contains_bracket) report.failures.push_back("I^[q] not in L_" + std::to_string(e));
    if (!row.chain) report.failures.push_back("L_" + std::to_string(e) + "^[p] not in L_" + std::to_string(e + 1));
    report.hypotheses = report.hypotheses && row.contains_bracket && row.chain;
    report.rows.push_back(std::move(row));
  }
  report.trends_match =
      !report.rows.empty() && report.rows.back().bracket_normalized == report.rows.back().filtration_normalized;
  return report;
}

template <class K>
typename PresentedRing<K>::Ptr monsky_quartic(const std::shared_ptr<const K>& field, typename K::Elem alpha) {
  using Poly = Polynomial<K>;
  const Poly x = Poly::variable(field, 0), y = Poly::variable(field, 1), z = Poly::variable(field, 2);
  Poly f = z.pow(4) + x * y * z.pow(2) + (x.pow(3) + y.pow(3)) * z + (x * x * y * y).scale(alpha);
  return PresentedRing<K>::make(field, {"x", "y", "z"}, {f});
}

MonskyResult monsky_repro(const MonskySpec& spec, unsigned e_max) {
  MonskyResult out;
  switch (spec.kind) {
    case MonskySpec::Kind::zero: {
      const auto field = std::make_shared<const GaloisField>(FieldSpec::prime(2));
      const auto ring = monsky_quartic<GaloisField>(field, 0);
      out.alpha = "0";
      out.field = field->spec()->describe();
      out.target = Rational(7, 2);
      out.report = ehk_estimate(origin_ideal<GaloisField>(ring), e_max);
      break;
    }
    case MonskySpec::Kind::algebraic: {
      const auto fs = FieldSpec::extension(2, spec.lambda_modulus);
      const auto field = std::make_shared<const GaloisField>(fs);
      const auto lambda = field->generator();
      const auto alpha = field->add(field->mul(lambda, lambda), lambda);
      const auto ring = monsky_quartic<GaloisField>(field, alpha);
      out.alpha = field->to_string(alpha);
      out.field = fs->describe();
      out.m = fs->degree();
      out.target = Rational(3) + Rational(1, ipow(BigInt(4), out.m));
      out.report = ehk_estimate(origin_ideal<GaloisField>(ring), e_max);
      break;
    }
    case MonskySpec::Kind::transcendental: {
      const auto field = std::make_shared<const RationalFunctionField>(FieldSpec::rational_function(2, "t"));
      const auto ring = monsky_quartic<RationalFunctionField>(field, field->generator());
      out.alpha = "t";
      out.field = field->spec()->describe();
      out.target = Rational(3);
      out.report = ehk_estimate(origin_ideal<RationalFunctionField>(ring), e_max);
      break;
    }
  }
  return out;
}

BMReport brenner_monsky(unsigned e_min, unsigned e_max) {
  const auto f4 = std::make_shared<const GaloisField>(FieldSpec::extension(2, {1, 1, 1}));
  using Poly = Polynomial<GaloisField>;
  const Poly x = Poly::variable(f4, 0), y = Poly::variable(f4, 1), z = Poly::variable(f4, 2),
             t = Poly::variable(f4, 3);
  const Poly f = z.pow(4) + x * y * z.pow(2) + (x.pow(3) + y.pow(3)) * z + t * x * x * y * y;
  const auto ring = FiniteRing::make(f4, {"x", "y", "z", "t"}, {f});
  const FiniteIdeal prime(ring, {x, y, z});
  const FiberPresentation fp = fiber_presentation(prime, 3);

  const std::size_t ne = e_max - e_min + 1;
  const auto fiber = parallel_map(ne, [&](std::size_t i) { return fiber_colength(fp, e_min + unsigned(i)); });
  const std::vector<GaloisField::Elem> alphas{0, 1, f4->generator(), f4->add(f4->generator(), 1)};
  auto rows = parallel_map(alphas.size() * ne, [&](std::size_t i) {
    const auto alpha = alphas[i / ne];
    const unsigned e = e_min + static_cast<unsigned>(i % ne);
    const unsigned q = frobenius_q(2, e);
    BMRow row;
    row.alpha = f4->to_string(alpha);
    row.e = e;
    row.q = q;
    row.quartic_colength = colength_finite(frobenius_power(origin_ideal<GaloisField>(monsky_quartic(f4, alpha)), e));
    const Poly shift = t - Poly::constant(f4, alpha);
    row.specialized = colength_finite(ideal_sum(frobenius_power(prime, e), FiniteIdeal(ring, {shift})));
    row.fiber_colength = fiber[i % ne];
    row.gap = Rational(row.quartic_colength - row.fiber_colength, BigInt(q) * q);
    row.consistent = row.quartic_colength == row.specialized;
    return row;
  });
  BMReport report;
  for (auto& r : rows) {
    if (report.rows.empty() || r.gap < report.min_gap) report.min_gap = r.gap;
    report.consistency = report.consistency && r.consistent;
    report.rows.push_back(std::move(r));
  }
  return report;
}

template FiltrationReport filtration_check(const Ideal<GaloisField>&,
                                           const std::function<Ideal<GaloisField>(unsigned)>&, unsigned);
template FiltrationReport filtration_check(const Ideal<RationalFunctionField>&,
                                           const std::function<Ideal<RationalFunctionField>(unsigned)>&, unsigned);
template PresentedRing<GaloisField>::Ptr monsky_quartic(const std::shared_ptr<const GaloisField>&,
                                                        GaloisField::Elem);
template PresentedRing<RationalFunctionField>::Ptr monsky_quartic(
    const std::shared_ptr<const RationalFunctionField>&, RationalFunctionField::Elem);

}  // namespace frobkit
