#include "frobkit/invariants.hpp"

#include <algorithm>

#include "frobkit/parallel.hpp"

namespace frobkit {

namespace {

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

template <class F>
auto sweep(std::size_t n, bool parallel, F&& f) {
  return parallel ? parallel_map(n, std::forward<F>(f)) : serial_map(n, std::forward<F>(f));
}

template <class K>
void require_primary(const Ideal<K>& ideal) {
  if (!ideal.is_origin_primary()) throw InputError("the ideal " + ideal.to_string() + " is not primary to the origin");
}

}  // namespace

std::vector<Rational> cauchy_differences(const std::vector<HKRow>& rows) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < rows.size(); ++i) out.push_back(abs_value(rows[i].normalized - rows[i - 1].normalized));
  return out;
}

Estimate affine_fit(const std::vector<HKRow>& rows, const std::vector<Rational>& cauchy) {
  Estimate est;
  est.method = "affine-in-1/q";
  if (rows.empty()) return est;
  est.last_row = rows.back().normalized;
  const std::size_t k = std::min<std::size_t>(3, rows.size());
  const std::size_t start = rows.size() - k;
  if (k == 1) {
    est.value = est.last_row;
  } else {
    Rational mu = 0, my = 0;
    for (std::size_t i = start; i < rows.size(); ++i) {
      mu += Rational(1, rows[i].q);
      my += rows[i].normalized;
    }
    mu /= static_cast<int>(k);
    my /= static_cast<int>(k);
    Rational sxy = 0, sxx = 0;
    for (std::size_t i = start; i < rows.size(); ++i) {
      const Rational du = Rational(1, rows[i].q) - mu;
      sxy += du * (rows[i].normalized - my);
      sxx += du * du;
    }
    const Rational slope = sxy / sxx;
    est.value = my - slope * mu;
  }
  est.error_band = abs_value(est.value - est.last_row);
  if (!cauchy.empty()) est.error_band = std::max(est.error_band, cauchy.back());
  return est;
}

template <class K>
BigInt hk_function(const Ideal<K>& ideal, unsigned e) {
  require_primary(ideal);
  return colength_finite(frobenius_power(ideal, e));
}

template <class K>
HKReport ehk_estimate(const Ideal<K>& ideal, unsigned e_max, bool parallel) {
  if (e_max < 1) throw InputError("e_max must be at least 1");
  require_primary(ideal);
  const unsigned d = ideal.ring()->dimension();
  const auto p = ideal.ring()->characteristic();
  HKReport report;
  report.dimension = d;
  report.rows = sweep(e_max, parallel, [&](std::size_t i) {
    const unsigned e = static_cast<unsigned>(i) + 1;
    const unsigned q = frobenius_q(p, e);
    BigInt len = colength_finite(frobenius_power(ideal, e));
    Rational norm(len, ipow(BigInt(q), d));
    return HKRow{e, q, std::move(len), std::move(norm)};
  });
  report.cauchy = cauchy_differences(report.rows);
  report.estimate = affine_fit(report.rows, report.cauchy);
  return report;
}

template <class K>
MultiplicityResult hs_multiplicity(const typename PresentedRing<K>::Ptr& ring, const Polynomial<K>& x,
                                   unsigned n_max) {
  if (ring->dimension() != 1) throw InputError("multiplicity needs a one-dimensional ring");
  MultiplicityResult out;
  Polynomial<K> power = x;
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto c = Ideal<K>(ring, {power}).colength();
    if (!c.finite) throw InputError(ring->format(x) + " is not a parameter");
    out.lengths.push_back(c.count);
    const std::size_t k = out.lengths.size();
    if (k >= 3 && out.lengths[k - 1] - out.lengths[k - 2] == out.lengths[k - 2] - out.lengths[k - 3]) {
      out.multiplicity = (out.lengths[k - 1] - out.lengths[k - 2]).template convert_to<unsigned long>();
      out.colength_x = out.lengths[0].template convert_to<unsigned long>();
      out.cm_defect = static_cast<long>(out.colength_x) - static_cast<long>(out.multiplicity);
      return out;
    }
    power = power * x;
  }
  throw std::runtime_error("length differences did not stabilize");
}

template <class K>
FSigReport fsig_function(const typename PresentedRing<K>::Ptr& ring, unsigned e_max) {
  const auto seq = splitting_sequence<K>(ring, e_max);
  FSigReport report;
  report.dimension = ring->dimension();
  for (const auto& entry : seq.entries)
    report.rows.push_back(
        {entry.e, entry.q, entry.colength, Rational(entry.colength, ipow(BigInt(entry.q), report.dimension))});
  report.cauchy = cauchy_differences(report.rows);
  report.estimate.method = "last-row";
  report.estimate.last_row = report.rows.back().normalized;
  report.estimate.value = report.estimate.last_row;
  report.estimate.error_band = report.cauchy.empty() ? Rational(0) : report.cauchy.back();
  report.chain = check_splitting_chain(seq);
  return report;
}

template <class K>
DescentReport descent_sequence(const Ideal<K>& prime, const Polynomial<K>& x, unsigned n_max, unsigned e_max,
                               bool parallel) {
  const auto& ring = prime.ring();
  if (prime.dimension() != 1) throw InputError("descent needs a prime of dimension one");
  if (prime.contains(x)) throw InputError("the parameter lies in the prime");
  require_primary(ideal_sum(prime, Ideal<K>(ring, {x})));
  const unsigned d = ring->dimension();
  const auto p = ring->characteristic();

  DescentReport report;
  report.dimension = d;
  report.n_max = n_max;
  report.e_max = e_max;
  report.cells = sweep(std::size_t(n_max) * e_max, parallel, [&](std::size_t i) {
    const unsigned n = static_cast<unsigned>(i / e_max) + 1;
    const unsigned e = static_cast<unsigned>(i % e_max) + 1;
    const unsigned q = frobenius_q(p, e);
    const Ideal<K> cell = ideal_sum(frobenius_power(prime, e), Ideal<K>(ring, {x.pow(n * q)}));
    BigInt len = colength_finite(cell);
    Rational norm(len, BigInt(n) * ipow(BigInt(q), d));
    return DescentCell{n, e, q, std::move(len), std::move(norm)};
  });
  for (unsigned n = 1; n <= n_max; ++n) report.per_n_estimate.push_back(report.cell(n, e_max).normalized);
  for (unsigned e = 1; e <= e_max; ++e)
    for (unsigned n = 2; n <= n_max; ++n) {
      if (e >= 2 && report.cell(n, e).normalized > report.cell(n - 1, e).normalized)
        report.non_increasing_in_n = false;
      if (report.cell(n, e).colength > BigInt(n) * report.cell(1, e).colength) report.two_parameter_bound = false;
    }
  return report;
}

template <class K>
LechReport lech_check(const Ideal<K>& small, const Ideal<K>& large, unsigned e_max) {
  if (!large.contains(small)) throw InputError("the first ideal is not contained in the second");
  require_primary(small);
  const Ideal<K> origin(small.ring(), small.ring()->origin());
  const BigInt gap = colength_finite(small) - colength_finite(large);
  LechReport report;
  for (unsigned e = 1; e <= e_max; ++e) {
    LechRow row{e, colength_finite(frobenius_power(small, e)),
                gap * colength_finite(frobenius_power(origin, e)) + colength_finite(frobenius_power(large, e)), false};
    row.pass = row.lhs <= row.rhs;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

template <class K>
AssocReport assoc_check(const typename PresentedRing<K>::Ptr& ambient,
                        const std::vector<std::pair<Polynomial<K>, unsigned>>& factors, unsigned e_max) {
  if (!ambient->is_polynomial_ring()) throw InputError("associativity needs a polynomial ambient ring");
  if (factors.empty()) throw InputError("no factors given");
  const auto& field = ambient->field();
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (i == j) continue;
      // f_i, f_j coprime iff (f_i) : f_j = (f_i).
      const auto colon = colon_generators<K>(field, {factors[i].first}, factors[j].first);
      const auto lhs = groebner_basis<K>(field, colon, MonomialOrder::grevlex());
      const auto rhs = groebner_basis<K>(field, {factors[i].first}, MonomialOrder::grevlex());
      if (!lhs.same_as(rhs)) throw InputError("the factors are not pairwise coprime");
    }
  Polynomial<K> whole = ambient->one();
  for (const auto& [f, a] : factors) whole = whole * f.pow(a);
  auto hypersurface = [&](const Polynomial<K>& f) {
    return PresentedRing<K>::make(field, ambient->names(), {f}, ambient->origin());
  };
  const auto whole_ring = hypersurface(whole);
  std::vector<typename PresentedRing<K>::Ptr> parts;
  for (const auto& [f, a] : factors) parts.push_back(hypersurface(f));
  const unsigned d = whole_ring->dimension();

  AssocReport report;
  const auto p = ambient->characteristic();
  for (unsigned e = 1; e <= e_max; ++e) {
    const BigInt qd = ipow(BigInt(frobenius_q(p, e)), d);
    AssocRow row;
    row.e = e;
    row.whole = Rational(colength_finite(frobenius_power(origin_ideal<K>(whole_ring), e)), qd);
    row.weighted = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Rational c(colength_finite(frobenius_power(origin_ideal<K>(parts[i]), e)), qd);
      row.weighted += c * factors[i].second;
      row.components.push_back(std::move(c));
    }
    row.discrepancy = row.whole - row.weighted;
    if (!report.rows.empty() && abs_value(row.discrepancy) > abs_value(report.rows.back().discrepancy))
      report.shrinking = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

template <class K>
WYReport wy_inequality_check(const Ideal<K>& ideal, unsigned e_max) {
  const auto& ring = ideal.ring();
  const Ideal<K> origin(ring, ring->origin());
  const Ideal<K> bracket = frobenius_power(origin, 1);
  if (!bracket.contains(ideal)) throw InputError("the ideal is not contained in m^[p]");
  require_primary(ideal);
  const unsigned d = ring->dimension();
  const auto p = ring->characteristic();
  WYReport report;
  report.p_to_d = ipow(BigInt(p), d);
  report.bracket_colength = colength_finite(bracket);
  report.kunz_regular = report.p_to_d >= report.bracket_colength;
  const BigInt base = colength_finite(ideal);
  const BigInt gap = base - report.bracket_colength;
  for (unsigned e = 1; e <= e_max; ++e) {
    const unsigned q = frobenius_q(p, e);
    WYRow row;
    row.e = e;
    row.hk = colength_finite(frobenius_power(ideal, e));
    row.upper = gap * colength_finite(frobenius_power(origin, e)) + colength_finite(frobenius_power(bracket, e));
    row.lower = ipow(BigInt(q), d) * base;
    row.pass = row.hk <= row.upper;
    row.hypothesis = row.hk >= row.lower;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

#define FROBKIT_INSTANTIATE(K)                                                                                 \
  template BigInt hk_function(const Ideal<K>&, unsigned);                                                     \
  template HKReport ehk_estimate(const Ideal<K>&, unsigned, bool);                                            \
  template MultiplicityResult hs_multiplicity<K>(const typename PresentedRing<K>::Ptr&, const Polynomial<K>&, \
                                                 unsigned);                                                   \
  template FSigReport fsig_function<K>(const typename PresentedRing<K>::Ptr&, unsigned);                      \
  template DescentReport descent_sequence(const Ideal<K>&, const Polynomial<K>&, unsigned, unsigned, bool);   \
  template LechReport lech_check(const Ideal<K>&, const Ideal<K>&, unsigned);                                 \
  template AssocReport assoc_check<K>(const typename PresentedRing<K>::Ptr&,                                  \
                                      const std::vector<std::pair<Polynomial<K>, unsigned>>&, unsigned);      \
  template WYReport wy_inequality_check(const Ideal<K>&, unsigned);

FROBKIT_INSTANTIATE(GaloisField)
FROBKIT_INSTANTIATE(RationalFunctionField)

#undef FROBKIT_INSTANTIATE

}  // namespace frobkit
