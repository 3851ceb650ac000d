#include "frobkit/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>

#include "frobkit/parallel.hpp"

namespace frobkit {

unsigned frobenius_q(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint32_t>::max()) throw InputError("p^e exceeds 32 bits");
  }
  return static_cast<unsigned>(q);
}

std::string to_string(ClosureStatus status) {
  switch (status) {
    case ClosureStatus::definitive_member: return "definitive-member";
    case ClosureStatus::member_up_to: return "member-up-to";
    case ClosureStatus::non_member: return "non-member";
    case ClosureStatus::frobenius_member: return "member";
    case ClosureStatus::non_member_up_to: return "non-member-up-to";
  }
  return {};
}

template <class K>
Ideal<K> frobenius_power(const Ideal<K>& ideal, unsigned e) {
  std::vector<Polynomial<K>> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius(e));
  return Ideal<K>(ideal.ring(), std::move(gens));
}

template <class K>
bool is_nonzerodivisor(const typename PresentedRing<K>::Ptr& ring, const Polynomial<K>& c) {
  const Ideal<K> zero(ring, {});
  if (zero.contains(c)) return false;
  if (ring->relations().empty()) return true;
  return zero.contains(ideal_colon(zero, c));
}

template <class K>
ClosureVerdict tc_membership(const Polynomial<K>& z, const Ideal<K>& ideal, const Polynomial<K>& c,
                             unsigned e_max) {
  const auto& ring = ideal.ring();
  if (c.is_zero()) throw InputError("the multiplier c must be nonzero");
  if (!is_nonzerodivisor<K>(ring, c))
    throw InputError("the multiplier " + ring->format(c) + " is a zero divisor of the ring");
  ClosureVerdict v{ClosureStatus::member_up_to, e_max, e_max, ring->format(c), false};
  if (ideal.contains(z)) {
    v.status = ClosureStatus::definitive_member;
    v.exponent = 0;
    return v;
  }
  for (unsigned e = 1; e <= e_max; ++e) {
    const Ideal<K> bracket = frobenius_power(ideal, e);
    if (!bracket.contains(c * z.frobenius(e))) {
      v.status = ClosureStatus::non_member;
      v.exponent = e;
      v.conditional_on_test_element = true;
      return v;
    }
  }
  return v;
}

template <class K>
ClosureVerdict frobenius_closure_membership(const Polynomial<K>& z, const Ideal<K>& ideal, unsigned e_max) {
  ClosureVerdict v{ClosureStatus::non_member_up_to, e_max, e_max, "1", false};
  for (unsigned e = 0; e <= e_max; ++e) {
    const Ideal<K> bracket = e == 0 ? ideal : frobenius_power(ideal, e);
    if (bracket.contains(z.frobenius(e))) {
      v.status = ClosureStatus::frobenius_member;
      v.exponent = e;
      return v;
    }
  }
  return v;
}

template <class K>
Polynomial<K> power_mod_bracket(const Polynomial<K>& f, unsigned long n, const Ideal<K>& bracket) {
  const std::size_t nvars = bracket.ring()->nvars();
  // Pure-power generators allow plain truncation instead of normal forms.
  std::vector<unsigned> box(nvars, 0);
  bool monomial_box = true;
  for (const auto& g : bracket.generators()) {
    if (g.size() != 1) {
      monomial_box = false;
      break;
    }
    const Monomial& m = g.leading().mono;
    std::size_t var = kMaxVars;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) var = var == kMaxVars ? i : kMaxVars + 1;
    if (var >= nvars) {
      monomial_box = false;
      break;
    }
    if (box[var] == 0 || m[var] < box[var]) box[var] = m[var];
  }
  const bool every_var = monomial_box && std::none_of(box.begin(), box.end(), [](unsigned b) { return b == 0; });
  const std::shared_ptr<const GroebnerBasis<K>> basis =
      every_var ? nullptr : bracket.working_basis();
  auto reduce = [&](const Polynomial<K>& h) { return every_var ? h.truncate_box(box) : basis->normal_form(h); };

  Polynomial<K> result = reduce(Polynomial<K>::constant(f.field(), f.domain().one()));
  Polynomial<K> base = reduce(f);
  while (n) {
    if (n & 1) result = reduce(result * base);
    n >>= 1;
    if (n) base = reduce(base * base);
  }
  return result;
}

template <class K>
Ideal<K> splitting_ideal(const typename PresentedRing<K>::Ptr& ring, unsigned e) {
  if constexpr (std::is_same_v<K, RationalFunctionField>) {
    throw InputError("splitting ideals need a finite coefficient field");
  } else {
    if (ring->relations().size() > 1) throw InputError("splitting ideals need a hypersurface or polynomial ring");
    const Ideal<K> origin(ring, ring->origin());
    if (ring->relations().empty()) return frobenius_power(origin, e);
    const unsigned q = frobenius_q(ring->characteristic(), e);
    // Bracket power taken in S: the relation is not part of m_S^[q].
    const auto s = PresentedRing<K>::make(ring->field(), ring->names(), {}, ring->origin());
    const Ideal<K> bracket = frobenius_power(Ideal<K>(s, ring->origin()), e);
    const auto g = power_mod_bracket(ring->relations().front(), q - 1, bracket);
    if (g.is_zero()) return Ideal<K>(ring, {ring->one()});
    return Ideal<K>(ring, colon_generators<K>(ring->field(), bracket.generators(), g));
  }
}

template <class K>
SplittingSequence<K> splitting_sequence(const typename PresentedRing<K>::Ptr& ring, unsigned e_max) {
  SplittingSequence<K> seq;
  auto cells = parallel_map(e_max, [&](std::size_t i) {
    const unsigned e = static_cast<unsigned>(i) + 1;
    Ideal<K> ideal = splitting_ideal<K>(ring, e);
    BigInt len = colength_finite(ideal);
    return std::make_pair(ideal, SplittingEntry{e, frobenius_q(ring->characteristic(), e), len});
  });
  for (auto& [ideal, entry] : cells) {
    seq.ideals.push_back(std::move(ideal));
    seq.entries.push_back(std::move(entry));
  }
  return seq;
}

template <class K>
ChainCheck check_splitting_chain(const SplittingSequence<K>& seq) {
  ChainCheck out;
  for (std::size_t i = 0; i < seq.ideals.size(); ++i) {
    const auto& ideal = seq.ideals[i];
    const unsigned e = seq.entries[i].e;
    const Ideal<K> origin(ideal.ring(), ideal.ring()->origin());
    if (!ideal.contains(frobenius_power(origin, e))) {
      out.contains_bracket = false;
      out.failures.push_back("m^[q] not in I_" + std::to_string(e));
    }
    if (i + 1 < seq.ideals.size() && !seq.ideals[i + 1].contains(frobenius_power(ideal, 1))) {
      out.chain = false;
      out.failures.push_back("I_" + std::to_string(e) + "^[p] not in I_" + std::to_string(e + 1));
    }
  }
  return out;
}

template <class K>
Polynomial<K> jacobian_candidate(const typename PresentedRing<K>::Ptr& ring) {
  if (ring->relations().size() != 1) throw InputError("test-element candidates need a hypersurface");
  const auto& f = ring->relations().front();
  const Ideal<K> zero(ring, {});
  std::optional<Polynomial<K>> best;
  auto support = [](const Polynomial<K>& g) {
    const auto s = g.support();
    return std::count(s.begin(), s.end(), true);
  };
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    auto d = f.derivative(i);
    if (d.is_zero() || zero.contains(d)) continue;
    d = d.make_monic();
    if (!best) {
      best = d;
      continue;
    }
    const auto key = [&](const Polynomial<K>& g) {
      return std::make_tuple(-static_cast<long>(g.total_degree()), g.size(), support(g));
    };
    if (key(d) < key(*best)) best = d;
  }
  if (!best) throw InputError("every partial derivative vanishes modulo the relation; supply a test element");
  return *best;
}

#define FROBKIT_INSTANTIATE(K)                                                                               \
  template Ideal<K> frobenius_power(const Ideal<K>&, unsigned);                                             \
  template bool is_nonzerodivisor<K>(const typename PresentedRing<K>::Ptr&, const Polynomial<K>&);          \
  template ClosureVerdict tc_membership(const Polynomial<K>&, const Ideal<K>&, const Polynomial<K>&, unsigned); \
  template ClosureVerdict frobenius_closure_membership(const Polynomial<K>&, const Ideal<K>&, unsigned);     \
  template Polynomial<K> power_mod_bracket(const Polynomial<K>&, unsigned long, const Ideal<K>&);           \
  template Ideal<K> splitting_ideal<K>(const typename PresentedRing<K>::Ptr&, unsigned);                    \
  template SplittingSequence<K> splitting_sequence<K>(const typename PresentedRing<K>::Ptr&, unsigned);     \
  template ChainCheck check_splitting_chain(const SplittingSequence<K>&);                                   \
  template Polynomial<K> jacobian_candidate<K>(const typename PresentedRing<K>::Ptr&);

FROBKIT_INSTANTIATE(GaloisField)
FROBKIT_INSTANTIATE(RationalFunctionField)

#undef FROBKIT_INSTANTIATE

}  // namespace frobkit
