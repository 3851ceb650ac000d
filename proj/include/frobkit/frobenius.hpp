#ifndef FROBKIT_FROBENIUS_HPP
#define FROBKIT_FROBENIUS_HPP

#include <string>
#include <vector>

#include "frobkit/ideal_ops.hpp"

namespace frobkit {

/// p^e, throwing on overflow of 32 bits.
unsigned frobenius_q(std::uint32_t p, unsigned e);

/// I^{[p^e]}, generator-wise.
template <class K>
Ideal<K> frobenius_power(const Ideal<K>& ideal, unsigned e);

enum class ClosureStatus {
  definitive_member,  // z in I
  member_up_to,       // c z^q in I^[q] for every tested e
  non_member,         // c z^q not in I^[q] at the witness exponent
  frobenius_member,   // z^q in I^[q] at the witness exponent
  non_member_up_to,   // z^q not in I^[q] for every tested e
};

std::string to_string(ClosureStatus status);

struct ClosureVerdict {
  ClosureStatus status;
  unsigned exponent = 0;  // witness e, or the bound tested
  unsigned e_max = 0;
  std::string multiplier;  // c as text, "1" for Frobenius closure
  /// The verdict is definitive only if c is a genuine test element.
  bool conditional_on_test_element = false;
};

/// Semidecision for z in I*: checks c z^q in I^[q] for q = p, ..., p^e_max.
/// c must be a nonzerodivisor of the ring.
template <class K>
ClosureVerdict tc_membership(const Polynomial<K>& z, const Ideal<K>& ideal, const Polynomial<K>& c, unsigned e_max);

/// z^q in I^[q] for some e <= e_max.
template <class K>
ClosureVerdict frobenius_closure_membership(const Polynomial<K>& z, const Ideal<K>& ideal, unsigned e_max);

/// f^n reduced modulo the origin's Frobenius power after each product.
template <class K>
Polynomial<K> power_mod_bracket(const Polynomial<K>& f, unsigned long n, const Ideal<K>& bracket);

/// I_e = image of (m^[q] : f^(q-1)) for a hypersurface S/(f); m^[q] for a
/// polynomial ring. Requires a finite coefficient field.
template <class K>
Ideal<K> splitting_ideal(const typename PresentedRing<K>::Ptr& ring, unsigned e);

struct SplittingEntry {
  unsigned e;
  unsigned q;
  BigInt colength;
};

template <class K>
struct SplittingSequence {
  std::vector<Ideal<K>> ideals;
  std::vector<SplittingEntry> entries;
};

template <class K>
SplittingSequence<K> splitting_sequence(const typename PresentedRing<K>::Ptr& ring, unsigned e_max);

struct ChainCheck {
  bool contains_bracket = true;  // m^[q] in I_e for every e
  bool chain = true;             // I_e^[p] in I_{e+1}
  std::vector<std::string> failures;
};

template <class K>
ChainCheck check_splitting_chain(const SplittingSequence<K>& seq);

/// Nonzero partial derivative of the hypersurface relation outside (f):
/// highest degree, then fewest terms, then smallest support, then variable
/// order; returned monic.
template <class K>
Polynomial<K> jacobian_candidate(const typename PresentedRing<K>::Ptr& ring);

/// (0 : c) = 0 in R.
template <class K>
bool is_nonzerodivisor(const typename PresentedRing<K>::Ptr& ring, const Polynomial<K>& c);

}  // namespace frobkit

#endif  // FROBKIT_FROBENIUS_HPP
