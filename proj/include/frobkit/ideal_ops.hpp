#ifndef FROBKIT_IDEAL_OPS_HPP
#define FROBKIT_IDEAL_OPS_HPP

#include <vector>

#include "frobkit/ring.hpp"

namespace frobkit {

/// a / f in the polynomial ring; throws std::domain_error if f does not divide a.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& a, const Polynomial<K>& f);

/// Generators of (A) intersected with (B) in the ambient polynomial ring,
/// by elimination of an auxiliary variable.
template <class K>
std::vector<Polynomial<K>> intersect_generators(const std::shared_ptr<const K>& field,
                                                const std::vector<Polynomial<K>>& a,
                                                const std::vector<Polynomial<K>>& b);

/// Generators of (A) : f in the ambient polynomial ring.
template <class K>
std::vector<Polynomial<K>> colon_generators(const std::shared_ptr<const K>& field,
                                            const std::vector<Polynomial<K>>& a, const Polynomial<K>& f);

/// {g : g f in I}. Throws InputError for f = 0.
template <class K>
Ideal<K> ideal_colon(const Ideal<K>& ideal, const Polynomial<K>& f);

/// {g : g J in I}.
template <class K>
Ideal<K> ideal_colon_ideal(const Ideal<K>& ideal, const Ideal<K>& other);

template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& a, const Ideal<K>& b);

/// Stable value of I : J, I : J^2, ...
template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const Ideal<K>& other);

/// The ideal generated by its own reduced grevlex basis, dropping elements
/// that lie in the relation ideal.
template <class K>
Ideal<K> canonical_form(const Ideal<K>& ideal);

}  // namespace frobkit

#endif  // FROBKIT_IDEAL_OPS_HPP
