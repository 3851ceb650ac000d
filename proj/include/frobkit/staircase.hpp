#ifndef FROBKIT_STAIRCASE_HPP
#define FROBKIT_STAIRCASE_HPP

#include <span>
#include <vector>

#include "frobkit/monomial.hpp"
#include "frobkit/numeric.hpp"

namespace frobkit {

/// Number of standard monomials of a monomial ideal, or infinite.
struct StaircaseCount {
  bool finite = false;
  BigInt count = 0;
};

/// Minimal generating set, sorted by grevlex for determinism.
std::vector<Monomial> minimalize(std::span<const Monomial> gens);

/// Krull dimension of k[x_0..x_{n-1}]/(gens): the largest set of variables
/// containing the support of no generator.
unsigned monomial_ideal_dimension(std::span<const Monomial> gens, std::size_t nvars);

/// Staircase size. Inclusion-exclusion over the generators when there are at
/// most 20 of them, otherwise a slice sweep along the last variable whose
/// slices run in parallel under OpenMP.
StaircaseCount count_standard_monomials(std::span<const Monomial> gens, std::size_t nvars);

/// Serial slice sweep; reference implementation for the parallel path.
StaircaseCount count_standard_monomials_serial(std::span<const Monomial> gens, std::size_t nvars);

/// Parallel slice sweep regardless of generator count.
StaircaseCount count_standard_monomials_parallel(std::span<const Monomial> gens, std::size_t nvars);

/// Inclusion-exclusion over subsets of the minimal generators (<= 20 of them).
StaircaseCount count_standard_monomials_inclusion_exclusion(std::span<const Monomial> gens,
                                                            std::size_t nvars);

}  // namespace frobkit

#endif  // FROBKIT_STAIRCASE_HPP
