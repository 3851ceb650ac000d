#ifndef FROBKIT_TESTS_SUPPORT_HPP
#define FROBKIT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frobkit/dsl.hpp"
#include "frobkit/equimult.hpp"

namespace frobkit::testing {

using Rng = std::mt19937_64;
using FPoly = Polynomial<GaloisField>;

std::shared_ptr<const GaloisField> prime_field(std::uint32_t p);

/// Directory holding the bundled .ring files.
std::string corpus_dir();
std::vector<std::string> corpus_files();
RingSpecDocument load_corpus(const std::string& name);
BuiltSpec<GaloisField> load_finite(const std::string& name);
BuiltSpec<GaloisField> spec_from(const std::string& text);

/// Random polynomial with up to `terms` terms of total degree in [lo, hi].
FPoly random_poly(const std::shared_ptr<const GaloisField>& field, std::size_t nvars, unsigned lo, unsigned hi,
                  unsigned terms, Rng& rng);
FPoly random_homogeneous(const std::shared_ptr<const GaloisField>& field, std::size_t nvars, unsigned degree,
                         unsigned terms, Rng& rng);
Monomial random_monomial(std::size_t nvars, unsigned max_exp, Rng& rng);

// Independent oracles; none of them touch the Groebner kernel.

/// Lattice points of [0, box_i) not divisible by any generator.
std::uint64_t brute_force_staircase(const std::vector<Monomial>& gens, const std::vector<unsigned>& box);

/// f evaluated at a point of F_p^n (prime fields only).
std::uint32_t evaluate(const FPoly& f, const std::vector<std::uint32_t>& point);

/// dim_k of (span of u*g for monomials u) in the box k[x]/(x_i^{box_i}),
/// by dense elimination over F_p. For m^[q] : g this is l(S/(m^[q] : g)).
std::uint64_t box_span_rank(const std::vector<FPoly>& gens, const std::vector<unsigned>& box, std::uint32_t p);

/// l(S/(gens + (x_i^{box_i}))) by the same elimination; equals the colength
/// of the ideal whenever the pure powers already lie in it.
std::uint64_t box_colength(const std::vector<FPoly>& gens, const std::vector<unsigned>& box, std::uint32_t p);

}  // namespace frobkit::testing

#endif  // FROBKIT_TESTS_SUPPORT_HPP
