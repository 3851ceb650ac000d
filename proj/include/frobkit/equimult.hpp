#ifndef FROBKIT_EQUIMULT_HPP
#define FROBKIT_EQUIMULT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/invariants.hpp"

namespace frobkit {

using FiniteRing = PresentedRing<GaloisField>;
using FiniteIdeal = Ideal<GaloisField>;
using FiberRing = PresentedRing<RationalFunctionField>;
using FiberIdeal = Ideal<RationalFunctionField>;

/// R localized at a prime P with R/P = k[t]: the relations re-read over k(t)
/// with t moved into the coefficients. The fiber ring is only built when all
/// coefficients lie in the prime field; otherwise colengths over k(t) are
/// taken from a block-order basis over k[t].
struct FiberPresentation {
  FiniteRing::Ptr ring;
  FiniteIdeal prime;
  std::size_t t_index = 0;
  FiberRing::Ptr fiber;  // null when coefficients leave the prime field
  std::optional<FiberIdeal> prime_image;
  unsigned fiber_dimension = 0;
  bool uses_fiber_ring() const { return fiber != nullptr; }
};

/// Validates R/P = k[t] and builds the presentation.
FiberPresentation fiber_presentation(const FiniteIdeal& prime, std::size_t t_index);

/// The variable t for which R/P = k[t], if any.
std::optional<std::size_t> find_parameter_variable(const FiniteIdeal& prime);

/// Colength over k(t) of the image of P^[q].
BigInt fiber_colength(const FiberPresentation& fp, unsigned e);

/// Same number from a block-order basis of P^[q] over k[t] (x-block first).
BigInt fiber_colength_block(const FiniteIdeal& prime, std::size_t t_index, unsigned e);

/// Rows of l_fiber(P^[q]) / q^(d-1).
HKReport localized_hk(const FiberPresentation& fp, unsigned e_max, bool parallel = true);

/// The presentation at t = alpha: t dropped, origin = image of P.
FiniteRing::Ptr specialize_parameter(const FiniteIdeal& prime, std::size_t t_index, GaloisField::Elem alpha);

enum class EquimultStatus { consistent, violates_necessary_condition, inconclusive };
std::string to_string(EquimultStatus status);

struct SaturationWitness {
  std::string element;
  ClosureVerdict frobenius_closure;
  ClosureVerdict tight_closure;
};

struct EquimultRecord {
  unsigned e;
  std::size_t saturation_size = 0;
  std::vector<SaturationWitness> extras;  // saturation elements outside P^[q]
};

struct EquimultVerdict {
  EquimultStatus status = EquimultStatus::inconclusive;
  std::string multiplier;
  unsigned tc_e_max = 0;
  std::vector<EquimultRecord> records;
  std::optional<unsigned> witness_e;
  std::optional<std::string> witness;
  bool conditional_on_test_element = false;
  bool unmixedness_warranted_by_caller = true;
};

EquimultVerdict equimult_check(const FiniteIdeal& prime, const Polynomial<GaloisField>& c, unsigned e_max,
                               unsigned tc_e_max);

struct IdentityRow {
  unsigned e;
  BigInt lhs;  // l(R/(P^[q] + xR))
  BigInt rhs;  // e(xR/P) l_fiber(P^[q])
  BigInt residual;
};

struct IdentityReport {
  unsigned long multiplicity = 0;  // e(xR/P)
  std::vector<IdentityRow> rows;
  bool all_zero = true;
};

IdentityReport colength_identity_check(const FiberPresentation& fp, const Polynomial<GaloisField>& x,
                                       unsigned e_max);

struct RigidityRow {
  unsigned e;
  BigInt ambient;  // l(R/m^[q])
  BigInt scaled;   // q^dim(R/P) l_fiber(P^[q])
  bool pass;
};

struct RigidityReport {
  std::vector<RigidityRow> rows;
  bool pass = true;
  bool weak_f_regularity_warranted_by_caller = true;
};

RigidityReport rigidity_check(const FiberPresentation& fp, unsigned e_max);

/// Localization surrogate: l_fiber(P^[q]) q^dim(R/P) <= l(R/m^[q]) + slack,
/// with the slack (possibly negative) recorded per row.
struct LocalizationRow {
  unsigned e;
  BigInt fiber_scaled;
  BigInt ambient;
  BigInt slack;  // fiber_scaled - ambient
};
std::vector<LocalizationRow> localization_surrogate(const FiberPresentation& fp, unsigned e_max);

struct FiltrationRow {
  unsigned e;
  Rational bracket_normalized;  // l(R/I^[q]) / q^d
  Rational filtration_normalized;  // l(R/L_e) / q^d
  bool contains_bracket;  // I^[q] in L_e
  bool chain;             // L_e^[p] in L_{e+1}
};

struct FiltrationReport {
  std::vector<FiltrationRow> rows;
  bool hypotheses = true;
  bool trends_match = false;  // equal normalized colengths at the last e
  std::vector<std::string> failures;
};

template <class K>
FiltrationReport filtration_check(const Ideal<K>& ideal, const std::function<Ideal<K>(unsigned)>& sequence,
                                  unsigned e_max);

/// The Monsky quartic z^4 + xyz^2 + (x^3+y^3)z + alpha x^2y^2.
template <class K>
typename PresentedRing<K>::Ptr monsky_quartic(const std::shared_ptr<const K>& field, typename K::Elem alpha);

struct MonskySpec {
  enum class Kind { zero, algebraic, transcendental } kind = Kind::zero;
  UniPoly lambda_modulus;  // irreducible over F_2, for the algebraic case
};

struct MonskyResult {
  std::string alpha;
  std::string field;
  unsigned m = 0;  // [F_2(lambda) : F_2]
  Rational target;
  HKReport report;
};

MonskyResult monsky_repro(const MonskySpec& spec, unsigned e_max);

struct BMRow {
  std::string alpha;
  unsigned e;
  unsigned q;
  BigInt quartic_colength;   // l(Q_alpha / m^[q]) over F_4
  BigInt specialized;        // l(R/(P^[q], t - alpha)) in the four-variable ring
  BigInt fiber_colength;     // l over F_2(t)
  Rational gap;              // (quartic - fiber) / q^2
  bool consistent;
};

struct BMReport {
  std::vector<BMRow> rows;
  Rational min_gap;
  bool consistency = true;
};

/// Brenner-Monsky comparison at every alpha in F_4 for e = e_min..e_max.
BMReport brenner_monsky(unsigned e_min, unsigned e_max);

}  // namespace frobkit

#endif  // FROBKIT_EQUIMULT_HPP
