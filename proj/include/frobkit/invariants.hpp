#ifndef FROBKIT_INVARIANTS_HPP
#define FROBKIT_INVARIANTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/frobenius.hpp"

namespace frobkit {

struct HKRow {
  unsigned e;
  unsigned q;
  BigInt colength;
  Rational normalized;  // colength / q^d
};

struct Estimate {
  Rational value;
  Rational error_band;
  std::string method;
  Rational last_row;
};

struct HKReport {
  unsigned dimension = 0;
  std::vector<HKRow> rows;
  std::vector<Rational> cauchy;  // |row(e+1) - row(e)|
  Estimate estimate;
};

struct FSigReport {
  unsigned dimension = 0;
  std::vector<HKRow> rows;  // colength = l(R/I_e)
  std::vector<Rational> cauchy;
  Estimate estimate;
  ChainCheck chain;
};

/// Least squares y = a + b/q over the last three rows (fewer if unavailable).
Estimate affine_fit(const std::vector<HKRow>& rows, const std::vector<Rational>& cauchy);
std::vector<Rational> cauchy_differences(const std::vector<HKRow>& rows);

/// l(R/I^[q]) for q = p^e.
template <class K>
BigInt hk_function(const Ideal<K>& ideal, unsigned e);

/// Rows for e = 1..e_max plus the affine-in-1/q estimate.
template <class K>
HKReport ehk_estimate(const Ideal<K>& ideal, unsigned e_max, bool parallel = true);

struct MultiplicityResult {
  unsigned long multiplicity = 0;
  unsigned long colength_x = 0;  // l(S/xS)
  long cm_defect = 0;
  std::vector<BigInt> lengths;  // l(S/x^n S) for n = 1, 2, ...
};

/// e(xS) for a one-dimensional ring by difference stabilization.
template <class K>
MultiplicityResult hs_multiplicity(const typename PresentedRing<K>::Ptr& ring, const Polynomial<K>& x,
                                   unsigned n_max = 64);

template <class K>
FSigReport fsig_function(const typename PresentedRing<K>::Ptr& ring, unsigned e_max);

struct DescentCell {
  unsigned n;
  unsigned e;
  unsigned q;
  BigInt colength;      // l(R/(P^[q], x^{nq}))
  Rational normalized;  // colength / (n q^d)
};

struct DescentReport {
  unsigned dimension = 0;
  unsigned n_max = 0;
  unsigned e_max = 0;
  std::vector<DescentCell> cells;        // n-major
  std::vector<Rational> per_n_estimate;  // last-e value per n
  bool non_increasing_in_n = true;       // at each e >= 2
  bool two_parameter_bound = true;       // l(n) <= n l(1) at every e
  std::optional<Rational> prediction;    // e(xR/P) times the localized estimate
  const DescentCell& cell(unsigned n, unsigned e) const { return cells[(n - 1) * e_max + (e - 1)]; }
};

template <class K>
DescentReport descent_sequence(const Ideal<K>& prime, const Polynomial<K>& x, unsigned n_max, unsigned e_max,
                               bool parallel = true);

struct LechRow {
  unsigned e;
  BigInt lhs;  // l(R/I^[q])
  BigInt rhs;  // l(J/I) l(R/m^[q]) + l(R/J^[q])
  bool pass;
};

struct LechReport {
  std::vector<LechRow> rows;
  bool pass = true;
};

template <class K>
LechReport lech_check(const Ideal<K>& small, const Ideal<K>& large, unsigned e_max);

struct AssocRow {
  unsigned e;
  Rational whole;     // normalized row of S/(prod f_i^a_i)
  Rational weighted;  // sum a_i times normalized rows of S/(f_i)
  Rational discrepancy;
  std::vector<Rational> components;
};

struct AssocReport {
  std::vector<AssocRow> rows;
  bool shrinking = true;  // |discrepancy| non-increasing with e
};

/// Associativity comparison for the hypersurface S/(prod f_i^a_i); S must be
/// a polynomial ring and the factors pairwise coprime.
template <class K>
AssocReport assoc_check(const typename PresentedRing<K>::Ptr& ambient,
                        const std::vector<std::pair<Polynomial<K>, unsigned>>& factors, unsigned e_max);

struct WYRow {
  unsigned e;
  BigInt hk;     // l(R/I^[q])
  BigInt upper;  // l(m^[p]/I) l(R/m^[q]) + l(R/m^[pq])
  BigInt lower;  // q^d l(R/I)
  bool pass;     // hk <= upper
  bool hypothesis;  // hk >= lower
};

struct WYReport {
  std::vector<WYRow> rows;
  BigInt p_to_d;
  BigInt bracket_colength;  // l(R/m^[p])
  bool kunz_regular = false;  // p^d >= l(R/m^[p])
  bool pass = true;
};

template <class K>
WYReport wy_inequality_check(const Ideal<K>& ideal, unsigned e_max);

}  // namespace frobkit

#endif  // FROBKIT_INVARIANTS_HPP
