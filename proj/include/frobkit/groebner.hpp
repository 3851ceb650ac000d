#ifndef FROBKIT_GROEBNER_HPP
#define FROBKIT_GROEBNER_HPP

#include <memory>
#include <vector>

#include "frobkit/polynomial.hpp"

namespace frobkit {

struct GroebnerOptions {
  /// Interreduce the final basis. Colength-only callers can skip this since
  /// leading monomials of a minimal basis already determine the staircase.
  bool reduce = true;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
};

/// A monic Groebner basis with respect to a fixed order. Elements keep their
/// terms sorted decreasingly in that order.
template <class K>
class GroebnerBasis {
public:
  using Elem = typename K::Elem;
  using FieldPtr = std::shared_ptr<const K>;

  struct Element {
    std::vector<Term<K>> terms;
    Monomial lead;
    std::uint32_t mask = 0;
    unsigned sugar = 0;
  };

  GroebnerBasis(FieldPtr field, MonomialOrder order, std::vector<Element> elements, bool reduced,
                GroebnerStats stats = {});

  const FieldPtr& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_reduced() const { return reduced_; }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].lead.is_one(); }
  const GroebnerStats& stats() const { return stats_; }

  std::vector<Monomial> leading_monomials() const;
  /// Elements as grevlex-sorted polynomials, in basis order.
  std::vector<Polynomial<K>> polynomials() const;

  /// Fully reduced remainder of f.
  Polynomial<K> normal_form(const Polynomial<K>& f) const;
  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }

  /// Both bases reduced, same order, same elements.
  bool same_as(const GroebnerBasis& other) const;

private:
  FieldPtr field_;
  MonomialOrder order_;
  std::vector<Element> elements_;
  bool reduced_;
  GroebnerStats stats_;
};

template <class K>
GroebnerBasis<K> groebner_basis(std::shared_ptr<const K> field, const std::vector<Polynomial<K>>& gens,
                                MonomialOrder order, GroebnerOptions options = {});

/// Every S-polynomial of the basis reduces to zero. Independent of the
/// construction; used as a test oracle.
template <class K>
bool satisfies_buchberger_criterion(const GroebnerBasis<K>& basis);

}  // namespace frobkit

#endif  // FROBKIT_GROEBNER_HPP
