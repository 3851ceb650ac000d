#ifndef FROBKIT_RING_HPP
#define FROBKIT_RING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobkit/groebner.hpp"
#include "frobkit/staircase.hpp"

namespace frobkit {

/// Violated precondition on user-supplied data.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Ring variables available to callers; the last slot is reserved for the
/// auxiliary variable used by elimination.
inline constexpr std::size_t kMaxRingVars = kMaxVars - 1;

template <class K>
class PresentedRing {
public:
  using Poly = Polynomial<K>;
  using FieldPtr = std::shared_ptr<const K>;
  using Ptr = std::shared_ptr<const PresentedRing>;

  static Ptr make(FieldPtr field, std::vector<std::string> names, std::vector<Poly> relations,
                  std::optional<std::vector<Poly>> origin = std::nullopt);

  const FieldPtr& field() const { return field_; }
  const FieldSpecPtr& spec() const { return field_->spec(); }
  std::uint32_t characteristic() const { return field_->characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<Poly>& origin() const { return origin_; }
  unsigned dimension() const { return dimension_; }
  bool is_polynomial_ring() const { return relations_.empty(); }

  Poly zero() const { return Poly(field_); }
  Poly one() const { return Poly::constant(field_, field_->one()); }
  Poly constant(typename K::Elem c) const { return Poly::constant(field_, std::move(c)); }
  Poly variable(std::size_t i) const { return Poly::variable(field_, i); }
  std::size_t index_of(const std::string& name) const;
  std::string format(const Poly& f) const { return f.to_string(names_); }

private:
  PresentedRing() = default;

  FieldPtr field_;
  std::vector<std::string> names_;
  std::vector<Poly> relations_;
  std::vector<Poly> origin_;
  unsigned dimension_ = 0;
};

/// Ideal of a presented ring, given by generators read modulo the relations.
/// Copies share one lazily filled basis cache.
template <class K>
class Ideal {
public:
  using Poly = Polynomial<K>;
  using RingPtr = typename PresentedRing<K>::Ptr;
  using Basis = GroebnerBasis<K>;

  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Reduced basis of relations + generators in the ambient polynomial ring.
  std::shared_ptr<const Basis> basis(MonomialOrder order = MonomialOrder::grevlex()) const;
  /// Any basis for the order: the reduced one if cached, else a minimal one.
  std::shared_ptr<const Basis> working_basis(MonomialOrder order = MonomialOrder::grevlex()) const;

  Poly normal_form(const Poly& f, MonomialOrder order = MonomialOrder::grevlex()) const;
  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool is_unit() const;
  /// Colength of R/I, or infinite.
  StaircaseCount colength() const;
  /// Krull dimension of R/I (0 for the unit ideal).
  unsigned dimension() const;
  /// I is primary to the origin: finite colength and supported at the origin.
  bool is_origin_primary() const;

  std::string to_string() const;

private:
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<MonomialOrder, bool>, std::shared_ptr<const Basis>> bases;
  };
  std::shared_ptr<const Basis> cached(MonomialOrder order, bool reduced) const;

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class K>
typename PresentedRing<K>::Ptr ring_make(std::shared_ptr<const K> field, std::vector<std::string> names,
                                         std::vector<Polynomial<K>> relations,
                                         std::optional<std::vector<Polynomial<K>>> origin = std::nullopt) {
  return PresentedRing<K>::make(std::move(field), std::move(names), std::move(relations), std::move(origin));
}

template <class K>
Ideal<K> origin_ideal(const typename PresentedRing<K>::Ptr& ring) {
  return Ideal<K>(ring, ring->origin());
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b);
template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b);
template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, unsigned n);

/// Colength of the ideal, throwing when it is infinite.
template <class K>
BigInt colength_finite(const Ideal<K>& ideal);

}  // namespace frobkit

#endif  // FROBKIT_RING_HPP
