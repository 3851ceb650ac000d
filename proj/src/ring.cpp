#include "frobkit/ring.hpp"

#include <algorithm>
#include <set>

namespace frobkit {

namespace {

template <class K>
void check_operand(const Polynomial<K>& f, const FieldSpecPtr& spec, std::size_t nvars, const char* what) {
  if (!same_field(f.domain().spec(), spec))
    throw InputError(std::string(what) + " lives over a different coefficient field");
  if (f.support_width() > nvars) throw InputError(std::string(what) + " uses undeclared variables");
}

/// g^n reduced modulo the basis after every multiplication.
template <class K>
Polynomial<K> power_mod(const Polynomial<K>& g, unsigned long n, const GroebnerBasis<K>& basis) {
  Polynomial<K> result = basis.normal_form(Polynomial<K>::constant(g.field(), g.domain().one()));
  Polynomial<K> base = basis.normal_form(g);
  while (n && !result.is_zero()) {
    if (n & 1) result = basis.normal_form(result * base);
    n >>= 1;
    if (n) base = basis.normal_form(base * base);
  }
  return result;
}

}  // namespace

template <class K>
typename PresentedRing<K>::Ptr PresentedRing<K>::make(FieldPtr field, std::vector<std::string> names,
                                                      std::vector<Poly> relations,
                                                      std::optional<std::vector<Poly>> origin) {
  if (names.empty()) throw InputError("a ring needs at least one variable");
  if (names.size() > kMaxRingVars)
    throw InputError("at most " + std::to_string(kMaxRingVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw InputError("duplicate variable '" + n + "'");

  std::shared_ptr<PresentedRing> ring(new PresentedRing());
  ring->field_ = field;
  ring->names_ = std::move(names);
  const std::size_t n = ring->names_.size();
  for (const auto& r : relations) check_operand(r, field->spec(), n, "relation");
  relations.erase(std::remove_if(relations.begin(), relations.end(), [](const Poly& r) { return r.is_zero(); }),
                  relations.end());
  ring->relations_ = std::move(relations);

  if (origin) {
    for (const auto& g : *origin) check_operand(g, field->spec(), n, "origin generator");
    ring->origin_ = std::move(*origin);
  } else {
    for (std::size_t i = 0; i < n; ++i) ring->origin_.push_back(Poly::variable(field, i));
  }

  if (ring->relations_.empty()) {
    ring->dimension_ = static_cast<unsigned>(n);
  } else {
    auto rel = groebner_basis<K>(field, ring->relations_, MonomialOrder::grevlex(), {false});
    if (rel.is_unit()) throw InputError("the relation ideal is the unit ideal");
    ring->dimension_ = monomial_ideal_dimension(rel.leading_monomials(), n);
  }

  auto org = groebner_basis<K>(field, ring->origin_, MonomialOrder::grevlex());
  for (const auto& r : ring->relations_)
    if (!org.contains(r)) throw InputError("the origin does not contain the relation " + ring->format(r));
  const auto count = count_standard_monomials(org.leading_monomials(), n);
  if (!count.finite || count.count != 1) throw InputError("the origin is not a maximal ideal with residue field k");
  return ring;
}

template <class K>
std::size_t PresentedRing<K>::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

template <class K>
Ideal<K>::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) check_operand(g, ring_->spec(), ring_->nvars(), "ideal generator");
  gens_.erase(std::remove_if(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_zero(); }), gens_.end());
}

template <class K>
std::shared_ptr<const GroebnerBasis<K>> Ideal<K>::cached(MonomialOrder order, bool reduced) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find({order, reduced});
    if (it != cache_->bases.end()) return it->second;
  }
  std::vector<Poly> all = ring_->relations();
  all.insert(all.end(), gens_.begin(), gens_.end());
  auto computed = std::make_shared<const Basis>(groebner_basis<K>(ring_->field(), all, order, {reduced}));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->bases.try_emplace({order, reduced}, computed).first->second;
}

template <class K>
std::shared_ptr<const GroebnerBasis<K>> Ideal<K>::basis(MonomialOrder order) const {
  return cached(order, true);
}

template <class K>
std::shared_ptr<const GroebnerBasis<K>> Ideal<K>::working_basis(MonomialOrder order) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (bool reduced : {true, false}) {
      auto it = cache_->bases.find({order, reduced});
      if (it != cache_->bases.end()) return it->second;
    }
  }
  return cached(order, false);
}

template <class K>
Polynomial<K> Ideal<K>::normal_form(const Poly& f, MonomialOrder order) const {
  return basis(order)->normal_form(f);
}

template <class K>
bool Ideal<K>::contains(const Poly& f) const {
  return working_basis()->contains(f);
}

template <class K>
bool Ideal<K>::contains(const Ideal& other) const {
  const auto b = working_basis();
  for (const auto& g : other.generators())
    if (!b->contains(g)) return false;
  for (const auto& r : other.ring()->relations())
    if (!b->contains(r)) return false;
  return true;
}

template <class K>
bool Ideal<K>::equals(const Ideal& other) const {
  return contains(other) && other.contains(*this);
}

template <class K>
bool Ideal<K>::is_unit() const {
  return working_basis()->is_unit();
}

template <class K>
StaircaseCount Ideal<K>::colength() const {
  return count_standard_monomials(working_basis()->leading_monomials(), ring_->nvars());
}

template <class K>
unsigned Ideal<K>::dimension() const {
  const auto b = working_basis();
  if (b->is_unit()) return 0;
  return monomial_ideal_dimension(b->leading_monomials(), ring_->nvars());
}

template <class K>
bool Ideal<K>::is_origin_primary() const {
  const auto count = colength();
  if (!count.finite || count.count == 0) return false;
  if (count.count > BigInt(1u << 30)) throw InputError("colength too large for the primary check");
  const auto n = count.count.template convert_to<unsigned long>();
  const auto b = working_basis();
  for (const auto& g : ring_->origin())
    if (!power_mod(g, n, *b).is_zero()) return false;
  return true;
}

template <class K>
std::string Ideal<K>::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += ring_->format(gens_[i]);
  }
  return out + ")";
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring() != b.ring()) throw InputError("ideals live in different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring() != b.ring()) throw InputError("ideals live in different rings");
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      auto h = f * g;
      if (std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(std::move(h));
    }
  return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> ideal_power(const Ideal<K>& a, unsigned n) {
  std::vector<Polynomial<K>> gens{a.ring()->one()};
  const auto& base = a.generators();
  // Products over multisets: extend only with generators of index >= the last used.
  std::vector<std::size_t> last{0};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Polynomial<K>> next;
    std::vector<std::size_t> next_last;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = last[i]; j < base.size(); ++j) {
        next.push_back(gens[i] * base[j]);
        next_last.push_back(j);
      }
    gens = std::move(next);
    last = std::move(next_last);
  }
  std::vector<Polynomial<K>> unique;
  for (auto& g : gens)
    if (std::find(unique.begin(), unique.end(), g) == unique.end()) unique.push_back(std::move(g));
  return Ideal<K>(a.ring(), std::move(unique));
}

template <class K>
BigInt colength_finite(const Ideal<K>& ideal) {
  const auto c = ideal.colength();
  if (!c.finite) throw InputError("quotient by " + ideal.to_string() + " is not finite dimensional");
  return c.count;
}

#define FROBKIT_INSTANTIATE(K)                                   \
  template class PresentedRing<K>;                               \
  template class Ideal<K>;                                       \
  template Ideal<K> ideal_sum(const Ideal<K>&, const Ideal<K>&); \
  template Ideal<K> ideal_product(const Ideal<K>&, const Ideal<K>&); \
  template Ideal<K> ideal_power(const Ideal<K>&, unsigned);      \
  template BigInt colength_finite(const Ideal<K>&);

FROBKIT_INSTANTIATE(GaloisField)
FROBKIT_INSTANTIATE(RationalFunctionField)

#undef FROBKIT_INSTANTIATE

}  // namespace frobkit
