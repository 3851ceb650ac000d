#include "frobkit/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace frobkit {

namespace {

template <class K>
using Element = typename GroebnerBasis<K>::Element;

template <class K>
Element<K> make_element(std::vector<Term<K>> terms, unsigned sugar) {
  Element<K> e;
  e.terms = std::move(terms);
  e.lead = e.terms.front().mono;
  e.mask = e.lead.divmask();
  e.sugar = sugar;
  return e;
}

/// Heap-and-hash reducer: the pending polynomial is a max-heap of distinct
/// monomials plus a coefficient table; every monomial sits in the heap once.
template <class K>
class Reducer {
public:
  using Elem = typename K::Elem;

  Reducer(const K& field, MonomialOrder order) : field_(field), order_(order), heap_cmp_{order} {}

  std::vector<Term<K>> run(const std::vector<Term<K>>& input, const std::vector<const Element<K>*>& reducers,
                           const Element<K>* skip, unsigned& sugar, std::size_t& steps) {
    acc_.clear();
    heap_.clear();
    for (const auto& t : input) add(t.mono, t.coeff);

    std::vector<Term<K>> out;
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), heap_cmp_);
      const Monomial u = heap_.back();
      heap_.pop_back();
      auto it = acc_.find(u);
      Elem c = std::move(it->second);
      acc_.erase(it);
      if (field_.is_zero(c)) continue;

      const Element<K>* g = find_reducer(u, reducers, skip);
      if (!g) {
        out.push_back({u, std::move(c)});
        continue;
      }
      ++steps;
      const Monomial m = quotient(u, g->lead);
      sugar = std::max(sugar, g->sugar + m.degree());
      const Elem neg_c = field_.neg(c);
      for (std::size_t k = 1; k < g->terms.size(); ++k)
        add(g->terms[k].mono * m, field_.mul(neg_c, g->terms[k].coeff));
    }
    return out;
  }

private:
  struct HeapLess {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b) < 0; }
  };

  void add(const Monomial& m, Elem c) {
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (inserted) {
      heap_.push_back(m);
      std::push_heap(heap_.begin(), heap_.end(), heap_cmp_);
    } else {
      it->second = field_.add(it->second, c);
    }
  }

  static const Element<K>* find_reducer(const Monomial& u, const std::vector<const Element<K>*>& reducers,
                                        const Element<K>* skip) {
    const std::uint32_t mask = u.divmask();
    for (const Element<K>* g : reducers) {
      if (g == skip || (g->mask & ~mask) != 0) continue;
      if (g->lead.divides(u)) return g;
    }
    return nullptr;
  }

  const K& field_;
  MonomialOrder order_;
  HeapLess heap_cmp_;
  std::vector<Monomial> heap_;
  std::unordered_map<Monomial, Elem, MonomialHash> acc_;
};

template <class K>
std::vector<Term<K>> make_monic(const K& field, std::vector<Term<K>> terms) {
  if (terms.empty() || field.is_one(terms.front().coeff)) return terms;
  const auto inv = field.inv(terms.front().coeff);
  for (auto& t : terms) t.coeff = field.mul(t.coeff, inv);
  return terms;
}

template <class K>
std::vector<Term<K>> sorted_terms(const Polynomial<K>& f, const MonomialOrder& order) {
  std::vector<Term<K>> terms = f.terms();
  if (order.kind() != MonomialOrder::Kind::grevlex)
    std::sort(terms.begin(), terms.end(),
              [&](const Term<K>& a, const Term<K>& b) { return order.compare(a.mono, b.mono) > 0; });
  return terms;
}

struct Pair {
  unsigned sugar;
  Monomial lcm;
  std::size_t i, j;
  std::uint64_t seq;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return a.seq < b.seq;
  }
};

template <class K>
class Buchberger {
public:
  Buchberger(const K& field, MonomialOrder order)
      : field_(field), order_(order), pairs_(PairLess{order}), reducer_(field, order) {}

  void add_input(std::vector<Term<K>> terms, unsigned sugar) {
    if (unit_) return;
    auto reduced = reducer_.run(terms, active_list(), nullptr, sugar, stats_.reduction_steps);
    if (reduced.empty()) return;
    insert(make_monic(field_, std::move(reduced)), sugar);
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++stats_.pairs_processed;
      const auto& f = pool_[pr.i];
      const auto& g = pool_[pr.j];
      const Monomial mf = quotient(pr.lcm, f.lead);
      const Monomial mg = quotient(pr.lcm, g.lead);
      std::vector<Term<K>> spoly;
      spoly.reserve(f.terms.size() + g.terms.size());
      for (std::size_t k = 1; k < f.terms.size(); ++k) spoly.push_back({f.terms[k].mono * mf, f.terms[k].coeff});
      for (std::size_t k = 1; k < g.terms.size(); ++k)
        spoly.push_back({g.terms[k].mono * mg, field_.neg(g.terms[k].coeff)});
      unsigned sugar = pr.sugar;
      auto reduced = reducer_.run(spoly, active_list(), nullptr, sugar, stats_.reduction_steps);
      if (reduced.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(make_monic(field_, std::move(reduced)), sugar);
    }
  }

  std::vector<Element<K>> finish(bool reduce) {
    std::vector<Element<K>> out;
    if (unit_) {
      out.push_back(make_element<K>({{Monomial{}, field_.one()}}, 0));
      return out;
    }
    for (std::size_t i : active_) out.push_back(pool_[i]);
    if (reduce) {
      std::vector<const Element<K>*> all;
      for (const auto& e : out) all.push_back(&e);
      std::vector<std::vector<Term<K>>> tails(out.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        unsigned sugar = out[i].sugar;
        tails[i] = reducer_.run(out[i].terms, all, &out[i], sugar, stats_.reduction_steps);
      }
      for (std::size_t i = 0; i < out.size(); ++i) out[i].terms = std::move(tails[i]);
    }
    std::sort(out.begin(), out.end(),
              [&](const Element<K>& a, const Element<K>& b) { return order_.compare(a.lead, b.lead) < 0; });
    return out;
  }

  const GroebnerStats& stats() const { return stats_; }

private:
  std::vector<const Element<K>*> active_list() const {
    std::vector<const Element<K>*> list;
    list.reserve(active_.size());
    for (std::size_t i : active_) list.push_back(&pool_[i]);
    return list;
  }

  /// Gebauer-Moeller update with the new element h.
  void insert(std::vector<Term<K>> terms, unsigned sugar) {
    if (terms.front().mono.is_one()) {
      unit_ = true;
      return;
    }
    const std::size_t h = pool_.size();
    pool_.push_back(make_element<K>(std::move(terms), sugar));
    const Element<K>& eh = pool_[h];

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (std::size_t g : active_) {
      const Monomial l = lcm(eh.lead, pool_[g].lead);
      cands.push_back({g, l, coprime(eh.lead, pool_[g].lead)});
    }

    // Chain criterion among the new pairs: keep (h,g) unless another new pair
    // has an lcm properly dividing its lcm, or an equal lcm appearing earlier
    // (coprime pairs win ties so the product criterion can discard them).
    std::vector<bool> keep(cands.size(), true);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = 0; b < cands.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        if (!(cands[b].lcm == cands[a].lcm)) keep[a] = false;
        else if (cands[b].coprime && !cands[a].coprime) keep[a] = false;
        else if (cands[b].coprime == cands[a].coprime && b < a) keep[a] = false;
      }
    }

    // Drop old pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (eh.lead.divides(l) && !(lcm(pool_[it->i].lead, eh.lead) == l) &&
          !(lcm(pool_[it->j].lead, eh.lead) == l))
        it = pairs_.erase(it);
      else
        ++it;
    }

    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!keep[a] || cands[a].coprime) continue;
      const auto& eg = pool_[cands[a].g];
      const unsigned s = std::max(eh.sugar + cands[a].lcm.degree() - eh.lead.degree(),
                                  eg.sugar + cands[a].lcm.degree() - eg.lead.degree());
      pairs_.insert(Pair{s, cands[a].lcm, cands[a].g, h, seq_++});
    }

    std::vector<std::size_t> next;
    for (std::size_t g : active_)
      if (!eh.lead.divides(pool_[g].lead)) next.push_back(g);
    next.push_back(h);
    active_ = std::move(next);
  }

  const K& field_;
  MonomialOrder order_;
  std::deque<Element<K>> pool_;
  std::vector<std::size_t> active_;
  std::set<Pair, PairLess> pairs_;
  Reducer<K> reducer_;
  GroebnerStats stats_;
  std::uint64_t seq_ = 0;
  bool unit_ = false;
};

}  // namespace

template <class K>
GroebnerBasis<K>::GroebnerBasis(FieldPtr field, MonomialOrder order, std::vector<Element> elements, bool reduced,
                                GroebnerStats stats)
    : field_(std::move(field)), order_(order), elements_(std::move(elements)), reduced_(reduced), stats_(stats) {}

template <class K>
std::vector<Monomial> GroebnerBasis<K>::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.lead);
  return out;
}

template <class K>
std::vector<Polynomial<K>> GroebnerBasis<K>::polynomials() const {
  std::vector<Polynomial<K>> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(Polynomial<K>::from_terms(field_, e.terms));
  return out;
}

template <class K>
Polynomial<K> GroebnerBasis<K>::normal_form(const Polynomial<K>& f) const {
  if (f.is_zero()) return f;
  std::vector<const Element*> all;
  all.reserve(elements_.size());
  for (const auto& e : elements_) all.push_back(&e);
  Reducer<K> reducer(*field_, order_);
  unsigned sugar = 0;
  std::size_t steps = 0;
  auto terms = reducer.run(f.terms(), all, nullptr, sugar, steps);
  return Polynomial<K>::from_terms(field_, std::move(terms));
}

template <class K>
bool GroebnerBasis<K>::same_as(const GroebnerBasis& other) const {
  if (!(order_ == other.order_) || elements_.size() != other.elements_.size()) return false;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& a = elements_[i].terms;
    const auto& b = other.elements_[i].terms;
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(a[k].mono == b[k].mono) || !field_->equal(a[k].coeff, b[k].coeff)) return false;
  }
  return true;
}

template <class K>
GroebnerBasis<K> groebner_basis(std::shared_ptr<const K> field, const std::vector<Polynomial<K>>& gens,
                                MonomialOrder order, GroebnerOptions options) {
  Buchberger<K> engine(*field, order);
  std::vector<std::vector<Term<K>>> inputs;
  for (const auto& g : gens)
    if (!g.is_zero()) inputs.push_back(sorted_terms(g, order));
  std::sort(inputs.begin(), inputs.end(), [&](const auto& a, const auto& b) {
    return order.compare(a.front().mono, b.front().mono) < 0;
  });
  for (auto& in : inputs) {
    unsigned sugar = 0;
    for (const auto& t : in) sugar = std::max(sugar, t.mono.degree());
    engine.add_input(std::move(in), sugar);
  }
  engine.run();
  auto elements = engine.finish(options.reduce);
  return GroebnerBasis<K>(std::move(field), order, std::move(elements), options.reduce, engine.stats());
}

template <class K>
bool satisfies_buchberger_criterion(const GroebnerBasis<K>& basis) {
  using Elem = typename K::Elem;
  const K& field = *basis.field();
  const auto order = basis.order();
  struct Cmp {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b) > 0; }
  };
  using Dense = std::map<Monomial, Elem, Cmp>;
  const auto& els = basis.elements();

  // Plain division algorithm on an ordered map.
  auto reduces_to_zero = [&](Dense p) {
    while (!p.empty()) {
      auto top = p.begin();
      const Monomial u = top->first;
      const Elem c = top->second;
      const typename GroebnerBasis<K>::Element* g = nullptr;
      for (const auto& e : els)
        if (e.lead.divides(u)) {
          g = &e;
          break;
        }
      if (!g) return false;
      const Monomial m = quotient(u, g->lead);
      const Elem scale = field.div(c, g->terms.front().coeff);
      for (const auto& t : g->terms) {
        const Monomial v = t.mono * m;
        auto [it, inserted] = p.try_emplace(v, field.zero());
        it->second = field.sub(it->second, field.mul(scale, t.coeff));
        if (field.is_zero(it->second)) p.erase(it);
      }
    }
    return true;
  };

  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      const Monomial l = lcm(els[i].lead, els[j].lead);
      const Monomial mi = quotient(l, els[i].lead);
      const Monomial mj = quotient(l, els[j].lead);
      Dense p(Cmp{order});
      const Elem ci = field.inv(els[i].terms.front().coeff);
      const Elem cj = field.inv(els[j].terms.front().coeff);
      for (const auto& t : els[i].terms) {
        auto [it, ins] = p.try_emplace(t.mono * mi, field.zero());
        it->second = field.add(it->second, field.mul(ci, t.coeff));
      }
      for (const auto& t : els[j].terms) {
        auto [it, ins] = p.try_emplace(t.mono * mj, field.zero());
        it->second = field.sub(it->second, field.mul(cj, t.coeff));
      }
      for (auto it = p.begin(); it != p.end();)
        it = field.is_zero(it->second) ? p.erase(it) : std::next(it);
      if (!reduces_to_zero(std::move(p))) return false;
    }
  return true;
}

template class GroebnerBasis<GaloisField>;
template class GroebnerBasis<RationalFunctionField>;
template GroebnerBasis<GaloisField> groebner_basis(std::shared_ptr<const GaloisField>,
                                                   const std::vector<Polynomial<GaloisField>>&, MonomialOrder,
                                                   GroebnerOptions);
template GroebnerBasis<RationalFunctionField> groebner_basis(std::shared_ptr<const RationalFunctionField>,
                                                             const std::vector<Polynomial<RationalFunctionField>>&,
                                                             MonomialOrder, GroebnerOptions);
template bool satisfies_buchberger_criterion(const GroebnerBasis<GaloisField>&);
template bool satisfies_buchberger_criterion(const GroebnerBasis<RationalFunctionField>&);

}  // namespace frobkit
