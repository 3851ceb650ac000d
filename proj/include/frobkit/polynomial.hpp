#ifndef FROBKIT_POLYNOMIAL_HPP
#define FROBKIT_POLYNOMIAL_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobkit/coeff.hpp"
#include "frobkit/monomial.hpp"

namespace frobkit {

template <class K>
struct Term {
  Monomial mono;
  typename K::Elem coeff;
};

/// Sparse multivariate polynomial over the coefficient domain K
/// (GaloisField or RationalFunctionField). Terms are kept sorted by strictly
/// decreasing grevlex order with no zero coefficients.
template <class K>
class Polynomial {
public:
  using Elem = typename K::Elem;
  using FieldPtr = std::shared_ptr<const K>;

  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}

  static Polynomial constant(FieldPtr field, Elem c) {
    Polynomial p(std::move(field));
    if (!p.field_->is_zero(c)) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
  }
  static Polynomial monomial(FieldPtr field, const Monomial& m, Elem c) {
    Polynomial p(std::move(field));
    if (!p.field_->is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Polynomial variable(FieldPtr field, std::size_t i) {
    auto one = field->one();
    return monomial(std::move(field), Monomial::variable(i), std::move(one));
  }
  /// Terms in any order, possibly repeated or zero; they are combined.
  static Polynomial from_terms(FieldPtr field, std::vector<Term<K>> terms) {
    Polynomial p(std::move(field));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const FieldPtr& field() const { return field_; }
  const K& domain() const { return *field_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term<K>& leading() const { return terms_.front(); }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  /// Largest variable index with a nonzero exponent, plus one.
  std::size_t support_width() const {
    std::size_t w = 0;
    for (const auto& t : terms_)
      for (std::size_t i = kMaxVars; i-- > w;)
        if (t.mono[i]) {
          w = i + 1;
          break;
        }
    return w;
  }
  std::vector<bool> support() const {
    std::vector<bool> s(kMaxVars, false);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (t.mono[i]) s[i] = true;
    return s;
  }

  Polynomial operator+(const Polynomial& o) const { return merge(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merge(o, true); }
  Polynomial operator-() const {
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field_->neg(t.coeff)});
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
    if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
    std::unordered_map<Monomial, Elem, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        Monomial m = a.mono * b.mono;
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(m, field_->mul(a.coeff, b.coeff));
        } else {
          it->second = field_->add(it->second, field_->mul(a.coeff, b.coeff));
        }
      }
    Polynomial r(field_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!field_->is_zero(c)) r.terms_.push_back({m, std::move(c)});
    r.sort_terms();
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Elem& c) const {
    if (field_->is_zero(c)) return Polynomial(field_);
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field_->mul(t.coeff, c)});
    return r;
  }
  Polynomial mul_term(const Monomial& m, const Elem& c) const {
    if (field_->is_zero(c)) return Polynomial(field_);
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_->mul(t.coeff, c)});
    return r;
  }
  Polynomial pow(unsigned e) const {
    Polynomial result = constant(field_, field_->one());
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }
  /// f^(p^e), computed termwise since Frobenius is additive in characteristic p.
  Polynomial frobenius(unsigned e) const {
    unsigned q = 1;
    for (unsigned i = 0; i < e; ++i) q *= field_->characteristic();
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono.pow(q), field_->frobenius(t.coeff, e)});
    return r;  // x -> x^q preserves grevlex order
  }
  Polynomial make_monic() const {
    if (is_zero() || field_->is_one(terms_.front().coeff)) return *this;
    return scale(field_->inv(terms_.front().coeff));
  }
  Polynomial derivative(std::size_t var) const {
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      const unsigned e = t.mono[var];
      if (e == 0) continue;
      Elem c = field_->mul(t.coeff, field_->from_int(e));
      if (field_->is_zero(c)) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      out.push_back({m, std::move(c)});
    }
    return from_terms(field_, std::move(out));
  }
  /// Drop every term divisible by some x_i^bound[i] (bound 0 means no cap).
  Polynomial truncate_box(const std::vector<unsigned>& bound) const {
    Polynomial r(field_);
    for (const auto& t : terms_) {
      bool keep = true;
      for (std::size_t i = 0; i < bound.size(); ++i)
        if (bound[i] && t.mono[i] >= bound[i]) {
          keep = false;
          break;
        }
      if (keep) r.terms_.push_back(t);
    }
    return r;
  }
  /// Apply a variable renaming/relocation: slot i moves to map[i] (must be injective).
  Polynomial relocate(const std::vector<std::size_t>& map) const {
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < map.size(); ++i)
        if (t.mono[i]) m.set(map[i], t.mono[i]);
      out.push_back({m, t.coeff});
    }
    return from_terms(field_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !a.field_->equal(a.terms_[i].coeff, b.terms_[i].coeff))
        return false;
    return true;
  }

  /// Sum of terms in decreasing grevlex order, e.g. "x^2*y + (a+1)*z + 1".
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      std::string c = field_->to_string(t.coeff);
      const bool compound = c.find_first_of("+/ ") != std::string::npos;
      std::string piece;
      if (t.mono.is_one()) {
        piece = compound ? "(" + c + ")" : c;
      } else {
        const bool unit = field_->is_one(t.coeff);
        if (!unit) piece = (compound ? "(" + c + ")" : c) + "*";
        piece += monomial_to_string(t.mono, names);
      }
      if (!out.empty()) out += " + ";
      out += piece;
    }
    return out;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const Term<K>& a, const Term<K>& b) {
      return MonomialOrder::grevlex().compare(a.mono, b.mono) > 0;
    });
  }

private:
  void normalize() {
    sort_terms();
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field_->add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && field_->is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_->is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  Polynomial merge(const Polynomial& o, bool subtract) const {
    Polynomial r(field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    const auto order = MonomialOrder::grevlex();
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == o.terms_.size()) c = 1;
      else c = order.compare(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? field_->neg(t.coeff) : t.coeff});
      } else {
        Elem s = subtract ? field_->sub(terms_[i].coeff, o.terms_[j].coeff)
                          : field_->add(terms_[i].coeff, o.terms_[j].coeff);
        if (!field_->is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  FieldPtr field_;
  std::vector<Term<K>> terms_;
};

}  // namespace frobkit

#endif  // FROBKIT_POLYNOMIAL_HPP
