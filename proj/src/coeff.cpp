#include "frobkit/coeff.hpp"

#include <algorithm>
#include <functional>

#include "frobkit/expr.hpp"

namespace frobkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("division by zero in F_" + std::to_string(p));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace unipoly {

void trim(UniPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UniPoly& f) { return static_cast<int>(f.size()) - 1; }

UniPoly add(const UniPoly& a, const UniPoly& b, std::uint32_t p) {
  UniPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s >= p ? s - p : s;
  }
  trim(r);
  return r;
}

UniPoly sub(const UniPoly& a, const UniPoly& b, std::uint32_t p) {
  UniPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = x >= y ? x - y : x + p - y;
  }
  trim(r);
  return r;
}

UniPoly mul(const UniPoly& a, const UniPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  if (p == 2) {
    UniPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i])
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
    trim(r);
    return r;
  }
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << 62;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
      if (acc[i + j] >= limit) acc[i + j] %= p;
    }
  }
  UniPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i] % p);
  trim(r);
  return r;
}

UniPoly scale(const UniPoly& a, std::uint32_t c, std::uint32_t p) {
  if (c % p == 0) return {};
  UniPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], c, p);
  return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b, std::uint32_t p) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  UniPoly r = a;
  if (r.size() < b.size()) return {UniPoly{}, r};
  UniPoly q(r.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  for (std::size_t top = r.size(); top >= b.size(); --top) {
    const std::size_t i = top - 1;
    const std::uint32_t c = mul_mod(r[i], lead_inv, p);
    if (c == 0) continue;
    const std::size_t shift = i + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint32_t t = mul_mod(c, b[j], p);
      std::uint32_t& slot = r[shift + j];
      slot = slot >= t ? slot - t : slot + p - t;
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

UniPoly mod(const UniPoly& a, const UniPoly& b, std::uint32_t p) { return divmod(a, b, p).second; }

UniPoly make_monic(const UniPoly& a, std::uint32_t p) {
  if (a.empty() || a.back() == 1) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

UniPoly gcd(UniPoly a, UniPoly b, std::uint32_t p) {
  while (!b.empty()) {
    UniPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& modulus, std::uint32_t p) {
  UniPoly result{1};
  result = mod(result, modulus, p);
  UniPoly b = mod(base, modulus, p);
  while (e) {
    if (e & 1) result = mod(mul(result, b, p), modulus, p);
    b = mod(mul(b, b, p), modulus, p);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const UniPoly& f, std::uint32_t p) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const UniPoly x{0, 1};
  // x^(p^k) mod f by k successive p-th powers.
  auto frob_iterate = [&](unsigned k) {
    UniPoly r = x;
    for (unsigned i = 0; i < k; ++i) r = powmod(r, p, f, p);
    return r;
  };
  if (sub(frob_iterate(static_cast<unsigned>(n)), mod(x, f, p), p) != UniPoly{}) return false;
  for (unsigned r = 2; r <= static_cast<unsigned>(n); ++r) {
    if (n % r != 0 || !is_prime(r)) continue;
    UniPoly h = sub(frob_iterate(static_cast<unsigned>(n) / r), x, p);
    if (degree(gcd(f, h, p)) != 0) return false;
  }
  return true;
}

std::string to_string(const UniPoly& f, std::string_view var) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = f[i] == 1;
    if (i == 0) {
      out += std::to_string(f[i]);
      continue;
    }
    if (!unit) out += std::to_string(f[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace unipoly

// ---------------------------------------------------------------------------

std::shared_ptr<const FieldSpec> FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p > (1u << 31)) throw FieldError("characteristic too large");
  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->kind_ = FieldKind::prime;
  spec->p_ = p;
  spec->degree_ = 1;
  spec->order_ = p;
  return spec;
}

std::shared_ptr<const FieldSpec> FieldSpec::extension(std::uint32_t p, UniPoly modulus,
                                                      std::string generator) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  unipoly::trim(modulus);
  const int k = unipoly::degree(modulus);
  if (k < 1) throw FieldError("extension modulus must have positive degree");
  if (modulus.back() != 1) throw FieldError("extension modulus must be monic");
  if (!unipoly::is_irreducible(modulus, p))
    throw FieldError("extension modulus " + unipoly::to_string(modulus, generator) +
                     " is reducible over F_" + std::to_string(p));
  std::uint64_t order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    if (order > (std::uint64_t{1} << 22)) throw FieldError("extension field too large (order > 2^22)");
  }
  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->kind_ = FieldKind::extension;
  spec->p_ = p;
  spec->degree_ = static_cast<unsigned>(k);
  spec->modulus_ = std::move(modulus);
  spec->symbol_ = std::move(generator);
  spec->order_ = order;
  spec->build_tables();
  return spec;
}

std::shared_ptr<const FieldSpec> FieldSpec::rational_function(std::uint32_t p, std::string parameter) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->kind_ = FieldKind::rational_function;
  spec->p_ = p;
  spec->degree_ = 1;
  spec->symbol_ = std::move(parameter);
  spec->order_ = 0;
  return spec;
}

namespace {

std::uint32_t encode(const UniPoly& f, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
  return v;
}

UniPoly decode(std::uint32_t v, std::uint32_t p, unsigned k) {
  UniPoly f(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    f[i] = v % p;
    v /= p;
  }
  unipoly::trim(f);
  return f;
}

}  // namespace

void FieldSpec::build_tables() {
  if (degree_ == 1) return;
  const auto q = static_cast<std::uint32_t>(order_);
  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  // Search for a primitive element; the multiplicative group is cyclic.
  for (std::uint32_t g = 2; g < q; ++g) {
    const UniPoly gp = decode(g, p_, degree_);
    UniPoly cur{1};
    bool primitive = true;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      const std::uint32_t code = encode(cur, p_);
      if (i > 0 && code == 1) {
        primitive = false;
        break;
      }
      exp_[i] = code;
      log_[code] = i;
      cur = unipoly::mod(unipoly::mul(cur, gp, p_), modulus_, p_);
    }
    if (primitive) return;
  }
  throw FieldError("no primitive element found");  // unreachable for irreducible moduli
}

std::string FieldSpec::describe() const {
  switch (kind_) {
    case FieldKind::prime: return "F_" + std::to_string(p_);
    case FieldKind::extension:
      return "F_" + std::to_string(order_) + " = F_" + std::to_string(p_) + "[" + symbol_ + "]/(" +
             unipoly::to_string(modulus_, symbol_) + ")";
    case FieldKind::rational_function: return "F_" + std::to_string(p_) + "(" + symbol_ + ")";
  }
  return {};
}

bool same_field(const FieldSpecPtr& a, const FieldSpecPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

GaloisField::GaloisField(FieldSpecPtr spec) : spec_(std::move(spec)) {
  if (!spec_ || !spec_->is_finite()) throw FieldError("GaloisField requires a finite field spec");
  p_ = spec_->characteristic();
  k_ = spec_->degree();
  order_ = spec_->order();
  if (k_ > 1) {
    exp_ = spec_->exp_table().data();
    log_ = spec_->log_table().data();
  }
}

GaloisField::Elem GaloisField::add_digits(Elem a, Elem b) const {
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::neg_digits(Elem a) const {
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in " + spec_->describe());
  if (k_ == 1) return inv_mod(a, p_);
  const auto n = static_cast<std::uint32_t>(order_ - 1);
  return exp_[(n - log_[a]) % n];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (k_ == 1) return pow_mod(a, e, p_);
  const std::uint64_t n = order_ - 1;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % n)) % n)];
}

GaloisField::Elem GaloisField::frobenius(Elem a, unsigned e) const {
  for (unsigned i = 0; i < e; ++i) a = pow(a, p_);
  return a;
}

GaloisField::Elem GaloisField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

GaloisField::Elem GaloisField::generator() const {
  if (k_ == 1) throw FieldError(spec_->describe() + " has no extension generator");
  return p_;  // digits (0, 1, 0, ...)
}

GaloisField::Elem GaloisField::from_unipoly(const UniPoly& f) const {
  UniPoly r = f;
  for (auto& c : r) c %= p_;
  unipoly::trim(r);
  if (k_ > 1) r = unipoly::mod(r, spec_->modulus(), p_);
  else if (r.size() > 1) throw FieldError("polynomial literal in a prime field");
  return encode(r, p_);
}

UniPoly GaloisField::to_unipoly(Elem a) const { return decode(a, p_, k_); }

std::string GaloisField::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  return unipoly::to_string(to_unipoly(a), spec_->symbol());
}

// ---------------------------------------------------------------------------

RationalFunctionField::RationalFunctionField(FieldSpecPtr spec) : spec_(std::move(spec)) {
  if (!spec_ || spec_->kind() != FieldKind::rational_function)
    throw FieldError("RationalFunctionField requires a rational-function spec");
  p_ = spec_->characteristic();
}

RatFun RationalFunctionField::make(UniPoly num, UniPoly den) const {
  unipoly::trim(num);
  unipoly::trim(den);
  if (den.empty()) throw std::domain_error("zero denominator in " + spec_->describe());
  if (num.empty()) return RatFun{};
  UniPoly g = unipoly::gcd(num, den, p_);
  if (g.size() > 1) {
    num = unipoly::divmod(num, g, p_).first;
    den = unipoly::divmod(den, g, p_).first;
  }
  const std::uint32_t lead = den.back();
  if (lead != 1) {
    const std::uint32_t li = inv_mod(lead, p_);
    num = unipoly::scale(num, li, p_);
    den = unipoly::scale(den, li, p_);
  }
  return RatFun{std::move(num), std::move(den)};
}

RatFun RationalFunctionField::add(const RatFun& a, const RatFun& b) const {
  if (a.num.empty()) return b;
  if (b.num.empty()) return a;
  if (a.den == b.den) {
    UniPoly n = unipoly::add(a.num, b.num, p_);
    if (a.den.size() == 1) return RatFun{std::move(n), a.den};
    return make(std::move(n), a.den);
  }
  if (a.den.size() == 1) return RatFun{unipoly::add(unipoly::mul(a.num, b.den, p_), b.num, p_), b.den};
  if (b.den.size() == 1) return RatFun{unipoly::add(a.num, unipoly::mul(b.num, a.den, p_), p_), a.den};
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*d/g), then cancel.
  const UniPoly g = unipoly::gcd(a.den, b.den, p_);
  const UniPoly bg = unipoly::divmod(a.den, g, p_).first;
  const UniPoly dg = unipoly::divmod(b.den, g, p_).first;
  UniPoly n = unipoly::add(unipoly::mul(a.num, dg, p_), unipoly::mul(b.num, bg, p_), p_);
  return make(std::move(n), unipoly::mul(a.den, dg, p_));
}

RatFun RationalFunctionField::neg(const RatFun& a) const {
  if (p_ == 2) return a;
  return RatFun{unipoly::scale(a.num, p_ - 1, p_), a.den};
}

RatFun RationalFunctionField::sub(const RatFun& a, const RatFun& b) const { return add(a, neg(b)); }

RatFun RationalFunctionField::mul(const RatFun& a, const RatFun& b) const {
  if (a.num.empty() || b.num.empty()) return RatFun{};
  if (a.den.size() == 1 && b.den.size() == 1)
    return RatFun{unipoly::mul(a.num, b.num, p_), UniPoly{1}};
  // Cross-cancel so the result is already in lowest terms.
  UniPoly an = a.num, ad = a.den, bn = b.num, bd = b.den;
  if (bd.size() > 1) {
    UniPoly g1 = unipoly::gcd(an, bd, p_);
    if (g1.size() > 1) {
      an = unipoly::divmod(an, g1, p_).first;
      bd = unipoly::divmod(bd, g1, p_).first;
    }
  }
  if (ad.size() > 1) {
    UniPoly g2 = unipoly::gcd(bn, ad, p_);
    if (g2.size() > 1) {
      bn = unipoly::divmod(bn, g2, p_).first;
      ad = unipoly::divmod(ad, g2, p_).first;
    }
  }
  UniPoly n = unipoly::mul(an, bn, p_);
  UniPoly d = unipoly::mul(ad, bd, p_);
  const std::uint32_t lead = d.back();
  if (lead != 1) {
    const std::uint32_t li = inv_mod(lead, p_);
    n = unipoly::scale(n, li, p_);
    d = unipoly::scale(d, li, p_);
  }
  return RatFun{std::move(n), std::move(d)};
}

RatFun RationalFunctionField::inv(const RatFun& a) const {
  if (a.num.empty()) throw std::domain_error("division by zero in " + spec_->describe());
  return make(a.den, a.num);
}

RatFun RationalFunctionField::pow(const RatFun& a, std::uint64_t e) const {
  RatFun result = one();
  RatFun base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

RatFun RationalFunctionField::frobenius(const RatFun& a, unsigned e) const {
  // Coefficients lie in F_p, so (sum c_i t^i)^p = sum c_i t^(ip).
  auto spread = [&](const UniPoly& f) {
    if (f.empty()) return f;
    std::size_t step = 1;
    for (unsigned i = 0; i < e; ++i) step *= p_;
    UniPoly r((f.size() - 1) * step + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) r[i * step] = f[i];
    return r;
  };
  return RatFun{spread(a.num), spread(a.den)};
}

RatFun RationalFunctionField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  if (r == 0) return RatFun{};
  return RatFun{{static_cast<std::uint32_t>(r)}, {1}};
}

std::string RationalFunctionField::to_string(const RatFun& a) const {
  if (a.num.empty()) return "0";
  const std::string& t = spec_->symbol();
  std::string n = unipoly::to_string(a.num, t);
  if (a.den.size() == 1) return n;
  if (a.num.size() > 1 && std::count_if(a.num.begin(), a.num.end(), [](auto c) { return c != 0; }) > 1)
    n = "(" + n + ")";
  std::string d = unipoly::to_string(a.den, t);
  if (std::count_if(a.den.begin(), a.den.end(), [](auto c) { return c != 0; }) > 1)
    d = "(" + d + ")";
  return n + "/" + d;
}

std::size_t RationalFunctionField::hash(const RatFun& a) const {
  std::size_t h = 1469598103934665603ull;
  for (auto c : a.num) h = (h ^ c) * 1099511628211ull;
  h = (h ^ 0xff) * 1099511628211ull;
  for (auto c : a.den) h = (h ^ c) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldSpecPtr spec, std::uint32_t finite_value)
    : spec_(std::move(spec)), value_(finite_value) {
  if (!spec_->is_finite()) throw FieldError("finite payload for " + spec_->describe());
}

FieldElement::FieldElement(FieldSpecPtr spec, RatFun value) : spec_(std::move(spec)) {
  if (spec_->is_finite()) throw FieldError("rational-function payload for " + spec_->describe());
  value_ = RationalFunctionField(spec_).make(std::move(value.num), std::move(value.den));
}

bool FieldElement::is_zero() const {
  if (spec_->is_finite()) return finite_value() == 0;
  return rational_value().num.empty();
}

std::string FieldElement::to_string() const {
  if (spec_->is_finite()) return GaloisField(spec_).to_string(finite_value());
  return RationalFunctionField(spec_).to_string(rational_value());
}

template <class Fn>
FieldElement FieldElement::combine(const FieldElement& o, Fn&& fn) const {
  if (!same_field(spec_, o.spec_))
    throw FieldError("cross-field arithmetic: " + spec_->describe() + " vs " + o.spec_->describe());
  if (spec_->is_finite()) {
    GaloisField k(spec_);
    return FieldElement(spec_, fn(k, finite_value(), o.finite_value()));
  }
  RationalFunctionField k(spec_);
  return FieldElement(spec_, fn(k, rational_value(), o.rational_value()));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return combine(o, [](const auto& k, const auto& a, const auto& b) { return k.add(a, b); });
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return combine(o, [](const auto& k, const auto& a, const auto& b) { return k.sub(a, b); });
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return combine(o, [](const auto& k, const auto& a, const auto& b) { return k.mul(a, b); });
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return combine(o, [](const auto& k, const auto& a, const auto& b) { return k.div(a, b); });
}
FieldElement FieldElement::operator-() const { return field_zero(spec_) - *this; }
FieldElement FieldElement::inverse() const { return field_one(spec_) / *this; }

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (spec_->is_finite()) return FieldElement(spec_, GaloisField(spec_).pow(finite_value(), e));
  return FieldElement(spec_, RationalFunctionField(spec_).pow(rational_value(), e));
}

FieldElement field_zero(const FieldSpecPtr& spec) {
  if (spec->is_finite()) return FieldElement(spec, 0u);
  return FieldElement(spec, RatFun{});
}

FieldElement field_one(const FieldSpecPtr& spec) {
  if (spec->is_finite()) return FieldElement(spec, 1u);
  return FieldElement(spec, RatFun{{1}, {1}});
}

namespace {

FieldElement from_integer_text(const FieldSpecPtr& spec, const std::string& digits) {
  std::uint64_t r = 0;
  const std::uint32_t p = spec->characteristic();
  for (char ch : digits) r = (r * 10 + static_cast<unsigned>(ch - '0')) % p;
  if (spec->is_finite()) return FieldElement(spec, static_cast<std::uint32_t>(r));
  if (r == 0) return FieldElement(spec, RatFun{});
  return FieldElement(spec, RatFun{{static_cast<std::uint32_t>(r)}, {1}});
}

FieldElement eval_literal(const FieldSpecPtr& spec, const Expr& e) {
  switch (e.op) {
    case Expr::Op::number: return from_integer_text(spec, e.text);
    case Expr::Op::symbol:
      if (spec->kind() == FieldKind::prime || e.text != spec->symbol())
        throw ParseError("unknown symbol '" + e.text + "' in " + spec->describe() + " literal", e.line,
                         e.column);
      if (spec->kind() == FieldKind::extension) return FieldElement(spec, GaloisField(spec).generator());
      return FieldElement(spec, RationalFunctionField(spec).generator());
    case Expr::Op::neg: return -eval_literal(spec, e.args[0]);
    case Expr::Op::pow: return eval_literal(spec, e.args[0]).pow(e.exponent);
    case Expr::Op::add: return eval_literal(spec, e.args[0]) + eval_literal(spec, e.args[1]);
    case Expr::Op::sub: return eval_literal(spec, e.args[0]) - eval_literal(spec, e.args[1]);
    case Expr::Op::mul: return eval_literal(spec, e.args[0]) * eval_literal(spec, e.args[1]);
    case Expr::Op::div: {
      FieldElement d = eval_literal(spec, e.args[1]);
      if (d.is_zero()) throw ParseError("zero denominator", e.args[1].line, e.args[1].column);
      return eval_literal(spec, e.args[0]) / d;
    }
  }
  throw ParseError("bad literal", e.line, e.column);
}

}  // namespace

FieldElement field_make(const FieldSpecPtr& spec, std::string_view literal) {
  return eval_literal(spec, parse_expr(literal));
}

FieldElement field_frobenius(const FieldElement& x, unsigned e) {
  const std::uint32_t p = x.spec()->characteristic();
  FieldElement r = x;
  for (unsigned i = 0; i < e; ++i) r = r.pow(p);
  return r;
}

}  // namespace frobkit
