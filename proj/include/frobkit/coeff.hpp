#ifndef FROBKIT_COEFF_HPP
#define FROBKIT_COEFF_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace frobkit {

/// Raised for malformed field declarations and literals.
struct FieldError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Dense univariate polynomial over F_p, coefficients low to high with no
/// trailing zeros. The zero polynomial is the empty vector.
using UniPoly = std::vector<std::uint32_t>;

namespace unipoly {

void trim(UniPoly& f);
int degree(const UniPoly& f);  // -1 for zero
UniPoly add(const UniPoly& a, const UniPoly& b, std::uint32_t p);
UniPoly sub(const UniPoly& a, const UniPoly& b, std::uint32_t p);
UniPoly mul(const UniPoly& a, const UniPoly& b, std::uint32_t p);
UniPoly scale(const UniPoly& a, std::uint32_t c, std::uint32_t p);
/// Quotient and remainder; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b, std::uint32_t p);
UniPoly mod(const UniPoly& a, const UniPoly& b, std::uint32_t p);
/// Monic gcd (zero if both arguments are zero).
UniPoly gcd(UniPoly a, UniPoly b, std::uint32_t p);
UniPoly make_monic(const UniPoly& a, std::uint32_t p);
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& modulus, std::uint32_t p);
/// Rabin irreducibility test.
bool is_irreducible(const UniPoly& f, std::uint32_t p);
std::string to_string(const UniPoly& f, std::string_view var);

}  // namespace unipoly

enum class FieldKind { prime, extension, rational_function };

/// Immutable description of a coefficient field: F_p, F_p[a]/(modulus), or
/// F_p(t). Shared by every element and polynomial over that field.
class FieldSpec {
public:
  static std::shared_ptr<const FieldSpec> prime(std::uint32_t p);
  /// `modulus` must be monic and irreducible over F_p; p^deg is capped at 2^22.
  static std::shared_ptr<const FieldSpec> extension(std::uint32_t p, UniPoly modulus,
                                                    std::string generator = "a");
  static std::shared_ptr<const FieldSpec> rational_function(std::uint32_t p,
                                                            std::string parameter = "t");

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  const UniPoly& modulus() const { return modulus_; }
  /// Extension generator or transcendental parameter name; empty for F_p.
  const std::string& symbol() const { return symbol_; }
  bool is_finite() const { return kind_ != FieldKind::rational_function; }
  /// p^k for finite fields, 0 otherwise.
  std::uint64_t order() const { return order_; }
  std::string describe() const;

  // Zech-style tables for finite fields: exp_[i] = g^i, log_[exp_[i]] = i.
  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.modulus_ == b.modulus_ && a.symbol_ == b.symbol_;
  }

private:
  FieldSpec() = default;
  void build_tables();

  FieldKind kind_ = FieldKind::prime;
  std::uint32_t p_ = 2;
  unsigned degree_ = 1;
  UniPoly modulus_;
  std::string symbol_;
  std::uint64_t order_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

bool same_field(const FieldSpecPtr& a, const FieldSpecPtr& b);

/// Arithmetic in F_p and F_{p^k}. Elements are encoded as integers whose base-p
/// digits are the coefficients of 1, a, a^2, ...; the prime subfield is 0..p-1.
class GaloisField {
public:
  using Elem = std::uint32_t;

  explicit GaloisField(FieldSpecPtr spec);

  const FieldSpecPtr& spec() const { return spec_; }
  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    if (k_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (a == 0 || p_ == 2) return a;
    if (k_ == 1) return p_ - a;
    return neg_digits(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order_ - 1) s -= static_cast<std::uint32_t>(order_ - 1);
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(p^e).
  Elem frobenius(Elem a, unsigned e) const;
  Elem from_int(std::int64_t v) const;
  bool in_prime_subfield(Elem a) const { return a < p_; }
  /// The extension generator; throws for prime fields.
  Elem generator() const;
  Elem from_unipoly(const UniPoly& f) const;
  UniPoly to_unipoly(Elem a) const;
  std::string to_string(Elem a) const;
  std::size_t hash(Elem a) const { return a; }

private:
  Elem add_digits(Elem a, Elem b) const;
  Elem neg_digits(Elem a) const;

  FieldSpecPtr spec_;
  std::uint32_t p_;
  unsigned k_;
  std::uint64_t order_;
  const std::uint32_t* exp_ = nullptr;
  const std::uint32_t* log_ = nullptr;
};

/// Element of F_p(t) in lowest terms with monic denominator.
struct RatFun {
  UniPoly num;
  UniPoly den{1};
  friend bool operator==(const RatFun&, const RatFun&) = default;
};

class RationalFunctionField {
public:
  using Elem = RatFun;

  explicit RationalFunctionField(FieldSpecPtr spec);

  const FieldSpecPtr& spec() const { return spec_; }
  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return RatFun{}; }
  Elem one() const { return RatFun{{1}, {1}}; }
  bool is_zero(const Elem& a) const { return a.num.empty(); }
  bool is_one(const Elem& a) const { return a.num.size() == 1 && a.num[0] == 1 && a.den.size() == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, std::uint64_t e) const;
  Elem frobenius(const Elem& a, unsigned e) const;
  Elem from_int(std::int64_t v) const;
  /// The transcendental parameter t.
  Elem generator() const { return RatFun{{0, 1}, {1}}; }
  /// Reduce num/den to lowest terms with monic denominator.
  Elem make(UniPoly num, UniPoly den) const;
  bool in_prime_subfield(const Elem& a) const { return a.num.size() <= 1 && a.den.size() == 1; }
  std::string to_string(const Elem& a) const;
  std::size_t hash(const Elem& a) const;

private:
  FieldSpecPtr spec_;
  std::uint32_t p_;
};

/// Element tagged with its field. Arithmetic between different fields throws.
class FieldElement {
public:
  FieldElement(FieldSpecPtr spec, std::uint32_t finite_value);
  FieldElement(FieldSpecPtr spec, RatFun value);

  const FieldSpecPtr& spec() const { return spec_; }
  bool is_zero() const;
  std::string to_string() const;

  /// Finite-field payload (encoding as in GaloisField).
  std::uint32_t finite_value() const { return std::get<std::uint32_t>(value_); }
  const RatFun& rational_value() const { return std::get<RatFun>(value_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.spec_, b.spec_) && a.value_ == b.value_;
  }

private:
  template <class Fn>
  FieldElement combine(const FieldElement& o, Fn&& fn) const;

  FieldSpecPtr spec_;
  std::variant<std::uint32_t, RatFun> value_;
};

FieldElement field_zero(const FieldSpecPtr& spec);
FieldElement field_one(const FieldSpecPtr& spec);
/// Parse a literal: an integer, a polynomial in the extension generator, or a
/// ratio of polynomials in the parameter, e.g. "t/(t+1) + 1/(t+1)".
FieldElement field_make(const FieldSpecPtr& spec, std::string_view literal);
/// x^(p^e) by e successive p-th powers.
FieldElement field_frobenius(const FieldElement& x, unsigned e);

}  // namespace frobkit

#endif  // FROBKIT_COEFF_HPP
