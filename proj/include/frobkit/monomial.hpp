#ifndef FROBKIT_MONOMIAL_HPP
#define FROBKIT_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobkit {

/// Upper bound on ring variables, including one auxiliary elimination variable.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector with a cached total degree. Unused slots are zero, which
/// keeps every order comparison independent of the ring's variable count.
class Monomial {
public:
  using Exponent = std::uint16_t;
  static constexpr unsigned kMaxExponent = 0xffff;

  Monomial() = default;

  static Monomial from_exponents(std::span<const unsigned> exps) {
    if (exps.size() > kMaxVars) throw std::length_error("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }
  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e) {
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    deg_ = deg_ - exp_[i] + e;
    exp_[i] = static_cast<Exponent>(e);
  }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = static_cast<unsigned>(a.exp_[i]) + b.exp_[i];
      if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
      r.exp_[i] = static_cast<Exponent>(e);
    }
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(a.exp_[i] - b.exp_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
      r.deg_ += r.exp_[i];
    }
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
      r.deg_ += r.exp_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exp_[i] && b.exp_[i]) return false;
    return true;
  }

  Monomial pow(unsigned k) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned long e = static_cast<unsigned long>(exp_[i]) * k;
      if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
      r.exp_[i] = static_cast<Exponent>(e);
    }
    r.deg_ = deg_ * k;
    return r;
  }

  /// Monotone signature: a | b implies (mask(a) & ~mask(b)) == 0.
  std::uint32_t divmask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = exp_[i];
      if (e >= 1) m |= 1u << (4 * i);
      if (e >= 2) m |= 2u << (4 * i);
      if (e >= 8) m |= 4u << (4 * i);
      if (e >= 32) m |= 8u << (4 * i);
    }
    return m;
  }

  std::size_t hash() const {
    std::uint64_t w[2];
    std::memcpy(w, exp_.data(), sizeof(w));
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ull;
    h ^= (w[1] + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  const std::array<Exponent, kMaxVars>& exponents() const { return exp_; }

private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t deg_ = 0;
};

static_assert(sizeof(std::array<Monomial::Exponent, kMaxVars>) == 16);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Total, multiplicative monomial order with 1 minimal.
class MonomialOrder {
public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  /// Elimination order: variables [0, split) compared first (grevlex within the
  /// block), then grevlex on the remaining variables.
  static MonomialOrder block(unsigned split) { return MonomialOrder(Kind::block, split); }

  Kind kind() const { return kind_; }
  unsigned split() const { return split_; }
  std::string name() const;

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::grevlex: return compare_grevlex(a, b);
      case Kind::lex:
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::block: return compare_block(a, b);
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_;
  }
  friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ != b.kind_ ? a.kind_ < b.kind_ : a.split_ < b.split_;
  }

private:
  MonomialOrder(Kind k, unsigned split) : kind_(k), split_(split) {}

  static int compare_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  int compare_block(const Monomial& a, const Monomial& b) const {
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < split_; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = split_; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    const unsigned ra = a.degree() - da, rb = b.degree() - db;
    if (ra != rb) return ra > rb ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > split_;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  unsigned split_;
};

inline std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block:" + std::to_string(split_);
  }
  return {};
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace frobkit

#endif  // FROBKIT_MONOMIAL_HPP
