#include <doctest.h>

#include <algorithm>
#include <random>

#include "frobkit/coeff.hpp"

using namespace frobkit;

namespace {

// Plain polynomial evaluation over F_p, kept apart from the library.
std::uint32_t eval_mod(const UniPoly& f, std::uint32_t t, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * t + f[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t eval_ratfun(const RatFun& f, std::uint32_t t, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{eval_mod(f.num, t, p)} * inv_mod(eval_mod(f.den, t, p), p) % p);
}

// Schoolbook product reduced by the modulus, digit encoding as in GaloisField.
std::uint32_t schoolbook_mul(std::uint32_t a, std::uint32_t b, const UniPoly& modulus, std::uint32_t p) {
  auto digits = [p](std::uint32_t v) {
    UniPoly out;
    while (v) {
      out.push_back(v % p);
      v /= p;
    }
    return out;
  };
  const UniPoly x = digits(a), y = digits(b);
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(std::max(x.size() + y.size(), k) + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
  for (std::size_t i = prod.size(); i-- > k;) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - c) * modulus[j]) % p;
  }
  std::uint32_t out = 0;
  for (std::size_t i = k; i-- > 0;) out = out * p + static_cast<std::uint32_t>(prod[i]);
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  GaloisField f7(FieldSpec::prime(7));
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.from_int(-1) == 6);
  CHECK(f7.pow(3, 6) == 1);
  CHECK(f7.frobenius(4, 3) == 4);
  CHECK_THROWS_AS(f7.inv(0), std::domain_error);
  CHECK_THROWS_AS(f7.generator(), FieldError);
}

TEST_CASE("field specs reject bad input") {
  CHECK_THROWS_AS(FieldSpec::prime(4), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
  CHECK_THROWS_AS(FieldSpec::extension(2, {1, 0, 1}), FieldError);  // a^2 + 1 = (a+1)^2
  CHECK_THROWS_AS(FieldSpec::extension(3, {1, 1, 2}), FieldError);  // not monic
  CHECK_THROWS_AS(FieldSpec::extension(2, UniPoly(24, 0)), FieldError);
  CHECK_THROWS_AS(FieldSpec::rational_function(9), FieldError);
  CHECK(FieldSpec::extension(2, {1, 1, 1})->order() == 4);
  CHECK(FieldSpec::extension(3, {2, 2, 1})->describe() == "F_9 = F_3[a]/(a^2 + 2*a + 2)");
  CHECK(same_field(FieldSpec::prime(5), FieldSpec::prime(5)));
  CHECK_FALSE(same_field(FieldSpec::prime(5), FieldSpec::rational_function(5)));
}

TEST_CASE("extension field multiplication matches schoolbook reduction") {
  for (auto [p, modulus] : std::vector<std::pair<std::uint32_t, UniPoly>>{
           {2, {1, 1, 1}}, {2, {1, 1, 0, 0, 1}}, {3, {2, 2, 1}}, {5, {2, 0, 1}}, {2, {1, 0, 1, 1}}}) {
    GaloisField f(FieldSpec::extension(p, modulus));
    const auto q = static_cast<std::uint32_t>(f.spec()->order());
    std::mt19937 rng(p * 31 + static_cast<unsigned>(modulus.size()));
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int i = 0; i < 200; ++i) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.mul(a, b) == schoolbook_mul(a, b, modulus, p));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      std::uint32_t power = a;
      for (unsigned k = 1; k < p; ++k) power = schoolbook_mul(power, a, modulus, p);
      CHECK(f.frobenius(a, 1) == power);
    }
    // x^q = x for every element
    for (std::uint32_t a = 0; a < q; ++a) CHECK(f.pow(a, q) == a);
  }
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
  GaloisField f(FieldSpec::extension(2, {1, 1, 0, 0, 1}));
  unsigned fixed = 0;
  for (std::uint32_t a = 0; a < 16; ++a) {
    if (f.frobenius(a, 1) == a) ++fixed;
    CHECK(f.frobenius(a, 4) == a);
    CHECK(f.in_prime_subfield(a) == (f.frobenius(a, 1) == a));
  }
  CHECK(fixed == 2);
}

TEST_CASE("rational functions stay normalized") {
  RationalFunctionField k(FieldSpec::rational_function(3, "t"));
  const RatFun t = k.generator();
  const RatFun one = k.one();
  const RatFun a = k.div(k.add(t, one), k.sub(t, one));  // (t+1)/(t-1)
  CHECK(a.den.back() == 1);
  const RatFun b = k.mul(a, k.div(k.sub(t, one), k.add(t, one)));
  CHECK(k.is_one(b));
  const RatFun c = k.make({2, 0, 2}, {0, 2});  // (2t^2 + 2) / (2t) = (t^2 + 1)/t
  CHECK(c.num == UniPoly{1, 0, 1});
  CHECK(c.den == UniPoly{0, 1});
  CHECK(k.to_string(c) == "(t^2 + 1)/t");
  CHECK(k.frobenius(t, 2) == k.pow(t, 9));
  CHECK_THROWS_AS(k.inv(k.zero()), std::domain_error);
}

TEST_CASE("rational function arithmetic commutes with evaluation") {
  const std::uint32_t p = 7;
  RationalFunctionField k(FieldSpec::rational_function(p));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  auto random_ratfun = [&] {
    UniPoly num(3), den(2);
    for (auto& c : num) c = coeff(rng);
    for (auto& c : den) c = coeff(rng);
    den.push_back(1);
    return k.make(num, den);
  };
  for (int i = 0; i < 100; ++i) {
    const RatFun a = random_ratfun(), b = random_ratfun();
    const RatFun sum = k.add(a, b), prod = k.mul(a, b);
    for (std::uint32_t t = 0; t < p; ++t) {
      if (eval_mod(a.den, t, p) == 0 || eval_mod(b.den, t, p) == 0) continue;
      if (eval_mod(sum.den, t, p) != 0)
        CHECK(eval_ratfun(sum, t, p) == (eval_ratfun(a, t, p) + eval_ratfun(b, t, p)) % p);
      if (eval_mod(prod.den, t, p) != 0)
        CHECK(eval_ratfun(prod, t, p) == std::uint64_t{eval_ratfun(a, t, p)} * eval_ratfun(b, t, p) % p);
    }
  }
}

TEST_CASE("field literals") {
  const auto f4 = FieldSpec::extension(2, {1, 1, 1});
  CHECK(field_make(f4, "a^2").to_string() == "a + 1");
  CHECK(field_make(f4, "a*(a+1)") == field_one(f4));
  const auto kt = FieldSpec::rational_function(2, "t");
  CHECK(field_make(kt, "t/(t+1) + 1/(t+1)") == field_one(kt));
  CHECK(field_make(FieldSpec::prime(5), "12").finite_value() == 2);
  CHECK_THROWS(field_make(FieldSpec::prime(5), "s"));
  CHECK_THROWS_AS(field_make(f4, "1") + field_one(kt), FieldError);
  CHECK(field_frobenius(field_make(f4, "a"), 1).to_string() == "a + 1");
}
