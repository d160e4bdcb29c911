#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "monopole/polynomial.hpp"
#include "monopole/rational.hpp"

using monopole::exact::BigInt;
using monopole::exact::Rational;
using Poly = monopole::poly::Polynomial<Rational>;

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::int64_t draw(std::uint64_t& s, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(splitmix(s) % (hi - lo + 1));
}

}  // namespace

TEST_CASE("BigInt arithmetic against int64") {
  std::uint64_t s = 1;
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t x = draw(s, -1000000, 1000000);
    const std::int64_t y = draw(s, -1000000, 1000000);
    CHECK((BigInt(x) + BigInt(y)).to_string() == std::to_string(x + y));
    CHECK((BigInt(x) - BigInt(y)).to_string() == std::to_string(x - y));
    CHECK((BigInt(x) * BigInt(y)).to_string() == std::to_string(x * y));
    if (y != 0) {
      CHECK((BigInt(x) / BigInt(y)).to_string() == std::to_string(x / y));
      CHECK((BigInt(x) % BigInt(y)).to_string() == std::to_string(x % y));
    }
    CHECK((BigInt(x) <=> BigInt(y)) == (x <=> y));
  }
}

TEST_CASE("BigInt grows past 64 bits") {
  BigInt p(1);
  for (int i = 0; i < 40; ++i) p = p * BigInt(1000003);
  // p = 1000003^40; check p / 1000003^39 == 1000003 and p % small prime
  BigInt q(1);
  for (int i = 0; i < 39; ++i) q = q * BigInt(1000003);
  CHECK((p / q).to_string() == "1000003");
  CHECK((p % q).to_string() == "0");
  CHECK(p.to_string().size() > 200);
  // divmod identity on large operands
  const BigInt r = p % BigInt(9973);
  const BigInt d = p / BigInt(9973);
  CHECK(d * BigInt(9973) + r == p);
}

TEST_CASE("BigInt gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)).to_string() == "6");
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)).to_string() == "6");
  CHECK(BigInt::gcd(BigInt(0), BigInt(7)).to_string() == "7");
  BigInt a = BigInt(2) * BigInt(3) * BigInt(5) * BigInt(1000003);
  BigInt b = BigInt(3) * BigInt(5) * BigInt(9973);
  CHECK(BigInt::gcd(a, b).to_string() == "15");
}

TEST_CASE("Rational normalization and arithmetic") {
  CHECK(Rational::of(2, 4).to_string() == "1/2");
  CHECK(Rational::of(-2, -4).to_string() == "1/2");
  CHECK(Rational::of(2, -4).to_string() == "-1/2");
  CHECK(Rational::of(0, 5).to_string() == "0");
  CHECK((Rational::of(1, 3) + Rational::of(1, 6)).to_string() == "1/2");
  CHECK((Rational::of(1, 3) - Rational::of(1, 3)).is_zero());
  CHECK((Rational::of(3, 4) * Rational::of(2, 3)).to_string() == "1/2");
  CHECK((Rational::of(3, 4) / Rational::of(3, 2)).to_string() == "1/2");
  CHECK(Rational::of(1, 3) < Rational::of(1, 2));
  CHECK(Rational::of(-1, 2) < Rational::of(-1, 3));
  CHECK(Rational::of(7, 2).to_double() == doctest::Approx(3.5));
  CHECK_THROWS(Rational::of(1, 0));
}

TEST_CASE("Rational field axioms on random draws") {
  std::uint64_t s = 2;
  for (int i = 0; i < 500; ++i) {
    const Rational a = Rational::of(draw(s, -50, 50), draw(s, 1, 20));
    const Rational b = Rational::of(draw(s, -50, 50), draw(s, 1, 20));
    const Rational c = Rational::of(draw(s, -50, 50), draw(s, 1, 20));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("polynomial ring over rationals") {
  // (x - 1)(x + 1) = x^2 - 1, exactly.
  const Poly xm1 = Poly::linear(Rational(-1), Rational(1));
  const Poly xp1 = Poly::linear(Rational(1), Rational(1));
  const Poly prod = xm1 * xp1;
  CHECK(prod.degree() == 2);
  CHECK(prod.coeff(0) == Rational(-1));
  CHECK(prod.coeff(1) == Rational(0));
  CHECK(prod.coeff(2) == Rational(1));
  CHECK(prod.eval(Rational(1)).is_zero());
  CHECK(prod.eval(Rational(-1)).is_zero());

  // shift identity p(x + s) evaluated at x equals p at x + s
  std::uint64_t s = 3;
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> cs;
    for (int k = 0; k <= 4; ++k) cs.emplace_back(Rational::of(draw(s, -9, 9), draw(s, 1, 4)));
    const Poly p{std::vector<Rational>(cs)};
    const Rational shift = Rational::of(draw(s, -9, 9), draw(s, 1, 4));
    const Rational x = Rational::of(draw(s, -9, 9), draw(s, 1, 4));
    CHECK(p.shifted(shift).eval(x) == p.eval(x + shift));
  }

  // subtraction yields the exact zero polynomial
  CHECK((prod - prod).is_zero());
  CHECK((prod - prod).degree() == -1);
}
