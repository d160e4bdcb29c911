#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

// Small arbitrary-precision integer and exact rational. Only what the exact
// polynomial-identity checks need: comparison, ring arithmetic, divmod and
// gcd. Magnitudes stay in the hundreds of bits, so schoolbook algorithms are
// fine.

namespace monopole::exact {

class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)

  bool negative() const { return negative_; }
  bool is_zero() const { return limbs_.empty(); }

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt operator/(const BigInt& o) const;  // truncated toward zero
  BigInt operator%(const BigInt& o) const;  // sign follows the dividend

  bool operator==(const BigInt& o) const;
  std::strong_ordering operator<=>(const BigInt& o) const;

  static BigInt gcd(BigInt x, BigInt y);  // nonnegative

  double to_double() const;
  std::string to_string() const;

 private:
  static int cmp_mag(const std::vector<std::uint32_t>& x,
                     const std::vector<std::uint32_t>& y);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& x,
                                            const std::vector<std::uint32_t>& y);
  // Requires |x| >= |y|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& x,
                                            const std::vector<std::uint32_t>& y);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& x,
                                            const std::vector<std::uint32_t>& y);
  static void divmod_mag(const std::vector<std::uint32_t>& num,
                         const std::vector<std::uint32_t>& den,
                         std::vector<std::uint32_t>& quot,
                         std::vector<std::uint32_t>& rem);
  void trim();

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // little-endian base 2^32; empty == 0
};

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);
  static Rational of(std::int64_t num, std::int64_t den) {
    return Rational(BigInt(num), BigInt(den));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }  // always positive
  bool is_zero() const { return num_.is_zero(); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const;
  std::strong_ordering operator<=>(const Rational& o) const;

  double to_double() const;
  std::string to_string() const;  // "num/den", or "num" when den == 1

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

}  // namespace monopole::exact
