#include "monopole/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace monopole::exact {

namespace {

using Limbs = std::vector<std::uint32_t>;

void trim_limbs(Limbs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// v <<= 1
void shl1(Limbs& v) {
  std::uint32_t carry = 0;
  for (auto& limb : v) {
    const std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry) v.push_back(carry);
}

int bit_length(const Limbs& v) {
  if (v.empty()) return 0;
  int bits = 32 * static_cast<int>(v.size() - 1);
  std::uint32_t top = v.back();
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool test_bit(const Limbs& v, int i) {
  return (v[i / 32] >> (i % 32)) & 1u;
}

}  // namespace

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  std::uint64_t mag =
      v < 0 ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  while (mag) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

void BigInt::trim() {
  trim_limbs(limbs_);
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const Limbs& x, const Limbs& y) {
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  return 0;
}

Limbs BigInt::add_mag(const Limbs& x, const Limbs& y) {
  Limbs r(std::max(x.size(), y.size()), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = carry;
    if (i < x.size()) s += x[i];
    if (i < y.size()) s += y[i];
    r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

Limbs BigInt::sub_mag(const Limbs& x, const Limbs& y) {
  Limbs r(x.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(x[i]) - borrow -
                     (i < y.size() ? static_cast<std::int64_t>(y[i]) : 0);
    borrow = 0;
    if (s < 0) {
      s += (std::int64_t{1} << 32);
      borrow = 1;
    }
    r[i] = static_cast<std::uint32_t>(s);
  }
  trim_limbs(r);
  return r;
}

Limbs BigInt::mul_mag(const Limbs& x, const Limbs& y) {
  if (x.empty() || y.empty()) return {};
  Limbs r(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::uint64_t cur = r[i + j] +
                          static_cast<std::uint64_t>(x[i]) * y[j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + y.size();
    while (carry) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  trim_limbs(r);
  return r;
}

// Binary long division; magnitudes here stay in the hundreds of bits so the
// O(bits * limbs) cost is irrelevant.
void BigInt::divmod_mag(const Limbs& num, const Limbs& den, Limbs& quot,
                        Limbs& rem) {
  if (den.empty()) throw std::domain_error("BigInt: division by zero");
  quot.assign(num.size(), 0);
  rem.clear();
  for (int i = bit_length(num) - 1; i >= 0; --i) {
    shl1(rem);
    if (test_bit(num, i)) {
      if (rem.empty()) rem.push_back(1);
      else rem[0] |= 1u;
    }
    if (cmp_mag(rem, den) >= 0) {
      rem = sub_mag(rem, den);
      quot[i / 32] |= (1u << (i % 32));
    }
  }
  trim_limbs(quot);
  trim_limbs(rem);
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  if (negative_ == o.negative_) {
    r.limbs_ = add_mag(limbs_, o.limbs_);
    r.negative_ = negative_;
  } else {
    const int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.limbs_ = sub_mag(limbs_, o.limbs_);
      r.negative_ = negative_;
    } else {
      r.limbs_ = sub_mag(o.limbs_, limbs_);
      r.negative_ = o.negative_;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r;
  r.limbs_ = mul_mag(limbs_, o.limbs_);
  r.negative_ = !r.limbs_.empty() && (negative_ != o.negative_);
  return r;
}

BigInt BigInt::operator/(const BigInt& o) const {
  Limbs q, rem;
  divmod_mag(limbs_, o.limbs_, q, rem);
  BigInt r;
  r.limbs_ = std::move(q);
  r.negative_ = !r.limbs_.empty() && (negative_ != o.negative_);
  return r;
}

BigInt BigInt::operator%(const BigInt& o) const {
  Limbs q, rem;
  divmod_mag(limbs_, o.limbs_, q, rem);
  BigInt r;
  r.limbs_ = std::move(rem);
  r.negative_ = !r.limbs_.empty() && negative_;
  return r;
}

bool BigInt::operator==(const BigInt& o) const {
  return negative_ == o.negative_ && limbs_ == o.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (negative_ != o.negative_)
    return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  const int c = cmp_mag(limbs_, o.limbs_);
  const int s = negative_ ? -c : c;
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt BigInt::gcd(BigInt x, BigInt y) {
  x.negative_ = false;
  y.negative_ = false;
  while (!y.is_zero()) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

double BigInt::to_double() const {
  double v = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
  return negative_ ? -v : v;
}

std::string BigInt::to_string() const {
  if (limbs_.empty()) return "0";
  Limbs cur = limbs_;
  std::string digits;
  const Limbs base = {1000000000u};
  while (!cur.empty()) {
    Limbs q, rem;
    divmod_mag(cur, base, q, rem);
    std::uint32_t chunk = rem.empty() ? 0 : rem[0];
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
    cur = std::move(q);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  const BigInt g = BigInt::gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator==(const Rational& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return (num_ * o.den_) <=> (o.num_ * den_);
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace monopole::exact
