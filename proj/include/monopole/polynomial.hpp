#pragma once

#include <cstddef>
#include <vector>

// Dense univariate polynomial over any field-like scalar (double or
// exact::Rational). Coefficients ascending, trailing zeros trimmed.

namespace monopole::poly {

template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(T v) { return Polynomial(std::vector<T>{v}); }
  // c0 + c1 x
  static Polynomial linear(T c0, T c1) {
    return Polynomial(std::vector<T>{c0, c1});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  bool is_zero() const { return c_.empty(); }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial operator-(const Polynomial& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial();
    std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Polynomial(std::move(r));
  }

  Polynomial operator*(const T& s) const {
    std::vector<T> r = c_;
    for (auto& v : r) v = v * s;
    return Polynomial(std::move(r));
  }

  T eval(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // p(x + shift), exact in the scalar type.
  Polynomial shifted(const T& shift) const {
    Polynomial result;
    Polynomial base = constant(T(1));
    Polynomial x_plus = linear(shift, T(1));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      result = result + base * c_[i];
      base = base * x_plus;
    }
    return result;
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

}  // namespace monopole::poly
