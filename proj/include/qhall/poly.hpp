#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qhall/errors.hpp"

namespace qhall {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial, coefficients low-to-high, no trailing zeros.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class Poly {
 public:
  using Scalar = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly one() { return constant(T(1)); }
  /// c * x^k
  static Poly monomial(const T& c, int k) {
    std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
    v.back() = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T coeff(int k) const {
    return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : T(0);
  }
  const T& leading() const { return coeffs_.back(); }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) return static_cast<int>(k);
    }
    return 0;
  }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(x^k)
  Poly substitute_power(int k) const {
    if (is_zero()) return {};
    std::vector<T> v(static_cast<std::size_t>(degree() * k) + 1, T(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) v[j * static_cast<std::size_t>(k)] = coeffs_[j];
    return Poly(std::move(v));
  }

  /// x^k * p
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<T> v(static_cast<std::size_t>(k), T(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

  /// p / x^k, requiring the low k coefficients to vanish.
  Poly unshifted(int k) const {
    if (is_zero() || k == 0) return *this;
    check_internal(valuation() >= k, "unshift below valuation");
    return Poly(std::vector<T>(coeffs_.begin() + k, coeffs_.end()));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const T& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const T& c) { return a *= c; }
  friend Poly operator*(const T& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder. Over a field this always succeeds; over the
  /// integers each leading-coefficient division must be exact.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    check_internal(!d.is_zero(), "polynomial division by zero");
    if (degree() < d.degree()) return {Poly{}, *this};
    std::vector<T> rem = coeffs_;
    std::vector<T> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, T(0));
    const T& lead = d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      const std::size_t top = static_cast<std::size_t>(k + d.degree());
      if (rem[top] == 0) continue;
      T c = divide_scalar(rem[top], lead);
      quo[static_cast<std::size_t>(k)] = c;
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= c * d.coeffs_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  /// Division that must leave no remainder.
  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    check_internal(r.is_zero(), "inexact polynomial division");
    return q;
  }

 private:
  static T divide_scalar(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, Integer>) {
      check_internal(mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0, "inexact integer division in polynomial");
      return T(a / b);
    } else {
      return T(a / b);
    }
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Polynomials in q over the integers (Hall polynomials live here).
using IntPoly = Poly<Integer>;
/// Polynomials in v over the rationals (numerators/denominators of RatFunc).
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);
/// gcd of the coefficients, sign-normalized so that the leading coefficient
/// of p / content(p) is positive. content(0) = 0.
Integer content(const IntPoly& p);
/// Clears rational denominators and removes the content; the result is
/// a positive rational multiple of p.
IntPoly primitive_part(const RatPoly& p);

/// Monic gcd over the rationals; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& p);

/// [[m]] = 1 + q + ... + q^{m-1}
IntPoly gauss(int m);
/// [[m]]! = [[1]] [[2]] ... [[m]]
IntPoly gauss_factorial(int m);

/// Laurent polynomial in v over the integers: v^lo * body, body(0) != 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int lo, IntPoly body);
  explicit LaurentPoly(const IntPoly& p) : LaurentPoly(0, p) {}
  /// p(q) with q = v^2.
  static LaurentPoly from_q(const IntPoly& p_in_q) { return LaurentPoly(0, p_in_q.substitute_power(2)); }
  /// c * v^k
  static LaurentPoly monomial(const Integer& c, int k) { return LaurentPoly(k, IntPoly::constant(c)); }

  int lo() const { return lo_; }
  const IntPoly& body() const { return body_; }
  /// Highest exponent; meaningless for zero.
  int hi() const { return lo_ + body_.degree(); }
  bool is_zero() const { return body_.is_zero(); }
  Integer coeff(int exponent) const { return body_.coeff(exponent - lo_); }
  /// Coefficients for exponents lo..hi.
  const std::vector<Integer>& coeffs() const { return body_.coeffs(); }
  bool nonnegative() const;

  LaurentPoly shifted(int k) const { return is_zero() ? *this : LaurentPoly(lo_ + k, body_); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly(a.lo_, -a.body_); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void normalize();

  int lo_ = 0;
  IntPoly body_;
};

/// Element of Q(v) in lowest terms: gcd(num, den) = 1, den monic. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(RatPoly::one()) {}
  RatFunc(RatPoly num, RatPoly den);
  explicit RatFunc(const RatPoly& p) : num_(p), den_(RatPoly::one()) {}
  explicit RatFunc(const IntPoly& p) : num_(to_rational(p)), den_(RatPoly::one()) {}
  explicit RatFunc(const LaurentPoly& p);
  RatFunc(long c) : num_(RatPoly::constant(Rational(c))), den_(RatPoly::one()) {}  // NOLINT
  /// v^k for any integer k.
  static RatFunc v_power(int k);

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc inverse() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, Normalized{}); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  struct Normalized {};
  RatFunc(RatPoly num, RatPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  RatPoly num_;
  RatPoly den_;
};

std::string to_string(const Integer& z);
std::string to_string(const Rational& r);
/// "1 + 2*q + q^3"
std::string to_string(const IntPoly& p, const std::string& var = "q");
std::string to_string(const RatPoly& p, const std::string& var = "v");
std::string to_string(const LaurentPoly& p, const std::string& var = "v");
std::string to_string(const RatFunc& f, const std::string& var = "v");

}  // namespace qhall
