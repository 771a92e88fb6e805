#pragma once

#include "dhermite/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dhermite {

/// Dense univariate polynomial with ascending coefficients.
///
/// The coefficient ring T must have a value-initialized zero (T{}) and the
/// usual ring operators. Trailing zeros are stripped on construction, so the
/// zero polynomial is the empty coefficient list and has degree -1.
template <class T>
class Polynomial {
 public:
  using coefficient_type = T;

  Polynomial() = default;
  explicit Polynomial(T constant) {
    coeffs_.push_back(std::move(constant));
    normalize();
  }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial monomial(T c, std::size_t power) {
    std::vector<T> v(power + 1);
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// The indeterminate itself.
  static Polynomial variable() { return monomial(T(Rational(1)), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const T> coeffs() const { return coeffs_; }

  /// Coefficient of x^k; zero beyond the degree.
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T{}; }
  const T& operator[](std::size_t k) const { return coeffs_.at(k); }
  const T& leading() const { return coeffs_.at(coeffs_.size() - 1); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T{}) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  /// Scaling by an element of the coefficient ring.
  friend Polynomial operator*(Polynomial a, const T& c) {
    for (auto& x : a.coeffs_) x = x * c;
    a.normalize();
    return a;
  }
  friend Polynomial operator*(const T& c, Polynomial a) { return std::move(a) * c; }

  /// Scaling by a rational when the coefficients are themselves polynomials.
  friend Polynomial operator*(Polynomial a, const Rational& r)
    requires(!std::is_same_v<T, Rational>)
  {
    for (auto& x : a.coeffs_) x = x * r;
    a.normalize();
    return a;
  }
  friend Polynomial operator*(const Rational& r, Polynomial a)
    requires(!std::is_same_v<T, Rational>)
  {
    return std::move(a) * r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Applies f to every coefficient; f may change the coefficient type.
  template <class F>
  auto map(F&& f) const {
    using R = std::remove_cvref_t<decltype(f(std::declval<const T&>()))>;
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Polynomial<R>(std::move(out));
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Polynomial in the deformation parameter s over the rationals.
using SPoly = Polynomial<Rational>;
/// Polynomial in z whose coefficients are polynomials in s.
using ZPoly = Polynomial<SPoly>;

inline SPoly s_var() { return SPoly::variable(); }
inline SPoly s_const(const Rational& c) { return SPoly(c); }
inline ZPoly z_var() { return ZPoly::variable(); }
inline ZPoly z_const(const Rational& c) { return ZPoly(SPoly(c)); }
inline ZPoly z_const(const SPoly& c) { return ZPoly(c); }

/// Lifts a plain rational polynomial in z into the z-over-Q[s] tower.
inline ZPoly lift(const Polynomial<Rational>& p) {
  return p.map([](const Rational& c) { return SPoly(c); });
}

/// True when every z-coefficient is s-free.
inline bool is_numeric(const ZPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const SPoly& c) { return c.degree() <= 0; });
}

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  if (p.degree() <= 0) return {};
  std::vector<T> out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * Rational(static_cast<unsigned long>(k));
  return Polynomial<T>(std::move(out));
}

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p, unsigned order) {
  Polynomial<T> r = p;
  for (unsigned i = 0; i < order && !r.is_zero(); ++i) r = derivative(r);
  return r;
}

/// Horner evaluation at a point of the coefficient ring or any ring acting on it.
template <class T, class X>
T evaluate(const Polynomial<T>& p, const X& x) {
  T acc{};
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

/// p(x + c) for a constant c of the coefficient ring.
template <class T>
Polynomial<T> shift(const Polynomial<T>& p, const T& c) {
  const Polynomial<T> x_plus_c{c, T(Rational(1))};
  Polynomial<T> acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x_plus_c + Polynomial<T>(p[k]);
  return acc;
}

inline ZPoly shift(const ZPoly& p, const Rational& c) { return shift(p, SPoly(c)); }

/// Replaces s by a rational value in every z-coefficient.
inline ZPoly substitute_s(const ZPoly& p, const Rational& s) {
  return p.map([&](const SPoly& c) { return SPoly(evaluate(c, s)); });
}

/// Replaces s by an s-polynomial (e.g. s+1) in every z-coefficient.
inline ZPoly substitute_s(const ZPoly& p, const SPoly& s) {
  return p.map([&](const SPoly& c) {
    SPoly acc;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * s + SPoly(c[k]);
    return acc;
  });
}

/// Quotient and remainder over a field of coefficients.
inline std::pair<SPoly, SPoly> divmod(const SPoly& a, const SPoly& b) {
  if (b.is_zero()) throw std::domain_error("SPoly division by zero");
  if (a.degree() < b.degree()) return {SPoly{}, a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quo(a.size() - b.size() + 1);
  const Rational& lead = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + b.size() - 1] / lead;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
  }
  return {SPoly(std::move(quo)), SPoly(std::move(rem))};
}

/// Division that must leave no remainder; throws std::logic_error otherwise.
inline SPoly exact_divide(const SPoly& a, const SPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_divide: nonzero remainder");
  return q;
}

inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }

/// Rising factorial s(s+1)...(s+k-1) as an s-polynomial; k = 0 gives 1.
inline SPoly rising_factorial(unsigned k) {
  SPoly r(Rational(1));
  for (unsigned i = 0; i < k; ++i) r *= SPoly{Rational(i), Rational(1)};
  return r;
}

}  // namespace dhermite
