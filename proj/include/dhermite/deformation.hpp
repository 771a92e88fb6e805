#pragma once

#include "dhermite/alpha.hpp"
#include "dhermite/polynomial.hpp"
#include "dhermite/rational.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhermite {

/// Physicists' Hermite polynomial H_n via H_{n+1} = 2z H_n - 2n H_{n-1}.
inline ZPoly hermite(unsigned n) {
  ZPoly prev;                 // H_{-1} = 0
  ZPoly cur = z_const(Rational(1));  // H_0
  const ZPoly two_z = z_var() * Rational(2);
  for (unsigned k = 0; k < n; ++k) {
    ZPoly next = two_z * cur - prev * Rational(2 * k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Deformation parameter: either the indeterminate s or a nonnegative integer.
class SValue {
 public:
  static SValue symbolic() { return SValue(); }
  static SValue numeric(unsigned s) { return SValue(s); }

  bool is_symbolic() const { return !value_.has_value(); }
  unsigned value() const {
    if (!value_) throw std::logic_error("SValue: symbolic s has no numeric value");
    return *value_;
  }
  /// s as an element of Q[s]: the variable itself, or a constant.
  SPoly as_spoly() const { return value_ ? SPoly(Rational(*value_)) : s_var(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "sym"; }

  friend bool operator==(const SValue&, const SValue&) = default;

 private:
  SValue() = default;
  explicit SValue(unsigned v) : value_(v) {}
  std::optional<unsigned> value_;
};

struct DeformParams {
  unsigned n = 0;
  Alpha alpha = Alpha::plus();
  SValue s = SValue::symbolic();
};

/// Binds s in a symbolic result according to the requested mode.
inline ZPoly bind_s(const ZPoly& p, const SValue& s) {
  return s.is_symbolic() ? p : substitute_s(p, Rational(s.value()));
}

/// exp(sigma * sum_{m>=1} alpha^m d^m/m) applied to p.
///
/// The exponent lowers degree, so on a degree-d polynomial it is nilpotent
/// of order d+1 and both series stop at d. sigma = s gives M from H,
/// sigma = -s the inverse map.
inline ZPoly exp_deform(const ZPoly& p, const SPoly& sigma, Alpha alpha) {
  const int d = p.degree();
  if (d <= 0) return p;
  auto exponent = [&](const ZPoly& q) {
    ZPoly acc;
    ZPoly dq = q;
    for (int m = 1; m <= q.degree(); ++m) {
      dq = derivative(dq);
      acc += dq * Rational(alpha.pow(m), m);
    }
    return acc * sigma;
  };
  ZPoly result = p;
  ZPoly term = p;
  for (int k = 1; k <= d; ++k) {
    term = exponent(term) * Rational(1, k);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

/// M_n as sum_k (2 alpha)^k (s)_k C(n,k) H_{n-k}.
inline ZPoly m_poly(const DeformParams& params) {
  const unsigned n = params.n;
  ZPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    Rational c = pow(Rational(2 * params.alpha.value()), static_cast<int>(k)) * binomial(n, k);
    acc += hermite(n - k) * (rising_factorial(k) * c);
  }
  return bind_s(acc, params.s);
}

/// M_n read off the generating function exp(-t^2 + 2tz) / (1 - 2 alpha t)^s.
///
/// Multiplies the three t-series exp(-t^2), exp(2tz) and
/// sum_k (2 alpha)^k (s)_k t^k / k! and scales the t^n coefficient by n!.
inline ZPoly m_from_genfunc(const DeformParams& params) {
  const unsigned n = params.n;
  const Rational two_alpha(2 * params.alpha.value());
  ZPoly acc;
  for (unsigned i = 0; 2 * i <= n; ++i) {
    const Rational gauss = Rational(i % 2 == 0 ? 1 : -1) / factorial(i);
    for (unsigned j = 0; 2 * i + j <= n; ++j) {
      const unsigned k = n - 2 * i - j;
      const ZPoly linear = ZPoly::monomial(SPoly(pow(Rational(2), static_cast<int>(j)) / factorial(j)), j);
      const SPoly binom_series = rising_factorial(k) * (pow(two_alpha, static_cast<int>(k)) / factorial(k));
      acc += linear * (binom_series * gauss);
    }
  }
  return bind_s(acc * factorial(n), params.s);
}

/// M_n(0) in closed form:
/// n! 2^n alpha^n sum_{k<=n/2} (-1)^k / (4^k k! (n-2k)!) (s)_{n-2k}.
inline SPoly m_at_zero(unsigned n, Alpha alpha) {
  SPoly acc;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Rational c = Rational(k % 2 == 0 ? 1 : -1) /
                 (pow(Rational(4), static_cast<int>(k)) * factorial(k) * factorial(n - 2 * k));
    acc += rising_factorial(n - 2 * k) * c;
  }
  return acc * (factorial(n) * pow(Rational(2), static_cast<int>(n)) * Rational(alpha.pow(static_cast<int>(n))));
}

/// M_n = sum_p 2^p C(n, p) z^p M_{n-p}(0).
inline ZPoly m_organized_by_zero_values(unsigned n, Alpha alpha) {
  ZPoly acc;
  for (unsigned p = 0; p <= n; ++p) {
    SPoly c = m_at_zero(n - p, alpha) * (pow(Rational(2), static_cast<int>(p)) * binomial(n, p));
    acc += ZPoly::monomial(std::move(c), p);
  }
  return acc;
}

/// M^{s+1}_n = sum_k (2 alpha)^k n!/(n-k)! M^s_{n-k}, from M^s_0..M^s_n.
inline ZPoly m_next_in_s(std::span<const ZPoly> m_list, unsigned n, Alpha alpha) {
  if (m_list.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("m_next_in_s: expected " + std::to_string(n + 1) + " polynomials, got " +
                                std::to_string(m_list.size()));
  }
  ZPoly acc;
  for (unsigned k = 0; k <= n; ++k) {
    acc += m_list[n - k] * (pow(Rational(2 * alpha.value()), static_cast<int>(k)) * falling_factorial(n, k));
  }
  return acc;
}

/// M_{n+1} = 2z M_n - 2n M_{n-1} + s sum_{m=0}^{n} (2 alpha)^{m+1} n!/(n-m)! M_{n-m}.
///
/// `lower` holds M_0..M_n at the same s; m_n and m_prev must match its last
/// two entries (m_prev is ignored for n = 0).
inline ZPoly m_next_in_n(const ZPoly& m_n, const ZPoly& m_prev, std::span<const ZPoly> lower, unsigned n,
                         const SPoly& s, Alpha alpha) {
  if (lower.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("m_next_in_n: lower list must hold M_0..M_n");
  }
  if (!(lower[n] == m_n) || (n > 0 && !(lower[n - 1] == m_prev))) {
    throw std::invalid_argument("m_next_in_n: m_n / m_prev inconsistent with lower list");
  }
  ZPoly acc = z_var() * m_n * Rational(2);
  if (n > 0) acc -= m_prev * Rational(2 * n);
  ZPoly tail;
  for (unsigned m = 0; m <= n; ++m) {
    tail += lower[n - m] * (pow(Rational(2 * alpha.value()), static_cast<int>(m + 1)) * falling_factorial(n, m));
  }
  return acc + tail * s;
}

}  // namespace dhermite
