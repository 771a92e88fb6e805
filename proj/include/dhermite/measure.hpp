#pragma once

#include "dhermite/deformation.hpp"
#include "dhermite/matrix.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhermite {

/// Polynomial part of the signed density D_{s,alpha}: (-alpha)^s H_s(z - alpha/2).
///
/// The full density is poly(z) e^{-z^2} / sqrt(pi); that factor stays implicit.
struct MeasureRep {
  unsigned s = 0;
  Alpha alpha = Alpha::plus();
  ZPoly poly;
};

inline unsigned checked_level(int s) {
  if (s < 0) throw std::domain_error("measure level s must be a nonnegative integer, got " + std::to_string(s));
  return static_cast<unsigned>(s);
}

inline MeasureRep measure_poly(int s, Alpha alpha) {
  const unsigned level = checked_level(s);
  ZPoly h = shift(hermite(level), Rational(-alpha.value(), 2));
  return {level, alpha, h * Rational((-alpha).pow(static_cast<int>(level)))};
}

/// <z^k> under e^{-z^2}/sqrt(pi): (k-1)!!/2^{k/2} for even k, 0 for odd k.
inline Rational gaussian_moment(unsigned k) {
  if (k % 2 == 1) return Rational(0);
  BigInt dfact = 1;
  for (unsigned j = 1; j < k; j += 2) dfact *= j;
  return Rational(dfact) / pow(Rational(2), static_cast<int>(k / 2));
}

/// Integral of p q e^{-z^2}/sqrt(pi) over the real line, term by term.
inline SPoly gaussian_inner(const ZPoly& p, const ZPoly& q) {
  const ZPoly r = p * q;
  SPoly acc;
  for (std::size_t k = 0; k < r.size(); k += 2) acc += r[k] * gaussian_moment(static_cast<unsigned>(k));
  return acc;
}

/// The value of an s-free polynomial; throws std::logic_error if s survives.
inline Rational constant_value(const SPoly& p) {
  if (p.degree() > 0) throw std::logic_error("constant_value: polynomial still depends on s");
  return p.coeff(0);
}

/// Integral of D_{s,alpha}; equals 1 for every s.
inline Rational total_charge(int s, Alpha alpha) {
  return constant_value(gaussian_inner(measure_poly(s, alpha).poly, z_const(Rational(1))));
}

/// Numeric M^s_0..M^s_n at an integer level.
inline std::vector<ZPoly> m_family(unsigned n_max, unsigned s, Alpha alpha) {
  std::vector<ZPoly> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(m_poly({n, alpha, SValue::numeric(s)}));
  return out;
}

/// Square table of I^s_{nm} = integral M_n M_m D_s, 0 <= n, m <= N.
struct InnerTable {
  unsigned s = 0;
  Alpha alpha = Alpha::plus();
  unsigned N = 0;
  Matrix<Rational> entries;

  const Rational& operator()(unsigned n, unsigned m) const { return entries(n, m); }
};

/// I^s_{nm} by integrating M_n M_m against the measure polynomial.
inline Rational inner_I_direct(unsigned n, unsigned m, int s, Alpha alpha) {
  const MeasureRep d = measure_poly(s, alpha);
  const ZPoly mn = m_poly({n, alpha, SValue::numeric(d.s)});
  const ZPoly mm = m_poly({m, alpha, SValue::numeric(d.s)});
  return constant_value(gaussian_inner(mn * mm, d.poly));
}

inline InnerTable inner_table_direct(unsigned N, int s, Alpha alpha) {
  const MeasureRep d = measure_poly(s, alpha);
  const std::vector<ZPoly> ms = m_family(N, d.s, alpha);
  InnerTable t{d.s, alpha, N, Matrix<Rational>(N + 1, N + 1)};
  for (unsigned n = 0; n <= N; ++n) {
    const ZPoly weighted = ms[n] * d.poly;
    for (unsigned m = n; m <= N; ++m) {
      t.entries(n, m) = constant_value(gaussian_inner(weighted, ms[m]));
      t.entries(m, n) = t.entries(n, m);
    }
  }
  return t;
}

/// I^s_{nm} built level by level from I^0_{nm} = 2^n n! delta_{nm}.
///
/// Integrating by parts against H_{s+1}(z - alpha/2) = (2z - alpha) H_s - H_s'
/// gives  integral f D_{s+1} = integral (f - alpha f') D_s.  With
/// f = M^{s+1}_n M^{s+1}_m expanded in M^s, and a^n_k = (2 alpha)^k n!/(n-k)!
/// satisfying 2 alpha (n-k) a^n_k = a^n_{k+1}, every term with k = 0 or l = 0
/// cancels except k = l = 0, leaving
///
///   I^{s+1}_{nm} = I^s_{nm} - sum_{k=1}^{n} sum_{l=1}^{m} a^n_k a^m_l I^s_{(n-k)(m-l)}.
///
/// Only indices <= N are touched, so an (N+1)^2 table per level suffices.
inline InnerTable inner_table_recursive(unsigned N, int s, Alpha alpha) {
  const unsigned level = checked_level(s);
  Matrix<Rational> a(N + 1, N + 1);  // a(n, k) = a^n_k
  for (unsigned n = 0; n <= N; ++n)
    for (unsigned k = 0; k <= n; ++k)
      a(n, k) = pow(Rational(2 * alpha.value()), static_cast<int>(k)) * falling_factorial(n, k);

  Matrix<Rational> cur(N + 1, N + 1);
  for (unsigned n = 0; n <= N; ++n) cur(n, n) = pow(Rational(2), static_cast<int>(n)) * factorial(n);

  for (unsigned step = 0; step < level; ++step) {
    Matrix<Rational> next(N + 1, N + 1);
    for (unsigned n = 0; n <= N; ++n) {
      for (unsigned m = n; m <= N; ++m) {
        Rational v = cur(n, m);
        for (unsigned k = 1; k <= n; ++k)
          for (unsigned l = 1; l <= m; ++l) v -= a(n, k) * a(m, l) * cur(n - k, m - l);
        next(n, m) = v;
        next(m, n) = v;
      }
    }
    cur = std::move(next);
  }
  return {level, alpha, N, std::move(cur)};
}

inline Rational inner_I_recursive(unsigned n, unsigned m, int s, Alpha alpha) {
  return inner_table_recursive(std::max(n, m), s, alpha)(n, m);
}

/// integral M_n D_s; equals the Kronecker delta in n.
inline Rational partial_orthogonality(unsigned n, int s, Alpha alpha) {
  const MeasureRep d = measure_poly(s, alpha);
  return constant_value(gaussian_inner(m_poly({n, alpha, SValue::numeric(d.s)}), d.poly));
}

/// Coefficients d_p with z^n D_s = sum_p d_p D_p.
struct DecompCoeffs {
  unsigned n = 0;
  unsigned s = 0;
  Alpha alpha = Alpha::plus();
  std::map<int, Rational> coeffs;  // p -> d_p, zero entries omitted
};

/// Same decomposition with symbolic s; keys are offsets p - s in [-n, n].
struct SymbolicDecomp {
  unsigned n = 0;
  Alpha alpha = Alpha::plus();
  std::map<int, SPoly> coeffs;
};

/// Iterates z D_p = alpha (-p D_{p-1} + D_p / 2 - D_{p+1} / 2) with symbolic s.
inline SymbolicDecomp moment_decompose_symbolic(unsigned n, Alpha alpha) {
  const Rational a = alpha.rational();
  const Rational half(1, 2);
  std::map<int, SPoly> cur{{0, SPoly(Rational(1))}};
  for (unsigned step = 0; step < n; ++step) {
    std::map<int, SPoly> next;
    for (const auto& [off, c] : cur) {
      const SPoly level = s_var() + SPoly(Rational(off));
      next[off - 1] -= c * level * a;
      next[off] += c * (a * half);
      next[off + 1] -= c * (a * half);
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  return {n, alpha, std::move(cur)};
}

/// Numeric-s decomposition; mass that would reach p < 0 is checked to vanish.
inline DecompCoeffs moment_decompose(unsigned n, int s, Alpha alpha) {
  const unsigned level = checked_level(s);
  const Rational a = alpha.rational();
  const Rational half(1, 2);
  std::map<int, Rational> cur{{static_cast<int>(level), Rational(1)}};
  for (unsigned step = 0; step < n; ++step) {
    std::map<int, Rational> next;
    for (const auto& [p, c] : cur) {
      const Rational down = -c * Rational(p) * a;
      if (p == 0) {
        if (!down.is_zero()) throw std::logic_error("moment_decompose: mass below level 0");
      } else {
        next[p - 1] += down;
      }
      next[p] += c * a * half;
      next[p + 1] -= c * a * half;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  return {n, level, alpha, std::move(cur)};
}

}  // namespace dhermite
