#pragma once

#include "dhermite/deformation.hpp"
#include "dhermite/matrix.hpp"

#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace dhermite {

/// (d^2/dz^2 - 2z d/dz + 2n) p.
inline ZPoly hermite_operator(const ZPoly& p, unsigned n) {
  const ZPoly dp = derivative(p);
  return derivative(dp) - z_var() * dp * Rational(2) + p * Rational(2 * n);
}

/// (D + 2n) M_n - 2s sum_{p<n} (2 alpha)^{n-p} n!/p! M_p with symbolic s.
///
/// Identically zero when M satisfies its inhomogeneous Hermite equation.
inline ZPoly ode_residual(unsigned n, Alpha alpha) {
  const ZPoly lhs = hermite_operator(m_poly({n, alpha, SValue::symbolic()}), n);
  ZPoly rhs;
  for (unsigned p = 0; p < n; ++p) {
    Rational c = pow(Rational(2 * alpha.value()), static_cast<int>(n - p)) * falling_factorial(n, n - p);
    rhs += m_poly({p, alpha, SValue::symbolic()}) * c;
  }
  return lhs - rhs * (s_var() * Rational(2));
}

/// Diagonal operator D + 2j, where D = d^2/dz^2 - 2z d/dz.
struct DiagShift {
  int shift = 0;
  friend bool operator==(const DiagShift&, const DiagShift&) = default;
};

using OdeEntry = std::variant<DiagShift, SPoly>;

/// Lower-triangular operator system annihilating (M_0, ..., M_n).
struct OdeSystem {
  unsigned size = 0;
  Matrix<OdeEntry> matrix;
};

inline OdeSystem ode_system_matrix(unsigned n, Alpha alpha) {
  OdeSystem sys{n + 1, Matrix<OdeEntry>(n + 1, n + 1)};
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned i = 0; i <= n; ++i) {
      if (i == j) {
        sys.matrix(j, i) = DiagShift{static_cast<int>(2 * j)};
      } else if (i < j) {
        Rational c = Rational(-2) * pow(Rational(2 * alpha.value()), static_cast<int>(j - i)) *
                     falling_factorial(j, j - i);
        sys.matrix(j, i) = s_var() * c;
      } else {
        sys.matrix(j, i) = SPoly{};
      }
    }
  }
  return sys;
}

/// Row-wise action of the system on a vector of polynomials.
inline std::vector<ZPoly> apply_ode_system(const OdeSystem& sys, std::span<const ZPoly> vec) {
  if (vec.size() != sys.size) throw std::invalid_argument("apply_ode_system: vector length mismatch");
  std::vector<ZPoly> out(sys.size);
  for (unsigned j = 0; j < sys.size; ++j) {
    for (unsigned i = 0; i < sys.size; ++i) {
      const OdeEntry& e = sys.matrix(j, i);
      if (const auto* diag = std::get_if<DiagShift>(&e)) {
        const ZPoly dv = derivative(vec[i]);
        out[j] += derivative(dv) - z_var() * dv * Rational(2) + vec[i] * Rational(diag->shift);
      } else {
        const SPoly& c = std::get<SPoly>(e);
        if (!c.is_zero()) out[j] += vec[i] * c;
      }
    }
  }
  return out;
}

}  // namespace dhermite
