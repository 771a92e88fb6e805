#pragma once

#include "dhermite/deformation.hpp"
#include "dhermite/matrix.hpp"
#include "dhermite/measure.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhermite {

/// Raised when the Gram determinant Delta_{n-1} vanishes, so C_n is undefined.
class singular_gram_error : public std::runtime_error {
 public:
  singular_gram_error(unsigned n, unsigned s, Alpha alpha)
      : std::runtime_error("singular Gram matrix: Delta_" + std::to_string(n - 1) + " = 0 at n=" +
                           std::to_string(n) + " s=" + std::to_string(s) + " alpha=" + alpha.to_string()),
        n_(n), s_(s), alpha_(alpha) {}

  unsigned n() const { return n_; }
  unsigned s() const { return s_; }
  Alpha alpha() const { return alpha_; }

 private:
  unsigned n_;
  unsigned s_;
  Alpha alpha_;
};

/// Inner products of M_1..M_N under D_s plus the leading determinants.
struct GramData {
  unsigned s = 0;
  Alpha alpha = Alpha::plus();
  unsigned N = 0;
  InnerTable inner;   // full (N+1)^2 table including index 0
  Matrix<Rational> gram;  // gram(i-1, j-1) = I_{ij}, 1 <= i, j <= N
  std::vector<Rational> dets;  // dets[k] = Delta_k, Delta_0 = 1
  std::vector<std::optional<Rational>> norms;  // integral C_n^2 D_s; nullopt where C_n is undefined

  const Rational& I(unsigned i, unsigned j) const { return inner(i, j); }
  bool nonsingular(unsigned k) const { return !dets.at(k).is_zero(); }
};

struct WCoeffs {
  unsigned n = 0;
  std::vector<Rational> w;  // w[0] = 1
};

namespace detail {

inline Rational det_rational(const Matrix<Rational>& m) {
  Matrix<SPoly> lifted(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) lifted(i, j) = SPoly(m(i, j));
  return constant_value(det_fraction_free(std::move(lifted)));
}

inline WCoeffs solve_w(const GramData& g, unsigned n) {
  if (n == 0 || n > g.N) throw std::out_of_range("c_coeffs: n outside Gram data range");
  if (!g.nonsingular(n - 1)) throw singular_gram_error(n, g.s, g.alpha);
  const unsigned k = n - 1;
  // Row j: sum_{i=1}^{n-1} w_i I(n-i, j) = -I(n, j), for j = 1..n-1.
  Matrix<Rational> a(k, k);
  std::vector<Rational> b(k);
  for (unsigned j = 1; j <= k; ++j) {
    for (unsigned i = 1; i <= k; ++i) a(j - 1, i - 1) = g.I(n - i, j);
    b[j - 1] = -g.I(n, j);
  }
  auto x = solve_exact(std::move(a), std::move(b));
  if (!x) throw singular_gram_error(n, g.s, g.alpha);
  WCoeffs out{n, {Rational(1)}};
  out.w.insert(out.w.end(), x->begin(), x->end());
  return out;
}

inline Rational norm_from(const GramData& g, const WCoeffs& w) {
  Rational acc;
  for (unsigned i = 0; i < w.n; ++i)
    for (unsigned k = 0; k < w.n; ++k) acc += w.w[i] * w.w[k] * g.I(w.n - i, w.n - k);
  return acc;
}

}  // namespace detail

inline GramData gram_matrix(unsigned N, int s, Alpha alpha) {
  if (N < 1) throw std::invalid_argument("gram_matrix: N must be at least 1");
  GramData g;
  g.inner = inner_table_direct(N, s, alpha);
  g.s = g.inner.s;
  g.alpha = alpha;
  g.N = N;
  g.gram = Matrix<Rational>(N, N);
  for (unsigned i = 1; i <= N; ++i)
    for (unsigned j = 1; j <= N; ++j) g.gram(i - 1, j - 1) = g.inner(i, j);
  g.dets.push_back(Rational(1));
  for (unsigned k = 1; k <= N; ++k) g.dets.push_back(detail::det_rational(g.gram.leading_block(k)));
  g.norms.push_back(total_charge(s, alpha));
  for (unsigned n = 1; n <= N; ++n) {
    if (g.nonsingular(n - 1)) {
      g.norms.emplace_back(detail::norm_from(g, detail::solve_w(g, n)));
    } else {
      g.norms.emplace_back(std::nullopt);
    }
  }
  return g;
}

/// w^n for C_n = sum_i w_i M_{n-i}, by exact solve of the orthogonality conditions.
inline WCoeffs c_coeffs(const GramData& g, unsigned n) {
  if (n == 1) return {1, {Rational(1)}};
  return detail::solve_w(g, n);
}

inline WCoeffs c_coeffs(unsigned n, int s, Alpha alpha) {
  if (n == 0) throw std::invalid_argument("c_coeffs: n must be at least 1");
  if (n == 1) {
    checked_level(s);
    return {1, {Rational(1)}};
  }
  return detail::solve_w(gram_matrix(n, s, alpha), n);
}

/// w^n_i as ratios of Gram determinants with reversed column order.
///
/// The denominator has rows M_1..M_{n-1} and columns M_{n-1}..M_1; the
/// numerator replaces column i by (M_n M_j)_j and flips the sign. That is
/// Cramer's rule for the same system solve_w handles.
inline WCoeffs w_by_determinants(const GramData& g, unsigned n) {
  if (n == 0 || n > g.N) throw std::out_of_range("w_by_determinants: n outside Gram data range");
  const unsigned k = n - 1;
  Matrix<Rational> rev(k, k);
  for (unsigned j = 1; j <= k; ++j)
    for (unsigned c = 1; c <= k; ++c) rev(j - 1, c - 1) = g.I(j, n - c);
  const Rational denom = detail::det_rational(rev);
  if (denom.is_zero()) throw singular_gram_error(n, g.s, g.alpha);
  WCoeffs out{n, {Rational(1)}};
  for (unsigned i = 1; i <= k; ++i) {
    Matrix<Rational> num = rev;
    for (unsigned j = 1; j <= k; ++j) num(j - 1, i - 1) = g.I(n, j);
    out.w.push_back(-detail::det_rational(num) / denom);
  }
  return out;
}

inline ZPoly combine(const WCoeffs& w, const std::vector<ZPoly>& family) {
  ZPoly acc;
  for (unsigned i = 0; i < w.n; ++i) acc += family.at(w.n - i) * SPoly(w.w[i]);
  return acc;
}

inline std::vector<ZPoly> hermite_family(unsigned n_max) {
  std::vector<ZPoly> out;
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(hermite(n));
  return out;
}

/// Orthogonal family member C_n = sum_{i<n} w_i M_{n-i}; C_0 = 1.
inline ZPoly c_poly(unsigned n, int s, Alpha alpha) {
  if (n == 0) {
    checked_level(s);
    return z_const(Rational(1));
  }
  return combine(c_coeffs(n, s, alpha), m_family(n, checked_level(s), alpha));
}

/// Pre-image W_n = sum_{i<n} w_i H_{n-i}; W_0 = 1.
inline ZPoly w_poly(unsigned n, int s, Alpha alpha) {
  if (n == 0) {
    checked_level(s);
    return z_const(Rational(1));
  }
  return combine(c_coeffs(n, s, alpha), hermite_family(n));
}

struct Mismatch {
  unsigned z_power = 0;
  SPoly expected;
  SPoly got;
};

struct EdgeCheck {
  std::string edge;
  bool pass = false;
  std::optional<Mismatch> first_mismatch;
};

struct SquareReport {
  unsigned n = 0;
  unsigned s = 0;
  Alpha alpha = Alpha::plus();
  std::vector<EdgeCheck> edges;

  bool all_pass() const {
    for (const auto& e : edges)
      if (!e.pass) return false;
    return true;
  }
};

inline EdgeCheck compare_edge(std::string name, const ZPoly& expected, const ZPoly& got) {
  EdgeCheck e{std::move(name), expected == got, std::nullopt};
  if (!e.pass) {
    const std::size_t len = std::max(expected.size(), got.size());
    for (std::size_t p = 0; p < len; ++p) {
      if (!(expected.coeff(p) == got.coeff(p))) {
        e.first_mismatch = Mismatch{static_cast<unsigned>(p), expected.coeff(p), got.coeff(p)};
        break;
      }
    }
  }
  return e;
}

/// Checks H -> M => C -> W => H edge by edge, each against an independent route.
///
/// H->M: operator map vs the s-expansion. M->C: the w-combination of
/// generating-function M's vs c_poly. w->W: the w-combination of H's vs the
/// inverse map of C. M->H: inverse map of M vs H. W->C: forward map of W vs C.
/// Throws singular_gram_error when C_n is undefined.
inline SquareReport verify_square(unsigned n, int s, Alpha alpha) {
  const unsigned level = checked_level(s);
  const SPoly sigma = s_const(Rational(level));
  SquareReport r{n, level, alpha, {}};

  const ZPoly h = hermite(n);
  const ZPoly m = m_poly({n, alpha, SValue::numeric(level)});
  r.edges.push_back(compare_edge("H→M", m, exp_deform(h, sigma, alpha)));

  const WCoeffs w = n == 0 ? WCoeffs{0, {Rational(1)}} : c_coeffs(n, s, alpha);
  const ZPoly c = c_poly(n, s, alpha);
  const ZPoly wp = w_poly(n, s, alpha);

  std::vector<ZPoly> m_gen;
  for (unsigned k = 0; k <= n; ++k) m_gen.push_back(m_from_genfunc({k, alpha, SValue::numeric(level)}));
  const ZPoly c_from_m = n == 0 ? z_const(Rational(1)) : combine(w, m_gen);
  r.edges.push_back(compare_edge("M→C", c, c_from_m));

  const ZPoly w_from_h = n == 0 ? z_const(Rational(1)) : combine(w, hermite_family(n));
  r.edges.push_back(compare_edge("w→W", exp_deform(c, -sigma, alpha), w_from_h));
  r.edges.push_back(compare_edge("M→H", h, exp_deform(m, -sigma, alpha)));
  r.edges.push_back(compare_edge("W→C", c, exp_deform(wp, sigma, alpha)));
  return r;
}

}  // namespace dhermite
