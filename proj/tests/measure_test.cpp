#include "dhermite/measure.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

#include <map>

using namespace dhermite;

namespace {

ZPoly zq(std::initializer_list<Rational> cs) {
  std::vector<SPoly> v;
  for (const auto& c : cs) v.emplace_back(c);
  return ZPoly(std::move(v));
}

// Oracle written from scratch: expand both polynomials at numeric s and pair
// coefficients with the moments (2k-1)!!/2^k.
Rational brute_inner(unsigned n, unsigned m, unsigned s, Alpha a) {
  const ZPoly p = m_poly({n, a, SValue::numeric(s)}) * m_poly({m, a, SValue::numeric(s)});
  const ZPoly w = shift(hermite(s), Rational(-a.value(), 2)) * Rational(s % 2 ? -a.value() : 1);
  const ZPoly prod = p * w;
  Rational acc;
  for (std::size_t k = 0; k < prod.size(); k += 2) {
    Rational mom(1);
    for (std::size_t j = 1; j < k; j += 2) mom *= Rational(static_cast<unsigned long>(j), 2);
    acc += constant_value(prod[k]) * mom;
  }
  return acc;
}

}  // namespace

TEST(Measure, Examples) {
  EXPECT_EQ(measure_poly(0, Alpha::plus()).poly, zq({1}));
  EXPECT_EQ(measure_poly(1, Alpha::plus()).poly, zq({1, -2}));
  for (Alpha a : kBothAlphas) EXPECT_EQ(measure_poly(2, a).poly, zq({-1, Rational(-4 * a.value()), 4}));
  EXPECT_THROW(measure_poly(-1, Alpha::plus()), std::domain_error);
  EXPECT_THROW(checked_level(-3), std::domain_error);
}

TEST(Measure, GaussianInner) {
  EXPECT_EQ(gaussian_inner(zq({1}), zq({1})), SPoly(Rational(1)));
  EXPECT_EQ(gaussian_inner(hermite(2), hermite(2)), SPoly(Rational(8)));
  EXPECT_EQ(gaussian_inner(z_var(), z_var()), SPoly(Rational(1, 2)));
  EXPECT_EQ(gaussian_moment(4), Rational(3, 4));
  EXPECT_EQ(gaussian_moment(3), Rational(0));
  EXPECT_THROW(constant_value(s_var()), std::logic_error);
}

TEST(Measure, TotalCharge) {
  EXPECT_EQ(total_charge(0, Alpha::plus()), Rational(1));
  EXPECT_EQ(total_charge(3, Alpha::minus()), Rational(1));
  EXPECT_EQ(total_charge(6, Alpha::plus()), Rational(1));
  for (Alpha a : kBothAlphas)
    for (int s = 0; s <= 10; ++s) EXPECT_EQ(total_charge(s, a), Rational(1));
}

TEST(Measure, PartialOrthogonality) {
  EXPECT_EQ(partial_orthogonality(0, 5, Alpha::plus()), Rational(1));
  EXPECT_EQ(partial_orthogonality(4, 2, Alpha::minus()), Rational(0));
  EXPECT_EQ(partial_orthogonality(1, 0, Alpha::plus()), Rational(0));
  for (Alpha a : kBothAlphas)
    for (int s = 0; s <= 6; ++s)
      for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(partial_orthogonality(n, s, a), Rational(n == 0 ? 1 : 0));
}

TEST(InnerProducts, SpotValues) {
  for (Alpha a : kBothAlphas) {
    const int al = a.value();
    EXPECT_EQ(inner_I_direct(2, 2, 0, a), Rational(8));
    EXPECT_EQ(inner_I_direct(2, 1, 1, a), Rational(-16 * al));
    EXPECT_EQ(inner_I_direct(2, 2, 1, a), Rational(-88));
    EXPECT_EQ(inner_I_direct(1, 0, 4, a), Rational(0));
    EXPECT_EQ(inner_I_direct(3, 2, 1, a), Rational(-576 * al));
    EXPECT_EQ(inner_I_direct(2, 2, 2, a), Rational(-120));
  }
}

TEST(InnerProducts, UndeformedDiagonal) {
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned m = 0; m <= 8; ++m)
      EXPECT_EQ(inner_I_direct(n, m, 0, Alpha::plus()), n == m ? pow(Rational(2), static_cast<int>(n)) * factorial(n) : Rational(0));
}

TEST(InnerProducts, ClosedForms) {
  for (Alpha a : kBothAlphas) {
    for (int s = 0; s <= 5; ++s) {
      const Rational sr(s);
      for (unsigned n = 2; n <= 8; ++n)
        EXPECT_EQ(inner_I_direct(n, 1, s, a), -pow(Rational(2 * a.value()), static_cast<int>(n + 1)) * factorial(n) * sr);
      EXPECT_EQ(inner_I_direct(2, 2, s, a), Rational(16) * (Rational(2) * sr * sr - Rational(8) * sr + Rational(1, 2)));
      EXPECT_EQ(inner_I_direct(3, 2, s, a), Rational(384) * sr * (sr - Rational(5, 2)) * a.rational());
    }
  }
}

TEST(InnerProducts, DirectMatchesBruteForceOracle) {
  for (Alpha a : kBothAlphas)
    for (unsigned s = 0; s <= 3; ++s)
      for (unsigned n = 0; n <= 5; ++n)
        for (unsigned m = 0; m <= 5; ++m) EXPECT_EQ(inner_I_direct(n, m, static_cast<int>(s), a), brute_inner(n, m, s, a));
}

TEST(InnerProducts, RecursiveMatchesDirect) {
  for (Alpha a : kBothAlphas) {
    for (int s = 0; s <= 5; ++s) {
      const InnerTable d = inner_table_direct(8, s, a), r = inner_table_recursive(8, s, a);
      for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; m <= 8; ++m) {
          EXPECT_EQ(d(n, m), r(n, m)) << n << "," << m << " s=" << s;
          EXPECT_EQ(d(n, m), d(m, n));
        }
    }
  }
  EXPECT_EQ(inner_I_recursive(3, 2, 1, Alpha::plus()), Rational(-576));
}

TEST(Decomposition, Tables) {
  const SPoly s = s_var();
  for (Alpha a : kBothAlphas) {
    const Rational al = a.rational();
    EXPECT_EQ(moment_decompose_symbolic(0, a).coeffs, (std::map<int, SPoly>{{0, SPoly(Rational(1))}}));
    EXPECT_EQ(moment_decompose_symbolic(1, a).coeffs,
              (std::map<int, SPoly>{{-1, s * -al}, {0, SPoly(al / 2)}, {1, SPoly(-al / 2)}}));
    EXPECT_EQ(moment_decompose_symbolic(2, a).coeffs,
              (std::map<int, SPoly>{{-2, s * (s - SPoly(Rational(1)))},
                                    {-1, -s},
                                    {0, s + SPoly(Rational(3, 4))},
                                    {1, SPoly(Rational(-1, 2))},
                                    {2, SPoly(Rational(1, 4))}}));
  }
}

TEST(Decomposition, ExpandedIdentity) {
  for (Alpha a : kBothAlphas) {
    for (int s = 0; s <= 6; ++s) {
      for (unsigned n = 0; n <= 4; ++n) {
        const DecompCoeffs d = moment_decompose(n, s, a);
        ZPoly rhs;
        for (const auto& [p, c] : d.coeffs) {
          ASSERT_GE(p, 0);
          rhs += measure_poly(p, a).poly * SPoly(c);
        }
        ZPoly lhs = measure_poly(s, a).poly;
        for (unsigned k = 0; k < n; ++k) lhs = lhs * z_var();
        EXPECT_EQ(lhs, rhs) << "n=" << n << " s=" << s;
      }
    }
  }
}

TEST(Decomposition, NumericAgreesWithSymbolic) {
  for (Alpha a : kBothAlphas)
    for (int s = 0; s <= 5; ++s)
      for (unsigned n = 0; n <= 4; ++n) {
        std::map<int, Rational> expected;
        for (const auto& [off, c] : moment_decompose_symbolic(n, a).coeffs) {
          const Rational v = evaluate(c, Rational(s));
          if (!v.is_zero()) expected[s + off] = v;
        }
        EXPECT_EQ(moment_decompose(n, s, a).coeffs, expected);
      }
}
