#include "dhermite/io.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

#include <random>

using namespace dhermite;

namespace {

ZPoly sym_m(unsigned n, Alpha a) { return m_poly({n, a, SValue::symbolic()}); }

}  // namespace

TEST(Json, RationalAlwaysFraction) {
  EXPECT_EQ(to_json(Rational(3)), "3/1");
  EXPECT_EQ(to_json(Rational(BigInt(-2), BigInt(4))), "-1/2");
  EXPECT_EQ(rational_from_json(Json("5")), Rational(5));
  EXPECT_THROW(rational_from_json(Json(0.5)), std::invalid_argument);
}

TEST(Json, Schemas) {
  EXPECT_EQ(to_json(SPoly{Rational(1), Rational(1, 2)}).dump(), R"({"var":"s","coeffs":["1/1","1/2"]})");
  EXPECT_EQ(to_json(sym_m(1, Alpha::plus())).dump(), R"({"var":"z","coeffs":[["0/1","2/1"],["2/1"]]})");
  EXPECT_EQ(to_json(ZPoly()).dump(), R"({"var":"z","coeffs":[]})");
  EXPECT_THROW(zpoly_from_json(to_json(s_var())), std::invalid_argument);
  EXPECT_THROW(spoly_from_json(Json{{"var", "s"}, {"coeffs", "1/2"}}), std::invalid_argument);
}

TEST(Json, RoundTrips) {
  for (Alpha a : kBothAlphas)
    for (unsigned n = 0; n <= 8; ++n) {
      const ZPoly p = sym_m(n, a);
      EXPECT_EQ(zpoly_from_json(Json::parse(to_json(p).dump())), p);
    }
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> v(-50, 50);
  for (int i = 0; i < 100; ++i) {
    const SPoly p{Rational(BigInt(v(rng)), BigInt(1 + i % 7)), Rational(v(rng)), Rational(BigInt(v(rng)), BigInt(3))};
    EXPECT_EQ(spoly_from_json(to_json(p)), p);
  }
  const InnerTable t = inner_table_direct(4, 2, Alpha::minus());
  const InnerTable back = inner_table_from_json(Json::parse(to_json(t).dump()));
  EXPECT_EQ(back.entries, t.entries);
  EXPECT_EQ(back.alpha, t.alpha);
  EXPECT_EQ(back.s, 2u);
}

TEST(Json, InnerTableShapeErrors) {
  Json j = to_json(inner_table_direct(2, 1, Alpha::plus()));
  j["entries"].erase(0);
  EXPECT_THROW(inner_table_from_json(j), std::invalid_argument);
}

TEST(Render, Plain) {
  EXPECT_EQ(render(ZPoly()), "0");
  EXPECT_EQ(render(z_const(Rational(1))), "1");
  EXPECT_EQ(render(sym_m(1, Alpha::plus())), "2z + 2s");
  EXPECT_EQ(render(sym_m(1, Alpha::minus())), "2z - 2s");
  EXPECT_EQ(render(c_poly(2, 1, Alpha::plus())), "4z^2 - 8z - 10");
  EXPECT_EQ(render(w_poly(2, 1, Alpha::plus())), "4z^2 - 16z - 2");
  EXPECT_EQ(render(sym_m(2, Alpha::plus())), "4z^2 + 8sz + 4s^2 + 4s - 2");
  EXPECT_EQ(render(sym_m(3, Alpha::plus())), "8z^3 + 24sz^2 + (24s^2 + 24s - 12)z + 8s^3 + 24s^2 + 4s");
  EXPECT_EQ(render(shift(z_var(), Rational(-1, 2))), "z - 1/2");
  EXPECT_EQ(render(z_var() * Rational(1, 2)), "(1/2)z");
  EXPECT_EQ(render(SPoly{Rational(0), Rational(-1)}), "-s");
}

TEST(Render, Latex) {
  EXPECT_EQ(render(sym_m(2, Alpha::plus()), TextStyle::latex), "4 z^{2} + 8 s z + 4 s^{2} + 4 s - 2");
  EXPECT_EQ(render(z_var() * Rational(-3, 4), TextStyle::latex), "-\\frac{3}{4} z");
}

TEST(Render, LatexWithSymbolicAlpha) {
  EXPECT_EQ(render_latex_alpha(sym_m(1, Alpha::plus()), sym_m(1, Alpha::minus())), "2 z + 2 s \\alpha");
  const auto m3 = render_latex_alpha(sym_m(3, Alpha::plus()), sym_m(3, Alpha::minus()));
  ASSERT_TRUE(m3);
  EXPECT_EQ(*m3, "8 z^{3} + 24 s \\alpha z^{2} + \\left(24 s^{2} + 24 s - 12\\right) z + "
                 "\\alpha \\left(8 s^{3} + 24 s^{2} + 4 s\\right)");
  // Coefficients that neither agree nor flip cannot carry a single alpha.
  EXPECT_FALSE(render_latex_alpha(z_const(Rational(1)), z_const(Rational(2))));
}

TEST(Csv, InnerTable) {
  EXPECT_EQ(inner_table_csv(inner_table_direct(2, 0, Alpha::plus())),
            "n\\m,0,1,2\n0,1/1,0/1,0/1\n1,0/1,2/1,0/1\n2,0/1,0/1,8/1\n");
  const std::string at1 = inner_table_csv(inner_table_direct(2, 1, Alpha::plus()));
  EXPECT_NE(at1.find("\n2,0/1,-16/1,-88/1\n"), std::string::npos);
}

TEST(Json, Reports) {
  const Json sq = to_json(verify_square(2, 1, Alpha::plus()));
  EXPECT_EQ(sq["edges"].size(), 5u);
  for (const auto& e : sq["edges"]) {
    EXPECT_TRUE(e["pass"].get<bool>());
    EXPECT_TRUE(e["first_mismatch"].is_null());
  }
  const Json d = to_json(moment_decompose(1, 2, Alpha::plus()));
  EXPECT_EQ(d.dump(), R"({"n":1,"s":2,"alpha":1,"coeffs":[{"p":1,"coeff":"-2/1"},{"p":2,"coeff":"1/2"},{"p":3,"coeff":"-1/2"}]})");
  const Json ode = to_json(ode_system_matrix(1, Alpha::plus()));
  EXPECT_EQ(ode["matrix"][1][0]["coeff"]["coeffs"][1], "-4/1");
  EXPECT_EQ(ode["matrix"][1][1]["diag_shift"], 2);
}
