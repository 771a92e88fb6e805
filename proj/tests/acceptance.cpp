// One PASS/FAIL line per acceptance criterion; exit 1 if any fails.
#include "dhermite/dhermite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace dhermite;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;  // keep the first failure
    pass = false;
  }
};

ZPoly sym_m(unsigned n, Alpha a) { return m_poly({n, a, SValue::symbolic()}); }
std::string at(unsigned n, int s, Alpha a) {
  return "n=" + std::to_string(n) + " s=" + std::to_string(s) + " alpha=" + a.to_string();
}

Outcome published_m_family() {
  Outcome o;
  std::vector<std::string> bad;
  for (Alpha a : kBothAlphas) {
    for (unsigned n = 0; n <= 3; ++n) {
      const EdgeCheck e = compare_edge("M", detail::published_m(n, a), sym_m(n, a));
      if (e.pass) continue;
      bad.push_back("n=" + std::to_string(n) + " alpha=" + a.to_string() + " z^" +
                    std::to_string(e.first_mismatch->z_power) + ": published " +
                    render(e.first_mismatch->expected) + ", computed " + render(e.first_mismatch->got));
    }
  }
  for (const auto& b : bad) o.require(false, b);
  if (bad.size() > 1) o.detail += " (+" + std::to_string(bad.size() - 1) + " more)";
  return o;
}

Outcome route_equivalence() {
  Outcome o;
  for (Alpha a : kBothAlphas)
    for (unsigned n = 0; n <= 12; ++n) {
      const DeformParams p{n, a, SValue::symbolic()};
      const ZPoly base = exp_deform(hermite(n), s_var(), a);
      o.require(base == m_poly(p), "s-expansion " + at(n, -1, a));
      o.require(base == m_from_genfunc(p), "generating function " + at(n, -1, a));
      o.require(base == m_organized_by_zero_values(n, a), "zero values " + at(n, -1, a));
    }
  return o;
}

Outcome inner_closed_forms() {
  Outcome o;
  for (Alpha a : kBothAlphas) {
    for (int s = 0; s <= 5; ++s) {
      const Rational sr(s);
      for (unsigned n = 2; n <= 8; ++n)
        o.require(inner_I_direct(n, 1, s, a) ==
                      -pow(Rational(2 * a.value()), static_cast<int>(n + 1)) * factorial(n) * sr,
                  "I_n1 " + at(n, s, a));
      o.require(inner_I_direct(2, 2, s, a) == Rational(16) * (Rational(2) * sr * sr - Rational(8) * sr + Rational(1, 2)),
                "I_22 " + at(2, s, a));
      o.require(inner_I_direct(3, 2, s, a) == Rational(384) * sr * (sr - Rational(5, 2)) * a.rational(),
                "I_32 " + at(3, s, a));
    }
    o.require(inner_I_direct(2, 1, 1, a) == Rational(-16 * a.value()), "spot I^1_21");
    o.require(inner_I_direct(2, 2, 1, a) == Rational(-88), "spot I^1_22");
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (Alpha a : kBothAlphas)
    for (int s = 0; s <= 5; ++s) {
      const InnerTable d = inner_table_direct(8, s, a), r = inner_table_recursive(8, s, a);
      for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; m <= 8; ++m)
          o.require(d(n, m) == r(n, m), "entry (" + std::to_string(n) + "," + std::to_string(m) + ") " + at(n, s, a));
    }
  return o;
}

Outcome measure_properties() {
  Outcome o;
  for (Alpha a : kBothAlphas) {
    for (int s = 0; s <= 10; ++s) o.require(total_charge(s, a) == Rational(1), "charge " + at(0, s, a));
    for (int s = 0; s <= 6; ++s)
      for (unsigned n = 0; n <= 10; ++n)
        o.require(partial_orthogonality(n, s, a) == Rational(n == 0 ? 1 : 0), "partial orthogonality " + at(n, s, a));
  }
  return o;
}

Outcome moment_decomposition() {
  Outcome o;
  const SPoly s = s_var();
  for (Alpha a : kBothAlphas) {
    const Rational al = a.rational();
    o.require(moment_decompose_symbolic(1, a).coeffs ==
                  std::map<int, SPoly>{{-1, s * -al}, {0, SPoly(al / 2)}, {1, SPoly(-al / 2)}},
              "z table alpha=" + a.to_string());
    o.require(moment_decompose_symbolic(2, a).coeffs == std::map<int, SPoly>{{-2, s * (s - SPoly(Rational(1)))},
                                                                             {-1, -s},
                                                                             {0, s + SPoly(Rational(3, 4))},
                                                                             {1, SPoly(Rational(-1, 2))},
                                                                             {2, SPoly(Rational(1, 4))}},
              "z^2 table alpha=" + a.to_string());
    for (int lvl = 0; lvl <= 6; ++lvl)
      for (unsigned n = 0; n <= 4; ++n) {
        ZPoly rhs;
        for (const auto& [p, c] : moment_decompose(n, lvl, a).coeffs) rhs += measure_poly(p, a).poly * SPoly(c);
        ZPoly lhs = measure_poly(lvl, a).poly;
        for (unsigned k = 0; k < n; ++k) lhs = lhs * z_var();
        o.require(lhs == rhs, "expansion " + at(n, lvl, a));
      }
  }
  return o;
}

Outcome ode() {
  Outcome o;
  for (Alpha a : kBothAlphas) {
    for (unsigned n = 0; n <= 10; ++n) o.require(ode_residual(n, a).is_zero(), "residual " + at(n, -1, a));
    for (unsigned n = 0; n <= 6; ++n) {
      std::vector<ZPoly> ms;
      for (unsigned k = 0; k <= n; ++k) ms.push_back(sym_m(k, a));
      for (const auto& row : apply_ode_system(ode_system_matrix(n, a), ms))
        o.require(row.is_zero(), "triangular system " + at(n, -1, a));
    }
  }
  return o;
}

// Singular instances are listed in the detail; they are not counted as passes.
Outcome orthogonal_family(std::vector<std::string>& singular) {
  Outcome o;
  for (Alpha a : kBothAlphas)
    for (int s = 0; s <= 4; ++s) {
      const GramData g = gram_matrix(6, s, a);
      const ZPoly weight = measure_poly(s, a).poly;
      std::vector<std::optional<ZPoly>> cs(7);
      cs[0] = z_const(Rational(1));
      for (unsigned n = 1; n <= 6; ++n) {
        if (!g.nonsingular(n - 1)) {
          singular.push_back(at(n, s, a));
          continue;
        }
        cs[n] = c_poly(n, s, a);
        if (n <= 4) o.require(w_by_determinants(g, n).w == c_coeffs(g, n).w, "w ratios " + at(n, s, a));
        if (s == 0) o.require(*cs[n] == hermite(n) && w_poly(n, s, a) == hermite(n), "s=0 degeneration " + at(n, s, a));
      }
      for (unsigned n = 0; n <= 6; ++n)
        for (unsigned m = n + 1; m <= 6; ++m) {
          if (!cs[n] || !cs[m]) continue;
          o.require(constant_value(gaussian_inner(*cs[n] * *cs[m], weight)).is_zero(),
                    "orthogonality (" + std::to_string(n) + "," + std::to_string(m) + ") " + at(n, s, a));
        }
    }
  return o;
}

Outcome commuting_square(std::vector<std::string>& singular) {
  Outcome o;
  for (Alpha a : kBothAlphas)
    for (int s = 0; s <= 4; ++s)
      for (unsigned n = 0; n <= 6; ++n) {
        try {
          const SquareReport r = verify_square(n, s, a);
          for (const auto& e : r.edges) o.require(e.pass, e.edge + " " + at(n, s, a));
        } catch (const singular_gram_error&) {
          singular.push_back(at(n, s, a));
        }
      }
  return o;
}

std::string singular_note(const std::vector<std::string>& pts) {
  if (pts.empty()) return "singular points: none";
  std::string out = "singular points (" + std::to_string(pts.size()) + "):";
  for (const auto& p : pts) out += " [" + p + "]";
  return out;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> singular_c, singular_sq;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    std::function<std::string()> note;
  };
  const std::vector<Criterion> criteria{
      {"1 published M_0..M_3 verbatim, both alpha", published_m_family, nullptr},
      {"2 route equivalence n<=12, both alpha", route_equivalence, nullptr},
      {"3 published inner-product closed forms, s<=5", inner_closed_forms, nullptr},
      {"4 recursive = direct inner products n,m<=8, s<=5", oracle_equivalence, nullptr},
      {"5 total charge s<=10, partial orthogonality n<=10, s<=6", measure_properties, nullptr},
      {"6 moment decomposition tables and expansion n<=4, s<=6", moment_decomposition, nullptr},
      {"7 ODE residual n<=10, triangular system n<=6", ode, nullptr},
      {"8 orthogonal family n,m<=6, s<=4", [&] { return orthogonal_family(singular_c); },
       [&] { return singular_note(singular_c); }},
      {"9 commuting square n<=6, s<=4, both alpha", [&] { return commuting_square(singular_sq); },
       [&] { return singular_note(singular_sq); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::string line = std::string(o.pass ? "PASS" : "FAIL") + "  criterion " + c.name;
    if (!o.pass) line += "  -- " + o.detail;
    if (c.note) line += "  (" + c.note() + ")";
    std::puts(line.c_str());
    failed += o.pass ? 0 : 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
