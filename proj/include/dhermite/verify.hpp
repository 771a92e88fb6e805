#pragma once

#include "dhermite/deformation.hpp"
#include "dhermite/io.hpp"
#include "dhermite/measure.hpp"
#include "dhermite/ode.hpp"
#include "dhermite/orthogonal.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace dhermite {

struct VerifyOptions {
  unsigned n_max = 8;
  unsigned s_max = 4;
  std::vector<Alpha> alphas{Alpha::plus(), Alpha::minus()};
  bool paper_table = false;
  unsigned threads = 1;
};

/// One identity checked at one grid point; -1 marks an unused coordinate.
struct CheckResult {
  std::string suite;
  int n = -1;
  int m = -1;
  int s = -1;
  int alpha = 0;
  bool pass = false;
  bool singular = false;  // point skipped because C_n is undefined there
  std::string detail;

  auto key() const { return std::tie(suite, n, m, s, alpha); }
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // sorted by (suite, n, m, s, alpha)
  std::vector<std::string> suites;  // in first-seen order of the sorted list

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) {
      return !c.pass && !c.singular;
    }));
  }
  std::size_t singular_points() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.singular; }));
  }
  int exit_code() const { return failures() == 0 ? 0 : 1; }

  /// Per-suite summary, every failure and singular point, then totals.
  std::string to_text() const {
    std::ostringstream os;
    for (const auto& suite : suites) {
      std::size_t total = 0, bad = 0;
      for (const auto& c : checks) {
        if (c.suite != suite || c.singular) continue;
        ++total;
        bad += c.pass ? 0 : 1;
      }
      os << suite << ": " << (bad == 0 ? "PASS" : "FAIL") << " (" << total - bad << "/" << total << ")\n";
    }
    for (const auto& c : checks) {
      if (c.pass && !c.singular) continue;
      os << (c.singular ? "  SINGULAR " : "  FAILED ") << c.suite << " n=" << c.n << " m=" << c.m
         << " s=" << c.s << " alpha=" << c.alpha;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << '\n';
    }
    os << "checks: " << checks.size() << ", failures: " << failures() << ", singular points: "
       << singular_points() << '\n';
    return os.str();
  }
};

namespace detail {

using CheckTask = std::function<CheckResult()>;

inline CheckResult make_result(std::string suite, int n, int m, int s, Alpha a, bool pass,
                               std::string detail = {}) {
  return {std::move(suite), n, m, s, a.value(), pass, false, std::move(detail)};
}

inline void add_deformation_tasks(std::vector<CheckTask>& tasks, const VerifyOptions& o) {
  for (Alpha a : o.alphas) {
    for (unsigned n = 0; n <= o.n_max; ++n) {
      const int ni = static_cast<int>(n);
      tasks.emplace_back([=] {
        const DeformParams p{n, a, SValue::symbolic()};
        const ZPoly base = m_poly(p);
        const bool ok = base == m_from_genfunc(p) && base == exp_deform(hermite(n), s_var(), a) &&
                        base == m_organized_by_zero_values(n, a);
        return make_result("route-equivalence", ni, -1, -1, a, ok);
      });
      tasks.emplace_back([=] {
        const ZPoly mn = m_poly({n, a, SValue::symbolic()});
        return make_result("inversion", ni, -1, -1, a, exp_deform(mn, -s_var(), a) == hermite(n));
      });
      tasks.emplace_back([=] {
        const ZPoly mn = m_poly({n, a, SValue::symbolic()});
        bool ok = mn.degree() == static_cast<int>(n) && mn.leading() == SPoly(pow(Rational(2), ni));
        if (n >= 1) {
          ok = ok && mn.coeff(n - 1) == s_var() * (pow(Rational(2), ni) * Rational(ni * a.value()));
          ok = ok && derivative(mn) == m_poly({n - 1, a, SValue::symbolic()}) * Rational(2 * ni);
        }
        ok = ok && substitute_s(mn, Rational(0)) == hermite(n);
        return make_result("leading-derivative-degeneration", ni, -1, -1, a, ok);
      });
      tasks.emplace_back([=] {
        std::vector<ZPoly> lower;
        for (unsigned k = 0; k <= n; ++k) lower.push_back(m_poly({k, a, SValue::symbolic()}));
        const ZPoly up = m_next_in_s(lower, n, a);
        bool ok = up == substitute_s(lower[n], s_var() + SPoly(Rational(1)));
        const ZPoly prev = n > 0 ? lower[n - 1] : ZPoly{};
        ok = ok && m_next_in_n(lower[n], prev, lower, n, s_var(), a) == m_poly({n + 1, a, SValue::symbolic()});
        return make_result("s-and-n-recursions", ni, -1, -1, a, ok);
      });
      if (n <= 10) {
        tasks.emplace_back([=] { return make_result("ode-residual", ni, -1, -1, a, ode_residual(n, a).is_zero()); });
        tasks.emplace_back([=] {
          std::vector<ZPoly> ms;
          for (unsigned k = 0; k <= n; ++k) ms.push_back(m_poly({k, a, SValue::symbolic()}));
          const auto rows = apply_ode_system(ode_system_matrix(n, a), ms);
          const bool ok = std::all_of(rows.begin(), rows.end(), [](const ZPoly& r) { return r.is_zero(); });
          return make_result("ode-system", ni, -1, -1, a, ok);
        });
      }
    }
    const unsigned semigroup_n = std::min(o.n_max, 8u);
    const unsigned semigroup_s = std::min(o.s_max, 4u);
    for (unsigned n = 0; n <= semigroup_n; ++n) {
      for (unsigned s1 = 0; s1 <= semigroup_s; ++s1) {
        tasks.emplace_back([=] {
          const ZPoly h = hermite(n);
          bool ok = true;
          for (unsigned s2 = 0; s2 <= semigroup_s; ++s2) {
            const ZPoly lhs = exp_deform(exp_deform(h, SPoly(Rational(s1)), a), SPoly(Rational(s2)), a);
            ok = ok && lhs == exp_deform(h, SPoly(Rational(s1 + s2)), a);
          }
          return make_result("semigroup", static_cast<int>(n), -1, static_cast<int>(s1), a, ok);
        });
      }
    }
  }
}

inline void add_measure_tasks(std::vector<CheckTask>& tasks, const VerifyOptions& o) {
  for (Alpha a : o.alphas) {
    for (unsigned s = 0; s <= o.s_max; ++s) {
      const int si = static_cast<int>(s);
      tasks.emplace_back([=] { return make_result("total-charge", -1, -1, si, a, total_charge(si, a) == Rational(1)); });
      tasks.emplace_back([=] {
        bool ok = true;
        for (unsigned n = 0; n <= o.n_max; ++n)
          ok = ok && partial_orthogonality(n, si, a) == Rational(n == 0 ? 1 : 0);
        return make_result("partial-orthogonality", static_cast<int>(o.n_max), -1, si, a, ok);
      });
      tasks.emplace_back([=] {
        const InnerTable direct = inner_table_direct(o.n_max, si, a);
        const InnerTable rec = inner_table_recursive(o.n_max, si, a);
        std::string detail;
        bool ok = true;
        for (unsigned n = 0; n <= o.n_max && ok; ++n) {
          for (unsigned m = 0; m <= o.n_max && ok; ++m) {
            if (!(direct(n, m) == rec(n, m)) || !(direct(n, m) == direct(m, n))) {
              ok = false;
              detail = "entry (" + std::to_string(n) + "," + std::to_string(m) + "): direct " +
                       direct(n, m).to_string() + " vs recursive " + rec(n, m).to_string();
            }
          }
        }
        return make_result("inner-product-oracle", static_cast<int>(o.n_max), static_cast<int>(o.n_max), si, a,
                           ok, detail);
      });
      for (unsigned n = 0; n <= std::min(o.n_max, 4u); ++n) {
        tasks.emplace_back([=] {
          const DecompCoeffs d = moment_decompose(n, si, a);
          const MeasureRep base = measure_poly(si, a);
          ZPoly expanded;
          Rational total;
          for (const auto& [p, c] : d.coeffs) {
            expanded += measure_poly(p, a).poly * SPoly(c);
            total += c;
          }
          ZPoly lhs = base.poly;
          for (unsigned k = 0; k < n; ++k) lhs = lhs * z_var();
          const bool ok = expanded == lhs && total == constant_value(gaussian_inner(lhs, z_const(Rational(1))));
          return make_result("moment-decomposition", static_cast<int>(n), -1, si, a, ok);
        });
      }
    }
  }
}

inline std::vector<CheckResult> orthogonal_checks(unsigned n_top, unsigned s, Alpha a) {
  std::vector<CheckResult> out;
  const int si = static_cast<int>(s);
  if (n_top == 0) return out;
  const GramData g = gram_matrix(n_top, si, a);
  const std::vector<ZPoly> ms = m_family(n_top, s, a);
  const ZPoly weight = measure_poly(si, a).poly;
  std::vector<std::optional<ZPoly>> cs(n_top + 1);
  for (unsigned n = 1; n <= n_top; ++n) {
    const int ni = static_cast<int>(n);
    if (!g.nonsingular(n - 1)) {
      CheckResult r = make_result("orthogonal-family", ni, -1, si, a, false,
                                  "Delta_" + std::to_string(n - 1) + " = 0, C_n undefined");
      r.singular = true;
      out.push_back(std::move(r));
      continue;
    }
    const WCoeffs w = c_coeffs(g, n);
    cs[n] = combine(w, ms);
    bool ok = g.norms[n].has_value() && !g.norms[n]->is_zero();
    ok = ok && constant_value(gaussian_inner(*cs[n], weight)).is_zero();
    if (n <= 4) {
      const WCoeffs wd = w_by_determinants(g, n);
      ok = ok && wd.w == w.w;
    }
    if (s == 0) {
      ok = ok && *cs[n] == hermite(n) && w_poly(n, si, a) == hermite(n);
      for (std::size_t i = 1; i < w.w.size(); ++i) ok = ok && w.w[i].is_zero();
    }
    out.push_back(make_result("orthogonal-family", ni, -1, si, a, ok));
    const SquareReport sq = verify_square(n, si, a);
    std::string detail;
    for (const auto& e : sq.edges)
      if (!e.pass) detail += e.edge + " ";
    out.push_back(make_result("commuting-square", ni, -1, si, a, sq.all_pass(), detail));
  }
  for (unsigned n = 1; n <= n_top; ++n) {
    for (unsigned m = n + 1; m <= n_top; ++m) {
      if (!cs[n] || !cs[m]) continue;
      const bool ok = constant_value(gaussian_inner(*cs[n] * *cs[m], weight)).is_zero();
      out.push_back(make_result("c-orthogonality", static_cast<int>(n), static_cast<int>(m), si, a, ok));
    }
  }
  return out;
}

/// The four explicit M polynomials exactly as published, symbolic s.
inline ZPoly published_m(unsigned n, Alpha a) {
  const SPoly s = s_var();
  const SPoly one(Rational(1));
  const Rational al = a.rational();
  const ZPoly z = z_var();
  switch (n) {
    case 0:
      return z_const(Rational(1));
    case 1:
      return (z + ZPoly(s * al)) * Rational(2);
    case 2:
      return (z * z + z * ZPoly(s * (al * 2)) + ZPoly(s * (s + one) - SPoly(Rational(1, 2)))) * Rational(4);
    case 3: {
      const SPoly rise3 = s * (s + one) * (s + SPoly(Rational(2)));
      return (z * z * z + z * z * ZPoly(s * (al * 3)) + z * ZPoly(s * (s + one) * Rational(3) - SPoly(Rational(3, 2))) +
              ZPoly((s * Rational(6) + rise3) * al)) *
             Rational(8);
    }
    default:
      throw std::out_of_range("published_m: only n = 0..3 are listed");
  }
}

inline void add_paper_table_tasks(std::vector<CheckTask>& tasks, const VerifyOptions& o) {
  const Alpha plus = Alpha::plus();
  for (Alpha a : o.alphas) {
    for (unsigned n = 0; n <= 3; ++n) {
      tasks.emplace_back([=] {
        const EdgeCheck e = compare_edge("M", published_m(n, a), m_poly({n, a, SValue::symbolic()}));
        std::string detail;
        if (e.first_mismatch) {
          detail = "z^" + std::to_string(e.first_mismatch->z_power) + " coefficient: published " +
                   render(e.first_mismatch->expected) + ", computed " +
                   render(e.first_mismatch->got);
        }
        return make_result("paper-table: M list closed forms", static_cast<int>(n), -1, -1, a, e.pass, detail);
      });
    }
  }
  tasks.emplace_back([=] {
    bool ok = true;
    for (Alpha a : o.alphas)
      for (int s = 0; s <= 5; ++s)
        for (unsigned n = 2; n <= 8; ++n)
          ok = ok && inner_I_direct(n, 1, s, a) ==
                         -pow(Rational(2 * a.value()), static_cast<int>(n + 1)) * factorial(n) * Rational(s);
    return make_result("paper-table: I_n1 closed form", -1, -1, -1, plus, ok);
  });
  tasks.emplace_back([=] {
    bool ok = true;
    for (Alpha a : o.alphas) {
      for (int s = 0; s <= 5; ++s) {
        const Rational sr(s);
        ok = ok && inner_I_direct(2, 2, s, a) == Rational(16) * (Rational(2) * sr * sr - Rational(8) * sr + Rational(1, 2));
        ok = ok && inner_I_direct(3, 2, s, a) == Rational(384) * sr * (sr - Rational(5, 2)) * a.rational();
      }
    }
    return make_result("paper-table: I_22 and I_32 closed forms", -1, -1, -1, plus, ok);
  });
  tasks.emplace_back([=] {
    bool ok = true;
    const SPoly s = s_var();
    for (Alpha a : o.alphas) {
      const SymbolicDecomp d = moment_decompose_symbolic(1, a);
      const Rational al = a.rational();
      ok = ok && d.coeffs == std::map<int, SPoly>{{-1, s * -al}, {0, SPoly(al / 2)}, {1, SPoly(-al / 2)}};
    }
    return make_result("paper-table: z decomposition", -1, -1, -1, plus, ok);
  });
  tasks.emplace_back([=] {
    bool ok = true;
    const SPoly s = s_var();
    const SPoly one(Rational(1));
    for (Alpha a : o.alphas) {
      const SymbolicDecomp d = moment_decompose_symbolic(2, a);
      ok = ok && d.coeffs == std::map<int, SPoly>{{-2, s * (s - one)},
                                                  {-1, -s},
                                                  {0, s + SPoly(Rational(3, 4))},
                                                  {1, SPoly(Rational(-1, 2))},
                                                  {2, SPoly(Rational(1, 4))}};
    }
    return make_result("paper-table: z^2 decomposition", -1, -1, -1, plus, ok);
  });
}

}  // namespace detail

/// Runs every invariant suite on the grid. Tasks may run on several threads;
/// the report is sorted so the output does not depend on scheduling.
inline VerifyReport run_verify(const VerifyOptions& o) {
  std::vector<detail::CheckTask> tasks;
  detail::add_deformation_tasks(tasks, o);
  detail::add_measure_tasks(tasks, o);
  const unsigned ortho_n = std::min(o.n_max, 6u);
  std::vector<std::function<std::vector<CheckResult>()>> batch_tasks;
  for (Alpha a : o.alphas)
    for (unsigned s = 0; s <= o.s_max; ++s) batch_tasks.emplace_back([=] { return detail::orthogonal_checks(ortho_n, s, a); });
  if (o.paper_table) detail::add_paper_table_tasks(tasks, o);

  VerifyReport report;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  const std::size_t total = tasks.size() + batch_tasks.size();
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      std::vector<CheckResult> local;
      try {
        if (i < tasks.size()) {
          local.push_back(tasks[i]());
        } else {
          local = batch_tasks[i - tasks.size()]();
        }
      } catch (const std::exception& e) {
        local.push_back({"uncaught-exception", -1, -1, -1, 0, false, false, e.what()});
      }
      std::lock_guard lock(mu);
      report.checks.insert(report.checks.end(), local.begin(), local.end());
    }
  };
  const unsigned nthreads = std::max(1u, o.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& x, const CheckResult& y) { return x.key() < y.key(); });
  for (const auto& c : report.checks)
    if (report.suites.empty() || report.suites.back() != c.suite) report.suites.push_back(c.suite);
  return report;
}

}  // namespace dhermite
