// dhermite: generate deformed Hermite families, inner-product tables and
// decompositions, and run the exact verification suite.

#include "dhermite/dhermite.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

namespace {

using namespace dhermite;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string family = "M";
  std::optional<unsigned> n;
  std::optional<unsigned> n_max;
  std::string s = "sym";
  std::string alpha = "+1";
  std::string format = "plain";
  std::string out;
  unsigned ceiling = 16;
};

Alpha parse_alpha(const std::string& text) {
  if (text == "+1" || text == "1" || text == "+") return Alpha::plus();
  if (text == "-1" || text == "-") return Alpha::minus();
  throw UsageError("--alpha must be +1 or -1, got '" + text + "'");
}

SValue parse_s(const std::string& text) {
  if (text == "sym") return SValue::symbolic();
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("--s must be a nonnegative integer or 'sym', got '" + text + "'");
  }
  return SValue::numeric(static_cast<unsigned>(std::stoul(text)));
}

unsigned numeric_s(const std::string& text, const std::string& what) {
  SValue s = parse_s(text);
  if (s.is_symbolic()) throw UsageError(what + " requires a numeric --s");
  return s.value();
}

TextStyle style_for(const std::string& format) {
  return format == "latex" ? TextStyle::latex : TextStyle::plain;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "' for this command");
}

/// Inclusive range of indices requested by --n / --n-max.
std::pair<unsigned, unsigned> index_range(const CommonArgs& a) {
  if (a.n && a.n_max) throw UsageError("give either --n or --n-max, not both");
  if (!a.n && !a.n_max) throw UsageError("--n or --n-max is required");
  const unsigned top = a.n ? *a.n : *a.n_max;
  if (top > a.ceiling) {
    throw UsageError("n = " + std::to_string(top) + " exceeds the ceiling " + std::to_string(a.ceiling) +
                     " (raise it with --ceiling)");
  }
  return {a.n ? *a.n : 0, top};
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
  f << text;
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

// ---------------------------------------------------------------------------
// gen

struct FamilyMember {
  unsigned n = 0;
  std::optional<ZPoly> poly;  // nullopt: singular Gram, C_n / W_n undefined
  std::string note;
};

ZPoly family_poly(const std::string& family, unsigned n, const SValue& s, Alpha alpha) {
  if (family == "H") return hermite(n);
  if (family == "M") return m_poly({n, alpha, s});
  if (family == "C") return c_poly(n, static_cast<int>(s.value()), alpha);
  if (family == "W") return w_poly(n, static_cast<int>(s.value()), alpha);
  if (family == "D") return measure_poly(static_cast<int>(s.value()), alpha).poly;
  throw UsageError("unknown --family '" + family + "' (expected H, M, C, W or D)");
}

std::string gen_document(const CommonArgs& a) {
  check_format(a.format, {"plain", "latex", "json", "csv"});
  const std::string& family = a.family;
  if (family != "H" && family != "M" && family != "C" && family != "W" && family != "D") {
    throw UsageError("unknown --family '" + family + "' (expected H, M, C, W or D)");
  }
  const Alpha alpha = parse_alpha(a.alpha);
  const SValue s = parse_s(a.s);
  if ((family == "C" || family == "W" || family == "D") && s.is_symbolic()) {
    throw UsageError("family " + family + " requires a numeric --s (symbolic s is supported for H and M only)");
  }

  unsigned lo = 0, hi = 0;
  if (family == "D") {
    if (a.n || a.n_max) throw UsageError("family D is indexed by --s only");
    lo = hi = s.value();
    if (hi > a.ceiling) throw UsageError("s exceeds the ceiling");
  } else {
    std::tie(lo, hi) = index_range(a);
  }
  const bool single = family == "D" || a.n.has_value();

  auto build = [&](Alpha al) {
    std::vector<FamilyMember> members;
    for (unsigned n = lo; n <= hi; ++n) {
      try {
        members.push_back({n, family_poly(family, n, s, al), {}});
      } catch (const singular_gram_error& e) {
        members.push_back({n, std::nullopt, e.what()});
      }
    }
    return members;
  };
  const std::vector<FamilyMember> members = build(alpha);

  bool any_singular = false;
  for (const auto& m : members) {
    if (!m.poly) {
      any_singular = true;
      std::cerr << "skipping " << family << "_" << m.n << ": " << m.note << '\n';
    }
  }
  if (single && any_singular) throw std::runtime_error(members.front().note);

  std::ostringstream os;
  if (a.format == "json") {
    Json polys = Json::array();
    for (const auto& m : members) {
      if (m.poly) {
        polys.push_back(Json{{"n", m.n}, {"poly", to_json(*m.poly)}});
      } else {
        polys.push_back(Json{{"n", m.n}, {"singular", true}});
      }
    }
    Json doc{{"family", family}, {"s", s.to_string()}, {"alpha", alpha.value()}, {"polys", std::move(polys)}};
    os << doc.dump(2) << '\n';
  } else if (a.format == "csv") {
    os << "n,z_power,s_power,coeff\n";
    for (const auto& m : members) {
      if (!m.poly) continue;
      for (std::size_t p = 0; p < m.poly->size(); ++p)
        for (std::size_t k = 0; k < (*m.poly)[p].size(); ++k)
          if (!(*m.poly)[p][k].is_zero())
            os << m.n << ',' << p << ',' << k << ',' << (*m.poly)[p][k].to_fraction_string() << '\n';
    }
  } else if (a.format == "plain") {
    for (const auto& m : members) {
      if (!m.poly) continue;
      if (single) {
        os << render(*m.poly) << '\n';
      } else {
        os << family << "_" << m.n << " = " << render(*m.poly) << '\n';
      }
    }
  } else {
    std::vector<FamilyMember> other;
    if (family != "H") other = build(-alpha);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& m = members[i];
      if (!m.poly) continue;
      std::string body;
      if (family != "H" && other[i].poly) {
        const ZPoly& at_plus = alpha == Alpha::plus() ? *m.poly : *other[i].poly;
        const ZPoly& at_minus = alpha == Alpha::plus() ? *other[i].poly : *m.poly;
        body = render_latex_alpha(at_plus, at_minus).value_or(render(*m.poly, TextStyle::latex));
      } else {
        body = render(*m.poly, TextStyle::latex);
      }
      const std::string index = family == "D" ? "{" + std::to_string(m.n) + "\\alpha}" : "{" + std::to_string(m.n) + "}";
      os << (family == "D" ? "\\mathcal{D}" : family) << "_" << index << "(z) = " << body << '\n';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// table

std::string table_document(const CommonArgs& a) {
  check_format(a.format, {"plain", "latex", "json", "csv"});
  const unsigned s = numeric_s(a.s, "table");
  const Alpha alpha = parse_alpha(a.alpha);
  const auto [lo, N] = index_range(a);
  (void)lo;
  const InnerTable t = inner_table_direct(N, static_cast<int>(s), alpha);
  std::ostringstream os;
  if (a.format == "csv") {
    os << inner_table_csv(t);
  } else if (a.format == "json") {
    os << to_json(t).dump(2) << '\n';
  } else if (a.format == "latex") {
    os << "\\begin{pmatrix}\n";
    for (unsigned n = 0; n <= N; ++n) {
      for (unsigned m = 0; m <= N; ++m) os << (m ? " & " : "") << render(SPoly(t(n, m)), TextStyle::latex);
      os << (n < N ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n";
  } else {
    for (unsigned n = 0; n <= N; ++n) {
      for (unsigned m = 0; m <= N; ++m) os << (m ? " " : "") << t(n, m).to_string();
      os << '\n';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// decompose

std::string decompose_document(const CommonArgs& a) {
  check_format(a.format, {"plain", "latex", "json"});
  if (!a.n) throw UsageError("decompose requires --n");
  if (*a.n > a.ceiling) throw UsageError("n exceeds the ceiling");
  const Alpha alpha = parse_alpha(a.alpha);
  const SValue s = parse_s(a.s);
  std::ostringstream os;
  const TextStyle style = style_for(a.format);
  auto label = [&](const std::string& index) {
    return style == TextStyle::latex ? "\\mathcal{D}_{" + index + "}" : "D_" + index;
  };
  if (s.is_symbolic()) {
    const SymbolicDecomp d = moment_decompose_symbolic(*a.n, alpha);
    if (a.format == "json") return to_json(d).dump(2) + '\n';
    for (const auto& [off, c] : d.coeffs) {
      std::string idx = off == 0 ? "s" : (off < 0 ? "s" + std::to_string(off) : "s+" + std::to_string(off));
      if (style == TextStyle::latex) idx = "{" + idx + "}";
      os << label(idx) << ": " << render(c, style) << '\n';
    }
  } else {
    const DecompCoeffs d = moment_decompose(*a.n, static_cast<int>(s.value()), alpha);
    if (a.format == "json") return to_json(d).dump(2) + '\n';
    for (const auto& [p, c] : d.coeffs) os << label(std::to_string(p)) << ": " << render(SPoly(c), style) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ode

std::string ode_document(const CommonArgs& a) {
  check_format(a.format, {"plain", "latex", "json"});
  if (!a.n) throw UsageError("ode requires --n");
  if (*a.n > a.ceiling) throw UsageError("n exceeds the ceiling");
  const unsigned n = *a.n;
  const Alpha alpha = parse_alpha(a.alpha);
  const OdeSystem sys = ode_system_matrix(n, alpha);
  std::vector<ZPoly> ms;
  for (unsigned k = 0; k <= n; ++k) ms.push_back(m_poly({k, alpha, SValue::symbolic()}));
  const std::vector<ZPoly> rows = apply_ode_system(sys, ms);
  const ZPoly residual = ode_residual(n, alpha);

  if (a.format == "json") {
    Json res = Json::array();
    for (const auto& r : rows) res.push_back(to_json(r));
    Json doc{{"n", n},
             {"alpha", alpha.value()},
             {"system", to_json(sys)},
             {"system_residuals", std::move(res)},
             {"ode_residual", to_json(residual)}};
    return doc.dump(2) + '\n';
  }
  const TextStyle style = style_for(a.format);
  std::ostringstream os;
  if (style == TextStyle::latex) os << "\\begin{pmatrix}\n";
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned i = 0; i <= n; ++i) {
      const OdeEntry& e = sys.matrix(j, i);
      std::string cell;
      if (const auto* d = std::get_if<DiagShift>(&e)) {
        cell = d->shift == 0 ? "D" : "D+" + std::to_string(d->shift);
      } else {
        cell = render(std::get<SPoly>(e), style);
      }
      os << (i ? (style == TextStyle::latex ? " & " : " | ") : "") << cell;
    }
    os << (style == TextStyle::latex && j < n ? " \\\\\n" : "\n");
  }
  if (style == TextStyle::latex) {
    os << "\\end{pmatrix}\n";
    return os.str();
  }
  for (unsigned j = 0; j <= n; ++j) os << "row " << j << " residual: " << render(rows[j]) << '\n';
  os << "ode residual: " << render(residual) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  unsigned n_max = 8;
  unsigned s_max = 4;
  std::string alpha = "both";
  bool paper_table = false;
  unsigned threads = 0;
  std::string format = "plain";
  std::string out;
  unsigned ceiling = 16;
};

int run_verify_command(const VerifyArgs& v) {
  check_format(v.format, {"plain", "json"});
  if (v.n_max > v.ceiling) throw UsageError("--n-max exceeds the ceiling");
  VerifyOptions o;
  o.n_max = v.n_max;
  o.s_max = v.s_max;
  if (v.alpha != "both") o.alphas = {parse_alpha(v.alpha)};
  o.paper_table = v.paper_table;
  o.threads = v.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : v.threads;
  const VerifyReport r = run_verify(o);
  if (v.format == "json") {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      checks.push_back(Json{{"suite", c.suite}, {"n", c.n}, {"m", c.m}, {"s", c.s}, {"alpha", c.alpha},
                            {"status", c.singular ? "singular" : (c.pass ? "pass" : "fail")},
                            {"detail", c.detail}});
    }
    Json doc{{"checks", std::move(checks)},
             {"failures", r.failures()},
             {"singular_points", r.singular_points()},
             {"exit_code", r.exit_code()}};
    emit(doc.dump(2) + '\n', v.out);
  } else {
    emit(r.to_text(), v.out);
  }
  return r.exit_code();
}

// ---------------------------------------------------------------------------
// export

int run_export(const CommonArgs& base, unsigned n_max) {
  if (base.out.empty()) throw UsageError("export requires --out <directory>");
  if (n_max > base.ceiling) throw UsageError("--n-max exceeds the ceiling");
  const std::string s_text = base.s == "sym" ? "1" : base.s;
  const unsigned s = numeric_s(s_text, "export");
  const std::filesystem::path dir(base.out);
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    emit(text, (dir / name).string());
  };

  CommonArgs a = base;
  a.out.clear();
  a.n_max = n_max;
  a.n.reset();
  a.format = "json";
  for (const char* fam : {"H", "M"}) {
    a.family = fam;
    a.s = "sym";
    write(std::string(fam) + ".json", gen_document(a));
  }
  a.s = std::to_string(s);
  for (const char* fam : {"C", "W"}) {
    a.family = fam;
    write(std::string(fam) + ".json", gen_document(a));
  }
  a.family = "D";
  a.n_max.reset();
  write("D.json", gen_document(a));

  const Alpha alpha = parse_alpha(base.alpha);
  const InnerTable t = inner_table_direct(n_max, static_cast<int>(s), alpha);
  write("inner_table.csv", inner_table_csv(t));
  write("inner_table.json", to_json(t).dump(2) + '\n');

  Json decomps = Json::array();
  for (unsigned n = 0; n <= std::min(n_max, 4u); ++n) decomps.push_back(to_json(moment_decompose(n, static_cast<int>(s), alpha)));
  write("decompose.json", decomps.dump(2) + '\n');

  a.n = n_max;
  a.format = "json";
  write("ode.json", ode_document(a));

  Json squares = Json::array();
  for (unsigned n = 0; n <= std::min(n_max, 6u); ++n) {
    try {
      squares.push_back(to_json(verify_square(n, static_cast<int>(s), alpha)));
    } catch (const singular_gram_error& e) {
      squares.push_back(Json{{"n", n}, {"singular", true}, {"detail", e.what()}});
    }
  }
  write("square.json", squares.dump(2) + '\n');
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool with_family) {
  if (with_family) cmd->add_option("--family", a.family, "Family: H, M, C, W or D");
  cmd->add_option("--n", a.n, "Single index n");
  cmd->add_option("--n-max", a.n_max, "Emit indices 0..n-max");
  cmd->add_option("--s", a.s, "Deformation level: nonnegative integer or 'sym'");
  cmd->add_option("--alpha", a.alpha, "Sign alpha: +1 or -1");
  cmd->add_option("--format", a.format, "Output format: plain, latex, json or csv");
  cmd->add_option("--out", a.out, "Output path (default stdout)");
  cmd->add_option("--ceiling", a.ceiling, "Largest accepted index");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact deformed Hermite polynomial families"};
  app.require_subcommand(1);

  CommonArgs gen_args, table_args, decompose_args, ode_args, export_args;
  VerifyArgs verify_args;
  unsigned export_n_max = 8;
  table_args.s = "0";
  decompose_args.s = "sym";

  auto* gen = app.add_subcommand("gen", "Print polynomials of one family");
  add_common(gen, gen_args, true);
  auto* table = app.add_subcommand("table", "Inner products I_nm against the signed measure");
  add_common(table, table_args, false);
  auto* decompose = app.add_subcommand("decompose", "Coefficients of z^n D_s in the basis D_p");
  add_common(decompose, decompose_args, false);
  auto* ode = app.add_subcommand("ode", "Triangular ODE system for M_0..M_n and its residuals");
  add_common(ode, ode_args, false);

  auto* verify = app.add_subcommand("verify", "Run every identity check on a grid");
  verify->add_option("--n-max", verify_args.n_max, "Largest polynomial index");
  verify->add_option("--s-max", verify_args.s_max, "Largest measure level");
  verify->add_option("--alpha", verify_args.alpha, "+1, -1 or both");
  verify->add_flag("--paper-table", verify_args.paper_table, "Also compare against the published closed forms");
  verify->add_option("--threads", verify_args.threads, "Worker threads (0 = hardware)");
  verify->add_option("--format", verify_args.format, "plain or json");
  verify->add_option("--out", verify_args.out, "Output path (default stdout)");
  verify->add_option("--ceiling", verify_args.ceiling, "Largest accepted n-max");

  auto* exp = app.add_subcommand("export", "Write every artifact into a directory");
  exp->add_option("--out", export_args.out, "Output directory")->required();
  exp->add_option("--n-max", export_n_max, "Largest polynomial index");
  exp->add_option("--s", export_args.s, "Numeric level for C, W, D and tables (default 1)");
  exp->add_option("--alpha", export_args.alpha, "Sign alpha: +1 or -1");
  exp->add_option("--ceiling", export_args.ceiling, "Largest accepted index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      emit(gen_document(gen_args), gen_args.out);
    } else if (*table) {
      emit(table_document(table_args), table_args.out);
    } else if (*decompose) {
      emit(with_newline(decompose_document(decompose_args)), decompose_args.out);
    } else if (*ode) {
      emit(ode_document(ode_args), ode_args.out);
    } else if (*verify) {
      return run_verify_command(verify_args);
    } else if (*exp) {
      return run_export(export_args, export_n_max);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitOk;
}
