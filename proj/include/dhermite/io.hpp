#pragma once

#include "dhermite/measure.hpp"
#include "dhermite/ode.hpp"
#include "dhermite/orthogonal.hpp"

#include "json.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhermite {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON: rationals travel as "p/q" strings, never as floats.

inline Json to_json(const Rational& r) { return r.to_fraction_string(); }

inline Json to_json(const SPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.to_fraction_string());
  return Json{{"var", "s"}, {"coeffs", std::move(coeffs)}};
}

inline Json to_json(const ZPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) {
    Json inner = Json::array();
    for (const auto& r : c.coeffs()) inner.push_back(r.to_fraction_string());
    coeffs.push_back(std::move(inner));
  }
  return Json{{"var", "z"}, {"coeffs", std::move(coeffs)}};
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected rational string \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

inline SPoly spoly_from_coeff_array(const Json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expected array of rational strings");
  std::vector<Rational> cs;
  for (const auto& c : arr) cs.push_back(rational_from_json(c));
  return SPoly(std::move(cs));
}

inline SPoly spoly_from_json(const Json& j) {
  if (j.value("var", "") != "s") throw std::invalid_argument("SPoly JSON must have var \"s\"");
  return spoly_from_coeff_array(j.at("coeffs"));
}

inline ZPoly zpoly_from_json(const Json& j) {
  if (j.value("var", "") != "z") throw std::invalid_argument("ZPoly JSON must have var \"z\"");
  std::vector<SPoly> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(spoly_from_coeff_array(c));
  return ZPoly(std::move(cs));
}

// ---------------------------------------------------------------------------
// Plain text and LaTeX rendering, descending powers.

enum class TextStyle { plain, latex };

namespace detail {

inline std::string power_part(char var, std::size_t k, TextStyle style) {
  if (k == 0) return "";
  std::string out(1, var);
  if (k > 1) out += style == TextStyle::latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
  return out;
}

/// Magnitude of a coefficient; `bare` means nothing follows it.
inline std::string magnitude(const Rational& r, bool bare, TextStyle style) {
  const Rational a = r.sign() < 0 ? -r : r;
  if (a.is_integer()) return (!bare && a == Rational(1)) ? "" : a.to_string();
  if (style == TextStyle::latex) return "\\frac{" + a.numerator().str() + "}{" + a.denominator().str() + "}";
  return bare ? a.to_string() : "(" + a.to_string() + ")";
}

/// Juxtaposes factors: concatenated in plain text, space separated in LaTeX.
inline std::string glue(std::initializer_list<std::string> parts, TextStyle style) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty() && style == TextStyle::latex) out += ' ';
    out += p;
  }
  return out;
}

struct Term {
  bool negative = false;
  std::string body;
};

inline std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      out += terms[i].negative ? "-" + terms[i].body : terms[i].body;
    } else {
      out += terms[i].negative ? " - " : " + ";
      out += terms[i].body;
    }
  }
  return out;
}

inline std::vector<Term> spoly_terms(const SPoly& p, const std::string& trailing, TextStyle style) {
  std::vector<Term> terms;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    const std::string vars = glue({power_part('s', k, style), trailing}, style);
    terms.push_back({p[k].sign() < 0, glue({magnitude(p[k], vars.empty(), style), vars}, style)});
  }
  return terms;
}

inline std::size_t nonzero_count(const SPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs()) n += c.is_zero() ? 0 : 1;
  return n;
}

/// Terms for c(s) [alpha] z^p. A multi-term c is parenthesized unless it is
/// the bare constant term, in which case it is expanded in place.
inline void append_z_term(std::vector<Term>& terms, const SPoly& c, std::size_t p, bool with_alpha,
                          TextStyle style) {
  const std::string alpha = with_alpha ? "\\alpha" : "";
  const std::string zpart = power_part('z', p, style);
  if (nonzero_count(c) == 1 || (p == 0 && !with_alpha)) {
    for (auto& t : spoly_terms(c, glue({alpha, zpart}, style), style)) terms.push_back(std::move(t));
    return;
  }
  const bool negative = c.leading().sign() < 0;
  const SPoly inner = negative ? -c : c;
  const std::string open = style == TextStyle::latex ? "\\left(" : "(";
  const std::string close = style == TextStyle::latex ? "\\right)" : ")";
  const std::string group = open + join_terms(spoly_terms(inner, "", style)) + close;
  terms.push_back({negative, glue({alpha, group, zpart}, style)});
}

}  // namespace detail

inline std::string render(const SPoly& p, TextStyle style = TextStyle::plain) {
  return detail::join_terms(detail::spoly_terms(p, "", style));
}

inline std::string render(const ZPoly& p, TextStyle style = TextStyle::plain) {
  std::vector<detail::Term> terms;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    detail::append_z_term(terms, p[k], k, false, style);
  }
  return detail::join_terms(terms);
}

/// LaTeX with alpha kept as a symbol, built from the alpha = +1 and alpha = -1
/// instances. Each z-coefficient must either agree across the two signs or
/// flip sign (then it carries one factor alpha); nullopt when neither holds.
inline std::optional<std::string> render_latex_alpha(const ZPoly& at_plus, const ZPoly& at_minus) {
  std::vector<detail::Term> terms;
  const std::size_t len = std::max(at_plus.size(), at_minus.size());
  for (std::size_t k = len; k-- > 0;) {
    const SPoly cp = at_plus.coeff(k);
    const SPoly cm = at_minus.coeff(k);
    if (cp.is_zero() && cm.is_zero()) continue;
    if (cp == cm) {
      detail::append_z_term(terms, cp, k, false, TextStyle::latex);
    } else if (cp == -cm) {
      detail::append_z_term(terms, cp, k, true, TextStyle::latex);
    } else {
      return std::nullopt;
    }
  }
  return detail::join_terms(terms);
}

// ---------------------------------------------------------------------------
// Tables and reports.

inline std::string inner_table_csv(const InnerTable& t) {
  std::ostringstream os;
  os << "n\\m";
  for (unsigned m = 0; m <= t.N; ++m) os << ',' << m;
  os << '\n';
  for (unsigned n = 0; n <= t.N; ++n) {
    os << n;
    for (unsigned m = 0; m <= t.N; ++m) os << ',' << t(n, m).to_fraction_string();
    os << '\n';
  }
  return os.str();
}

inline Json to_json(const InnerTable& t) {
  Json rows = Json::array();
  for (unsigned n = 0; n <= t.N; ++n) {
    Json row = Json::array();
    for (unsigned m = 0; m <= t.N; ++m) row.push_back(t(n, m).to_fraction_string());
    rows.push_back(std::move(row));
  }
  return Json{{"s", t.s}, {"alpha", t.alpha.value()}, {"N", t.N}, {"entries", std::move(rows)}};
}

inline InnerTable inner_table_from_json(const Json& j) {
  InnerTable t{j.at("s").get<unsigned>(), Alpha(j.at("alpha").get<int>()), j.at("N").get<unsigned>(), {}};
  t.entries = Matrix<Rational>(t.N + 1, t.N + 1);
  const Json& rows = j.at("entries");
  if (rows.size() != t.N + 1) throw std::invalid_argument("inner table JSON: wrong row count");
  for (unsigned n = 0; n <= t.N; ++n) {
    if (rows[n].size() != t.N + 1) throw std::invalid_argument("inner table JSON: wrong column count");
    for (unsigned m = 0; m <= t.N; ++m) t.entries(n, m) = rational_from_json(rows[n][m]);
  }
  return t;
}

inline Json to_json(const DecompCoeffs& d) {
  Json cs = Json::array();
  for (const auto& [p, c] : d.coeffs) cs.push_back(Json{{"p", p}, {"coeff", c.to_fraction_string()}});
  return Json{{"n", d.n}, {"s", d.s}, {"alpha", d.alpha.value()}, {"coeffs", std::move(cs)}};
}

inline Json to_json(const SymbolicDecomp& d) {
  Json cs = Json::array();
  for (const auto& [off, c] : d.coeffs) cs.push_back(Json{{"offset", off}, {"coeff", to_json(c)}});
  return Json{{"n", d.n}, {"s", "sym"}, {"alpha", d.alpha.value()}, {"coeffs", std::move(cs)}};
}

inline Json to_json(const EdgeCheck& e) {
  Json mismatch = nullptr;
  if (e.first_mismatch) {
    mismatch = Json{{"z_power", e.first_mismatch->z_power},
                    {"expected", to_json(e.first_mismatch->expected)},
                    {"got", to_json(e.first_mismatch->got)}};
  }
  return Json{{"edge", e.edge}, {"pass", e.pass}, {"first_mismatch", std::move(mismatch)}};
}

inline Json to_json(const SquareReport& r) {
  Json edges = Json::array();
  for (const auto& e : r.edges) edges.push_back(to_json(e));
  return Json{{"n", r.n}, {"s", r.s}, {"alpha", r.alpha.value()}, {"edges", std::move(edges)}};
}

inline Json to_json(const OdeSystem& sys) {
  Json rows = Json::array();
  for (unsigned j = 0; j < sys.size; ++j) {
    Json row = Json::array();
    for (unsigned i = 0; i < sys.size; ++i) {
      const OdeEntry& e = sys.matrix(j, i);
      if (const auto* d = std::get_if<DiagShift>(&e)) {
        row.push_back(Json{{"diag_shift", d->shift}});
      } else {
        row.push_back(Json{{"coeff", to_json(std::get<SPoly>(e))}});
      }
    }
    rows.push_back(std::move(row));
  }
  return Json{{"size", sys.size}, {"matrix", std::move(rows)}};
}

}  // namespace dhermite
