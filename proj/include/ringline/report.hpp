#pragma once

// Text, CSV, Markdown and JSON renderings of rings, ideals, lines, profiles and tables.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ringline/catalog.hpp"
#include "ringline/finite_ring.hpp"
#include "ringline/ideals.hpp"
#include "ringline/profile.hpp"
#include "ringline/projective_line.hpp"
#include "ringline/ringspec.hpp"

namespace ringline {

using json = nlohmann::ordered_json;

inline json to_json(const Polynomial& f) { return json{{"coefficients", f.coefficients}, {"text", render(f)}}; }

inline json to_json(const RingExpr& expr) {
  struct Visitor {
    json operator()(const ZnNode& z) const { return json{{"kind", "Z"}, {"n", z.n}}; }
    json operator()(const GFNode& g) const { return json{{"kind", "GF"}, {"p", g.p}, {"k", g.k}}; }
    json operator()(const QuotientNode& q) const {
      return json{{"kind", "quotient"}, {"base", std::visit(*this, q.base)}, {"modulus", to_json(q.modulus)}};
    }
    json operator()(const ProductNode& p) const {
      json factors = json::array();
      for (const auto& f : p.factors) factors.push_back(std::visit(*this, f.node));
      return json{{"kind", "product"}, {"factors", factors}};
    }
  };
  return std::visit(Visitor{}, expr.node);
}

inline json to_json(const LineProfile& p) {
  return json{{"tot", p.tot},     {"tpI", p.tp_one}, {"oneN", p.one_n}, {"cap2N", p.cap2n},
              {"cap3N", p.cap3n}, {"jcb", p.jcb},    {"md", p.md}};
}

inline json profile_json(const LineProfile& p, const std::string& expr) {
  return json{{"typeLabel", p.type_label}, {"profile", to_json(p)}, {"expr", expr}};
}

namespace detail {

inline json label_list(const FiniteRing& r, const std::vector<Element>& es) {
  json out = json::array();
  for (auto e : es) out.push_back(r.label(e));
  return out;
}

inline json label_list(const FiniteRing& r, const Ideal& ideal) {
  json out = json::array();
  ideal.members.for_each([&](std::size_t i) { out.push_back(r.label(r.element(i))); });
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string ideal_text(const FiniteRing& r, const Ideal& ideal) {
  std::vector<std::string> parts;
  ideal.members.for_each([&](std::size_t i) { parts.push_back(r.label(r.element(i))); });
  return "{" + join(parts, ", ") + "}";
}

inline std::string element_text(const FiniteRing& r, const std::vector<Element>& es) {
  std::vector<std::string> parts;
  for (auto e : es) parts.push_back(r.label(e));
  return "{" + join(parts, ", ") + "}";
}

}  // namespace detail

inline json ring_json(const FiniteRing& r) {
  return json{{"expr", r.name()},
              {"order", r.order()},
              {"characteristic", r.characteristic()},
              {"zero", r.label(r.zero())},
              {"one", r.label(r.one())},
              {"elements", r.labels()},
              {"units", detail::label_list(r, units(r))},
              {"zeroDivisors", detail::label_list(r, zero_divisors(r))}};
}

inline std::string ring_text(const FiniteRing& r) {
  std::ostringstream out;
  out << "ring " << r.name() << "\n"
      << "order " << r.order() << ", characteristic " << r.characteristic() << "\n"
      << "units (" << r.unit_count() << ") " << detail::element_text(r, units(r)) << "\n"
      << "zero-divisors (" << r.zero_divisor_count() << ") " << detail::element_text(r, zero_divisors(r)) << "\n\n"
      << dump_tables(r);
  return out.str();
}

inline json ideals_json(const FiniteRing& r, const IdealLattice& lattice) {
  json maximal = json::array();
  for (const auto& m : lattice.maximal) maximal.push_back(detail::label_list(r, m));
  return json{{"expr", r.name()},
              {"idealCount", lattice.ideals.size()},
              {"maximal", maximal},
              {"radical", detail::label_list(r, lattice.radical)},
              {"local", is_local(r, lattice)}};
}

inline std::string ideals_text(const FiniteRing& r, const IdealLattice& lattice) {
  std::ostringstream out;
  out << "ring " << r.name() << "\n"
      << "ideals " << lattice.ideals.size() << "\n"
      << "maximal ideals " << lattice.maximal.size() << "\n";
  for (const auto& m : lattice.maximal) out << "  " << detail::ideal_text(r, m) << "\n";
  out << "radical " << detail::ideal_text(r, lattice.radical) << "\n"
      << "local " << (is_local(r, lattice) ? "yes" : "no") << "\n";
  return out.str();
}

inline json line_json(const ProjectiveLine& line) {
  json points = json::array();
  for (std::size_t i = 0; i < line.size(); ++i) {
    json nb = json::array();
    neighbourhood(line, i).for_each([&](std::size_t j) { nb.push_back(j); });
    points.push_back(json{{"index", i},
                          {"point", line.label(i)},
                          {"type", line.point(i).type_one ? "I" : "II"},
                          {"neighbours", nb}});
  }
  return json{{"expr", line.ring().name()},
              {"points", line.size()},
              {"typeI", line.type_one_count()},
              {"typeII", line.size() - line.type_one_count()},
              {"list", points}};
}

inline std::string line_text(const ProjectiveLine& line) {
  std::ostringstream out;
  out << "line over " << line.ring().name() << ": " << line.size() << " points, " << line.type_one_count()
      << " type I, " << line.size() - line.type_one_count() << " type II\n";
  for (std::size_t i = 0; i < line.size(); ++i) {
    std::vector<std::string> nb;
    neighbourhood(line, i).for_each([&](std::size_t j) { nb.push_back(line.label(j)); });
    out << std::setw(4) << i << "  " << (line.point(i).type_one ? "I " : "II") << "  " << line.label(i) << "  N: "
        << detail::join(nb, " ") << "\n";
  }
  return out.str();
}

inline const char* csv_header() { return "typeLabel,tot,tpI,oneN,cap2N,cap3N,jcb,md,expr"; }

inline std::string csv_row(const LineProfile& p, const std::string& expr) {
  std::ostringstream out;
  out << p.type_label << ',' << p.tot << ',' << p.tp_one << ',' << p.one_n << ',' << p.cap2n << ',' << p.cap3n << ','
      << p.jcb << ',' << p.md << ',' << expr;
  return out.str();
}

inline std::string profile_text(const LineProfile& p, const std::string& expr) {
  std::ostringstream out;
  out << "ring " << expr << "\n"
      << "type " << p.type_label << "\n"
      << "Tot " << p.tot << "\nTpI " << p.tp_one << "\n1N " << p.one_n << "\ncap2N " << p.cap2n << "\ncap3N "
      << p.cap3n << "\nJcb " << p.jcb << "\nMD " << p.md << "\n";
  return out.str();
}

inline std::string profile_markdown(const LineProfile& p, const std::string& expr) {
  std::ostringstream out;
  out << "| Type | Tot | TpI | 1N | ∩2N | ∩3N | Jcb | MD | Ring |\n"
      << "|---|--:|--:|--:|--:|--:|--:|--:|---|\n"
      << "| " << p.type_label << " | " << p.tot << " | " << p.tp_one << " | " << p.one_n << " | " << p.cap2n << " | "
      << p.cap3n << " | " << p.jcb << " | " << p.md << " | " << expr << " |\n";
  return out.str();
}

inline std::string summary_line(const TableReport& report, bool check) {
  std::ostringstream out;
  out << report.rows.size() << " entries, " << report.distinct_profiles << " distinct profiles";
  if (check) {
    const auto failed = std::count_if(report.rows.begin(), report.rows.end(), [](const TableRow& r) { return !r.pass; });
    out << ", " << failed << " failed";
  }
  return out.str();
}

// Row shown for an entry: the computed profile, or the expected one with the error noted.
inline const LineProfile& shown_profile(const TableRow& row) {
  return row.error.empty() ? row.computed : row.entry.expected;
}

inline std::string table_csv(const TableReport& report) {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& row : report.rows) {
    if (!row.error.empty()) continue;
    out << csv_row(row.computed, row.entry.expr) << '\n';
  }
  return out.str();
}

inline std::string table_json(const TableReport& report, bool check) {
  json out = json::array();
  for (const auto& row : report.rows) {
    json j = profile_json(shown_profile(row), row.entry.expr);
    if (check) j["pass"] = row.pass;
    if (!row.error.empty()) j["error"] = row.error;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

inline std::string table_text(const TableReport& report, bool check) {
  std::ostringstream out;
  out << std::left << std::setw(7) << "Type" << std::right;
  for (const char* h : {"Tot", "TpI", "1N", "∩2N", "∩3N", "Jcb", "MD"}) {
    const std::string s = h;
    // the intersection sign is one column wide but three bytes long
    const std::size_t width = s.find("∩") == std::string::npos ? 5 : 7;
    out << std::setw(static_cast<int>(width)) << s;
  }
  out << "  " << (check ? "Check " : "") << "Ring\n";
  for (const auto& row : report.rows) {
    const auto& p = shown_profile(row);
    out << std::left << std::setw(7) << p.type_label << std::right;
    for (auto v : p.numbers()) out << std::setw(5) << v;
    out << "  ";
    if (check) out << (row.pass ? "PASS  " : "FAIL  ");
    out << row.entry.expr;
    if (check && !row.pass && row.error.empty()) out << "  (expected " << row.entry.expected << ")";
    if (!row.error.empty()) out << "  error: " << row.error;
    out << '\n';
  }
  out << summary_line(report, check) << '\n';
  return out.str();
}

inline std::string table_markdown(const TableReport& report, bool check) {
  std::ostringstream out;
  out << "| Type | Tot | TpI | 1N | ∩2N | ∩3N | Jcb | MD | Ring |" << (check ? " Check |" : "") << "\n"
      << "|---|--:|--:|--:|--:|--:|--:|--:|---|" << (check ? "---|" : "") << "\n";
  for (const auto& row : report.rows) {
    const auto& p = shown_profile(row);
    out << "| " << p.type_label;
    for (auto v : p.numbers()) out << " | " << v;
    out << " | " << row.entry.expr << " |";
    if (check) out << ' ' << (row.pass ? "PASS" : "FAIL") << " |";
    out << '\n';
  }
  out << '\n' << summary_line(report, check) << '\n';
  return out.str();
}

}  // namespace ringline
