#pragma once

// Command-line front end. Exit codes: 0 success, 1 computation failure or --check
// mismatch, 2 usage or input error.

#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringline/ringline.hpp"

namespace ringline::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

struct Options {
  std::string spec;
  std::string format = "text";
  std::string export_graph;
  std::string graph = "neighbour";
  std::string orders;
  bool check = false;
  unsigned jobs = 1;
  std::uint64_t max_order = BuildOptions{}.max_order;
};

namespace detail {

inline void add_spec(CLI::App* cmd, Options& o) {
  cmd->add_option("spec", o.spec, "ring expression, e.g. \"Z4 x Z4\" or \"GF(3)[x]/(x^3)\"")->required();
}

inline void add_format(CLI::App* cmd, Options& o, std::vector<std::string> allowed) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

inline void add_bound(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-order", o.max_order, "largest ring order to tabulate")->check(CLI::Range(2, 1 << 16));
}

inline int cmd_parse(const Options& o, std::ostream& out) {
  const auto expr = parse(o.spec);
  if (o.format == "json")
    out << json{{"expr", render(expr)}, {"ast", to_json(expr)}}.dump(2) << '\n';
  else
    out << render(expr) << '\n';
  return exit_ok;
}

inline int cmd_ring(const Options& o, std::ostream& out) {
  const auto r = build(o.spec, BuildOptions{o.max_order});
  out << (o.format == "json" ? ring_json(r).dump(2) + "\n" : ring_text(r));
  return exit_ok;
}

inline int cmd_ideals(const Options& o, std::ostream& out) {
  const auto r = build(o.spec, BuildOptions{o.max_order});
  const auto lattice = all_ideals(r);
  out << (o.format == "json" ? ideals_json(r, lattice).dump(2) + "\n" : ideals_text(r, lattice));
  return exit_ok;
}

inline int cmd_line(const Options& o, std::ostream& out) {
  const auto line = enumerate_points(build(o.spec, BuildOptions{o.max_order}));
  const auto kind = o.graph == "distant" ? GraphKind::distant : GraphKind::neighbour;
  if (o.export_graph == "dot")
    out << export_dot(line, kind);
  else if (o.export_graph == "csv")
    out << export_edge_csv(line, kind);
  else
    out << (o.format == "json" ? line_json(line).dump(2) + "\n" : line_text(line));
  return exit_ok;
}

inline int cmd_profile(const Options& o, std::ostream& out) {
  const auto expr = parse(o.spec);
  const auto p = compute_profile(expr, BuildOptions{o.max_order});
  const auto name = render(expr);
  if (o.format == "json")
    out << profile_json(p, name).dump(2) << '\n';
  else if (o.format == "csv")
    out << csv_header() << '\n' << csv_row(p, name) << '\n';
  else if (o.format == "markdown")
    out << profile_markdown(p, name);
  else
    out << profile_text(p, name);
  return exit_ok;
}

inline int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  OrderRange range;
  if (!o.orders.empty()) {
    const auto parsed = parse_order_range(o.orders);
    if (!parsed) {
      err << "error: --orders expects A..B with A <= B, got '" << o.orders << "'\n";
      return exit_usage;
    }
    range = *parsed;
  }
  const auto report = run_table(filter_catalog(default_catalog(), range), o.jobs);
  if (o.format == "csv") {
    out << table_csv(report);
    err << summary_line(report, o.check) << '\n';
  } else if (o.format == "json") {
    out << table_json(report, o.check);
    err << summary_line(report, o.check) << '\n';
  } else if (o.format == "markdown") {
    out << table_markdown(report, o.check);
  } else {
    out << table_text(report, o.check);
  }
  for (const auto& row : report.rows)
    if (!row.error.empty()) err << "error: " << row.entry.expr << ": " << row.error << '\n';
  if (o.check && !report.all_pass()) return exit_mismatch;
  return exit_ok;
}

}  // namespace detail

/// Runs one command line; all output goes to `out` and `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Projective lines over finite commutative rings", "ringline"};
  app.require_subcommand(1);

  auto* parse_cmd = app.add_subcommand("parse", "parse a ring expression and print its canonical form");
  detail::add_spec(parse_cmd, o);
  detail::add_format(parse_cmd, o, {"text", "json"});

  auto* ring_cmd = app.add_subcommand("ring", "tabulate a ring: units, zero-divisors, operation tables");
  detail::add_spec(ring_cmd, o);
  detail::add_format(ring_cmd, o, {"text", "json"});
  detail::add_bound(ring_cmd, o);

  auto* ideals_cmd = app.add_subcommand("ideals", "ideal lattice, maximal ideals, Jacobson radical, locality");
  detail::add_spec(ideals_cmd, o);
  detail::add_format(ideals_cmd, o, {"text", "json"});
  detail::add_bound(ideals_cmd, o);

  auto* line_cmd = app.add_subcommand("line", "points of the projective line and their neighbourhoods");
  detail::add_spec(line_cmd, o);
  detail::add_format(line_cmd, o, {"text", "json"});
  detail::add_bound(line_cmd, o);
  line_cmd->add_option("--export-graph", o.export_graph, "write the graph instead of the point list")
      ->check(CLI::IsMember({"dot", "csv"}));
  line_cmd->add_option("--graph", o.graph, "which relation to export")->check(CLI::IsMember({"neighbour", "distant"}));

  auto* profile_cmd = app.add_subcommand("profile", "classification profile of the projective line");
  detail::add_spec(profile_cmd, o);
  detail::add_format(profile_cmd, o, {"text", "json", "csv", "markdown"});
  detail::add_bound(profile_cmd, o);

  auto* table_cmd = app.add_subcommand("table", "profile every ring of the built-in catalog");
  detail::add_format(table_cmd, o, {"text", "json", "csv", "markdown"});
  table_cmd->add_option("--orders", o.orders, "restrict to ring orders A..B");
  table_cmd->add_flag("--check", o.check, "compare against the reference values; exit 1 on mismatch");
  table_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return exit_usage;
  }

  try {
    if (parse_cmd->parsed()) return detail::cmd_parse(o, out);
    if (ring_cmd->parsed()) return detail::cmd_ring(o, out);
    if (ideals_cmd->parsed()) return detail::cmd_ideals(o, out);
    if (line_cmd->parsed()) return detail::cmd_line(o, out);
    if (profile_cmd->parsed()) return detail::cmd_profile(o, out);
    if (table_cmd->parsed()) return detail::cmd_table(o, out, err);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n' << "  " << o.spec << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
    return exit_usage;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const BoundError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_mismatch;
  }
  return exit_usage;
}

}  // namespace ringline::cli
