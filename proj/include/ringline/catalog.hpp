#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ringline/catalog_data.hpp"
#include "ringline/finite_ring.hpp"
#include "ringline/profile.hpp"
#include "ringline/projective_line.hpp"
#include "ringline/ringspec.hpp"

namespace ringline {

struct CatalogEntry {
  std::string expr;
  LineProfile expected;
  std::string source;    // e.g. "row 16/12"
  bool partial = false;  // line type has representatives outside the catalog
};

/// Built-in catalog, by decreasing ring order then increasing zero-divisor count.
inline const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : catalog_data::records) {
      CatalogEntry e;
      e.expr = std::string(r.expr);
      e.expected = LineProfile{std::string(r.type), r.tot, r.tp_one, r.one_n, r.cap2n, r.cap3n, r.jcb, r.md};
      e.source = "row " + std::string(r.type);
      e.partial = r.partial;
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

/// Inclusive range of ring orders, written "A..B" on the command line.
struct OrderRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = std::numeric_limits<std::uint64_t>::max();

  bool contains(std::uint64_t n) const noexcept { return lo <= n && n <= hi; }

  friend bool operator==(const OrderRange&, const OrderRange&) = default;
};

inline std::optional<OrderRange> parse_order_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return std::nullopt;
  auto number = [](std::string_view s) -> std::optional<std::uint64_t> {
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
    return v;
  };
  const auto lo = number(text.substr(0, dots));
  const auto hi = number(text.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return OrderRange{*lo, *hi};
}

inline std::vector<CatalogEntry> filter_catalog(const std::vector<CatalogEntry>& entries, const OrderRange& range) {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries)
    if (range.contains(order_of(parse(e.expr)))) out.push_back(e);
  return out;
}

inline LineProfile compute_profile(const RingExpr& expr, const BuildOptions& options = {}) {
  return profile(enumerate_points(build(expr, options)));
}

inline LineProfile compute_profile(std::string_view text, const BuildOptions& options = {}) {
  return compute_profile(parse(text), options);
}

struct TableRow {
  CatalogEntry entry;
  LineProfile computed;
  bool pass = false;
  std::string error;  // non-empty when the computation threw
};

struct TableReport {
  std::vector<TableRow> rows;
  std::size_t distinct_profiles = 0;

  bool all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.pass; });
  }
};

/// Profiles every entry. Rows keep catalog order for any `jobs`; a row whose computation
/// throws is reported as failed with the error message.
inline TableReport run_table(const std::vector<CatalogEntry>& entries, unsigned jobs = 1) {
  TableReport report;
  report.rows.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      TableRow& row = report.rows[i];
      row.entry = entries[i];
      try {
        row.computed = compute_profile(entries[i].expr);
        row.pass = row.computed == entries[i].expected;
      } catch (const std::exception& ex) {
        row.error = ex.what();
        row.pass = false;
      }
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, entries.size()))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<ProfiledRing> profiled;
  for (const auto& row : report.rows)
    if (row.error.empty()) profiled.push_back({parse(row.entry.expr), row.computed});
  report.distinct_profiles = group_profiles(profiled).size();
  return report;
}

}  // namespace ringline
