#pragma once

// PRE/ARB grids for the shrinkage class (the "31" grid) and PRE grids for
// the truncated class (the "51" grid), plus a diff/audit against the
// published reference values in published.hpp.
//
// Cell order: p outer, then q, then Δ-row, then m.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wshrink/error.hpp"
#include "wshrink/estimators.hpp"
#include "wshrink/format.hpp"
#include "wshrink/model.hpp"
#include "wshrink/published.hpp"
#include "wshrink/risk.hpp"

namespace wshrink {

struct HColumn {
  std::size_t m;
  double h;
};

struct DeltaRow {
  double delta1;
  double delta2;
  double delta() const { return 0.5 * (delta1 + delta2); }
};

/// Where w(p) comes from. Published uses the printed w(p) header of the
/// reference grid where one exists for (p, m), else the closed form.
enum class WeightSource { ClosedForm, Published };

struct GridSpec {
  std::vector<HColumn> h_values;
  std::vector<double> p_values;
  std::vector<double> q_values;
  std::vector<DeltaRow> delta_rows;
  WeightSource weights = WeightSource::ClosedForm;

  std::size_t cell_count() const {
    return h_values.size() * p_values.size() * q_values.size() * delta_rows.size();
  }

  /// Throws ConfigurationError listing every offending entry.
  void validate() const {
    std::vector<std::string> bad;
    if (h_values.empty() || p_values.empty() || q_values.empty() || delta_rows.empty())
      bad.push_back("every grid axis needs at least one value");
    for (const auto& c : h_values)
      if (!(c.h > 4.0) || !std::isfinite(c.h))
        bad.push_back("h=" + fmt::full(c.h) + " (m=" + std::to_string(c.m) + ") must exceed 4");
    for (double p : p_values)
      for (const auto& c : h_values)
        if (c.h > 4.0 && !is_admissible_p(p, c.h))
          bad.push_back("p=" + fmt::full(p) + " inadmissible at h=" + fmt::full(c.h));
    for (double q : q_values)
      if (!detail::positive_finite(q)) bad.push_back("q=" + fmt::full(q) + " must be > 0");
    for (const auto& r : delta_rows)
      if (!detail::positive_finite(r.delta1) || !detail::positive_finite(r.delta2) ||
          r.delta1 > r.delta2)
        bad.push_back("row (" + fmt::full(r.delta1) + ", " + fmt::full(r.delta2) +
                      ") needs 0 < delta1 <= delta2");
    if (bad.empty()) return;
    std::string msg = "invalid grid:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw ConfigurationError(msg);
  }
};

inline std::vector<HColumn> builtin_h_columns() {
  std::vector<HColumn> cols;
  for (const auto& e : kBuiltinH) cols.push_back({e.m, e.h});
  return cols;
}

inline GridSpec default_spec_31() {
  return {builtin_h_columns(),
          {-2, -1, 1, 2},
          {0.25, 0.5, 0.75},
          {{0.1, 0.2}, {0.4, 0.6}, {0.4, 1.6}, {1.0, 2.0}, {1.6, 2.4}, {2.0, 3.0}, {2.5, 3.5},
           {3.5, 3.5}, {3.8, 4.2}}};
}

inline GridSpec default_spec_51() {
  return {builtin_h_columns(),
          {-2, -1, 1, 2},
          {0.25, 0.5, 0.75},
          {{0.2, 0.3}, {0.4, 0.6}, {0.6, 0.9}, {0.8, 1.2}, {1.0, 1.5}, {1.2, 1.8}, {1.5, 2.0}}};
}

struct TableCell {
  std::size_t m;
  double h;
  double p;
  double q;
  double delta1;
  double delta2;
  double delta;
  double w;
  double pre;
  std::optional<double> arb;                                       // 31 grid only
  std::optional<std::pair<DominanceRange, DominanceRange>> ranges;  // (MSE, ARB)
  std::optional<DominanceRange> best;
};

namespace detail {

inline double grid_weight(WeightSource src, double p, const HColumn& col) {
  if (src == WeightSource::Published && p == std::round(p)) {
    if (auto w = published::weight31(static_cast<int>(p), static_cast<int>(col.m))) return *w;
  }
  return shrink_weight(p, col.h);
}

template <class F>
std::vector<TableCell> build_grid(const GridSpec& spec, F fill) {
  spec.validate();
  std::vector<TableCell> cells;
  cells.reserve(spec.cell_count());
  for (double p : spec.p_values)
    for (double q : spec.q_values)
      for (const auto& row : spec.delta_rows)
        for (const auto& col : spec.h_values) {
          TableCell c{col.m, col.h, p, q, row.delta1, row.delta2, row.delta(),
                      grid_weight(spec.weights, p, col), 0.0, std::nullopt, std::nullopt, std::nullopt};
          fill(c);
          cells.push_back(std::move(c));
        }
  return cells;
}

}  // namespace detail

/// PRE and ARB of β̂(p,q) per cell, with the MSE/ARB dominance ranges and
/// Δ_Best of the cell's (h, p, q). Ranges are left empty when w(p) = 1.
inline std::vector<TableCell> table_31(const GridSpec& spec) {
  return detail::build_grid(spec, [](TableCell& c) {
    c.pre = pre_shrink_at(c.h, c.w, c.q, c.delta);
    c.arb = arb_shrink_at(c.w, c.q, c.delta);
    if (1.0 - c.w > detail::kDegenerateWeight) {
      const auto mse = mse_dominance_range_at(c.h, c.w, c.q);
      const auto arb = arb_dominance_range_at(c.h, c.w, c.q);
      c.ranges = std::pair{mse, arb};
      c.best = best_range(mse, arb);
    }
  });
}

/// PRE of the truncated estimator β̃(p,q) per cell.
inline std::vector<TableCell> table_51(const GridSpec& spec) {
  return detail::build_grid(spec, [](TableCell& c) {
    c.pre = pre_modified_at(c.h, c.w, c.q, c.delta1, c.delta2);
  });
}

// ---------------------------------------------------------------------------
// Writers

inline constexpr const char* kCsvHeader =
    "m,h,p,q,delta1,delta2,delta,pre,arb,range_lo,range_hi,best_lo,best_hi";

/// RFC 4180 CSV with CRLF line ends. range_lo/range_hi carry the MSE
/// dominance range; empty fields mean "not applicable" or "empty range".
inline void write_csv(std::ostream& os, const std::vector<TableCell>& cells) {
  os << kCsvHeader << "\r\n";
  const auto opt = [](const std::optional<double>& x) { return x ? fmt::full(*x) : std::string(); };
  for (const auto& c : cells) {
    os << c.m << ',' << fmt::full(c.h) << ',' << fmt::full(c.p) << ',' << fmt::full(c.q) << ','
       << fmt::full(c.delta1) << ',' << fmt::full(c.delta2) << ',' << fmt::full(c.delta) << ','
       << fmt::full(c.pre) << ',' << opt(c.arb) << ',';
    if (c.ranges) os << fmt::full(c.ranges->first.lower) << ',' << fmt::full(c.ranges->first.upper);
    else os << ',';
    os << ',';
    if (c.best) os << fmt::full(c.best->lower) << ',' << fmt::full(c.best->upper);
    else os << ',';
    os << "\r\n";
  }
}

/// Aligned plain text, 4 decimals.
inline void write_text(std::ostream& os, const std::vector<TableCell>& cells) {
  const auto col = [&](const std::string& s, std::size_t width) {
    os << ' ' << std::string(s.size() < width ? width - s.size() : 0, ' ') << s;
  };
  const char* names[] = {"m", "h", "p", "q", "delta1", "delta2", "delta", "w", "PRE", "ARB",
                         "range_lo", "range_hi", "best_lo", "best_hi"};
  const std::size_t widths[] = {3, 8, 7, 6, 7, 7, 7, 6, 10, 6, 8, 8, 8, 8};
  for (std::size_t i = 0; i < std::size(names); ++i) col(names[i], widths[i]);
  os << '\n';
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& c : cells) {
    const double vals[] = {c.h, c.p, c.q, c.delta1, c.delta2, c.delta, c.w, c.pre,
                           c.arb.value_or(nan),
                           c.ranges ? c.ranges->first.lower : nan,
                           c.ranges ? c.ranges->first.upper : nan,
                           c.best ? c.best->lower : nan,
                           c.best ? c.best->upper : nan};
    col(std::to_string(c.m), widths[0]);
    for (std::size_t i = 0; i < std::size(vals); ++i) col(fmt::fixed(vals[i]), widths[i + 1]);
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Diff / audit against the published grids

struct Tolerances {
  double pre_rel = 0.01;
  double arb_abs = 5e-3;
  double report_rel = 0.05;   // larger disagreements are called out separately
  double weight_flag = 5e-4;  // |published w - closed-form w| that flags a column
};

enum class DiffStatus {
  Ok,            // within tolerance under the closed-form w(p)
  FlaggedWeight, // fails under closed form, column's printed w(p) is inconsistent,
                 // and the cell is reproduced under the printed w(p)
  Unattainable,  // printed PRE exceeds the provable upper bound for the cell
  Mismatch,      // unexplained
};

inline std::string_view to_string(DiffStatus s) {
  switch (s) {
    case DiffStatus::Ok: return "ok";
    case DiffStatus::FlaggedWeight: return "excluded:w-header";
    case DiffStatus::Unattainable: return "excluded:unattainable";
    case DiffStatus::Mismatch: return "mismatch";
  }
  return "unknown";
}

struct DiffEntry {
  TableCell cell;
  double published_pre;
  std::optional<double> published_arb;
  double pre_rel_err;
  std::optional<double> arb_abs_err;
  std::optional<double> pre_rel_err_published_w;  // same cell evaluated with the printed w(p)
  std::optional<double> pre_upper_bound;
  bool weight_column_flagged;
  DiffStatus status;
};

struct DiffReport {
  std::string table;
  Tolerances tol;
  std::vector<DiffEntry> entries;
  std::vector<std::pair<int, int>> flagged_columns;  // (p, m)

  std::size_t count(DiffStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const DiffEntry& e) { return e.status == s; }));
  }
  std::size_t compared() const { return entries.size(); }
  std::size_t excluded() const {
    return count(DiffStatus::FlaggedWeight) + count(DiffStatus::Unattainable);
  }
  /// Share of cells within tolerance under the closed form.
  double pass_rate() const { return entries.empty() ? 0.0 : double(count(DiffStatus::Ok)) / double(compared()); }
  /// Share of the non-excluded cells that are within tolerance.
  double unambiguous_pass_rate() const {
    const std::size_t n = compared() - excluded();
    return n == 0 ? 0.0 : double(count(DiffStatus::Ok)) / double(n);
  }
  std::size_t far_off() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const DiffEntry& e) {
      return e.pre_rel_err > tol.report_rel;
    }));
  }

  std::string summary() const {
    std::ostringstream os;
    os << "table " << table << ": " << compared() << " cells compared, " << count(DiffStatus::Ok)
       << " within tolerance (" << fmt::fixed(100.0 * pass_rate(), 1) << "%), "
       << count(DiffStatus::FlaggedWeight) << " excluded for inconsistent w(p) headers, "
       << count(DiffStatus::Unattainable) << " excluded as unattainable, "
       << count(DiffStatus::Mismatch) << " unexplained mismatches ("
       << fmt::fixed(100.0 * unambiguous_pass_rate(), 1) << "% of non-excluded cells within tolerance); " << far_off()
       << " cells differ by more than " << fmt::fixed(100.0 * tol.report_rel, 0) << "%";
    return os.str();
  }
};

namespace detail {

inline std::vector<std::pair<int, int>> flagged_weight_columns(double limit) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : published::kWeights31) {
    const auto h = builtin_h(20, static_cast<std::size_t>(e.m));
    if (h && std::fabs(e.w - shrink_weight(e.p, *h)) > limit) out.emplace_back(e.p, e.m);
  }
  return out;
}

inline bool is_flagged(const std::vector<std::pair<int, int>>& cols, int p, int m) {
  return std::find(cols.begin(), cols.end(), std::pair{p, m}) != cols.end();
}

inline double rel_err(double x, double ref) { return std::fabs(x / ref - 1.0); }

inline bool same(double a, double b) { return std::fabs(a - b) < 1e-9; }

}  // namespace detail

/// Compare the default 31 grid (closed-form w) with the published values.
inline DiffReport diff_table_31(const Tolerances& tol = {}) {
  DiffReport rep{"31", tol, {}, detail::flagged_weight_columns(tol.weight_flag)};
  auto spec = default_spec_31();
  const auto closed = table_31(spec);
  spec.weights = WeightSource::Published;
  const auto printed_w = table_31(spec);
  for (const auto& pub : published::kTable31) {
    const auto it = std::find_if(closed.begin(), closed.end(), [&](const TableCell& c) {
      return c.p == pub.p && detail::same(c.q, pub.q) && c.m == std::size_t(pub.m) &&
             detail::same(c.delta1, pub.delta1) && detail::same(c.delta2, pub.delta2);
    });
    if (it == closed.end()) throw ConfigurationError("published cell missing from generated grid");
    const auto& alt = printed_w[static_cast<std::size_t>(it - closed.begin())];
    DiffEntry e{*it, pub.pre, pub.arb, detail::rel_err(it->pre, pub.pre), std::fabs(*it->arb - pub.arb),
                detail::rel_err(alt.pre, pub.pre), std::nullopt,
                detail::is_flagged(rep.flagged_columns, pub.p, pub.m), DiffStatus::Ok};
    const bool ok = e.pre_rel_err <= tol.pre_rel && *e.arb_abs_err <= tol.arb_abs;
    const bool ok_printed = *e.pre_rel_err_published_w <= tol.pre_rel &&
                            std::fabs(*alt.arb - pub.arb) <= tol.arb_abs;
    if (ok) e.status = DiffStatus::Ok;
    else if (e.weight_column_flagged && ok_printed) e.status = DiffStatus::FlaggedWeight;
    else e.status = DiffStatus::Mismatch;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

/// Upper bound on the PRE of β̃ when the whole guess interval lies below
/// the truth and the shrinkage target does too (Δ₂ < 1, qΔ ≤ Δ₂): then
/// β̃ ≤ β₂ < β surely, so MSE/β² ≥ (1-Δ₂)².
inline std::optional<double> pre_modified_upper_bound(double h, double q, double d1, double d2) {
  const double delta = 0.5 * (d1 + d2);
  if (!(d2 < 1.0) || q * delta > d2) return std::nullopt;
  return 100.0 * rmse_mmse(h) / ((1.0 - d2) * (1.0 - d2));
}

/// Compare the default 51 grid (closed-form w) with the published values.
inline DiffReport diff_table_51(const Tolerances& t = Tolerances{0.015}) {
  DiffReport rep{"51", t, {}, detail::flagged_weight_columns(t.weight_flag)};
  auto spec = default_spec_51();
  const auto closed = table_51(spec);
  spec.weights = WeightSource::Published;
  const auto printed_w = table_51(spec);
  for (const auto& pub : published::kTable51) {
    const auto it = std::find_if(closed.begin(), closed.end(), [&](const TableCell& c) {
      return c.p == pub.p && detail::same(c.q, pub.q) && c.m == std::size_t(pub.m) &&
             detail::same(c.delta1, pub.delta1) && detail::same(c.delta2, pub.delta2);
    });
    if (it == closed.end()) throw ConfigurationError("published cell missing from generated grid");
    const auto& alt = printed_w[static_cast<std::size_t>(it - closed.begin())];
    DiffEntry e{*it, pub.pre, std::nullopt, detail::rel_err(it->pre, pub.pre), std::nullopt,
                detail::rel_err(alt.pre, pub.pre),
                pre_modified_upper_bound(it->h, it->q, it->delta1, it->delta2),
                detail::is_flagged(rep.flagged_columns, pub.p, pub.m), DiffStatus::Ok};
    if (e.pre_rel_err <= t.pre_rel) e.status = DiffStatus::Ok;
    else if (e.pre_upper_bound && pub.pre > *e.pre_upper_bound * (1.0 + t.pre_rel))
      e.status = DiffStatus::Unattainable;
    else if (e.weight_column_flagged && *e.pre_rel_err_published_w <= t.pre_rel)
      e.status = DiffStatus::FlaggedWeight;
    else e.status = DiffStatus::Mismatch;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

/// Per-cell diff lines (non-ok cells only unless `all`), then the summary.
inline void write_diff_text(std::ostream& os, const DiffReport& rep, bool all = false) {
  os << "# diff against published table " << rep.table << '\n';
  if (!rep.flagged_columns.empty()) {
    os << "# w(p) header columns inconsistent with the closed form:";
    for (const auto& [p, m] : rep.flagged_columns) os << " (p=" << p << ",m=" << m << ')';
    os << '\n';
  }
  os << "# p q m delta1 delta2 published computed rel_err rel_err_printed_w status\n";
  for (const auto& e : rep.entries) {
    if (!all && e.status == DiffStatus::Ok) continue;
    os << fmt::full(e.cell.p) << ' ' << fmt::full(e.cell.q) << ' ' << e.cell.m << ' '
       << fmt::full(e.cell.delta1) << ' ' << fmt::full(e.cell.delta2) << ' ' << fmt::fixed(e.published_pre, 2)
       << ' ' << fmt::fixed(e.cell.pre, 2) << ' ' << fmt::fixed(100.0 * e.pre_rel_err, 2) << "% "
       << (e.pre_rel_err_published_w ? fmt::fixed(100.0 * *e.pre_rel_err_published_w, 2) + "%" : "-")
       << ' ' << to_string(e.status);
    if (e.pre_upper_bound) os << " (bound " << fmt::fixed(*e.pre_upper_bound, 2) << ')';
    os << '\n';
  }
  os << "# " << rep.summary() << '\n';
}

// ---------------------------------------------------------------------------
// Published dominance ranges

struct RangeCheck {
  published::RangeEntry entry;
  DominanceRange mse;
  DominanceRange arb;
  DominanceRange best;
  bool mse_ok;
  std::optional<bool> arb_ok;   // nullopt when the printed entry is not verifiable
  std::optional<bool> best_ok;
};

/// Compare every printed range with the closed form. In a flagged (p, m)
/// column that the closed form does not reproduce, the printed w(p) is used.
inline std::vector<RangeCheck> check_ranges_31(double tol = 0.01, double weight_flag = 5e-4) {
  const auto flagged = detail::flagged_weight_columns(weight_flag);
  std::vector<RangeCheck> out;
  const auto near = [tol](double a, double b) { return std::fabs(a - b) <= tol + 1e-12; };
  for (const auto& e : published::kRanges31) {
    const double h = *builtin_h(20, static_cast<std::size_t>(e.m));
    const bool flag = detail::is_flagged(flagged, e.p, e.m);
    const double w_closed = shrink_weight(e.p, h);
    const auto eval = [&](double w) {
      const auto mse = mse_dominance_range_at(h, w, e.q);
      const auto arb = arb_dominance_range_at(h, w, e.q);
      return std::tuple{mse, arb, best_range(mse, arb)};
    };
    const auto ok_at = [&](double w) {
      const auto [mse, arb, best] = eval(w);
      const bool m_ok = near(mse.lower, e.mse_lo) && near(mse.upper, e.mse_hi);
      const bool a_ok = !e.arb_verifiable || (near(arb.lower, e.arb_lo) && near(arb.upper, e.arb_hi));
      const bool b_ok = !e.best_verifiable || (near(best.lower, e.best_lo) && near(best.upper, e.best_hi));
      return m_ok && a_ok && b_ok;
    };
    double w = w_closed;
    if (flag && !ok_at(w_closed)) w = *published::weight31(e.p, e.m);
    const auto [mse, arb, best] = eval(w);
    RangeCheck rc{e, mse, arb, best, near(mse.lower, e.mse_lo) && near(mse.upper, e.mse_hi),
                  std::nullopt, std::nullopt};
    if (e.arb_verifiable) rc.arb_ok = near(arb.lower, e.arb_lo) && near(arb.upper, e.arb_hi);
    if (e.best_verifiable) rc.best_ok = near(best.lower, e.best_lo) && near(best.upper, e.best_hi);
    out.push_back(rc);
  }
  return out;
}

}  // namespace wshrink
