#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "wshrink/tables.hpp"

using namespace wshrink;

namespace {

const TableCell& find_cell(const std::vector<TableCell>& cells, std::size_t m, double p, double q,
                           double d1, double d2) {
  for (const auto& c : cells)
    if (c.m == m && c.p == p && c.q == q && std::fabs(c.delta1 - d1) < 1e-12 && std::fabs(c.delta2 - d2) < 1e-12)
      return c;
  throw std::runtime_error("cell not found");
}

const DiffEntry& find_entry(const DiffReport& rep, std::size_t m, double p, double q, double d1, double d2) {
  for (const auto& e : rep.entries)
    if (e.cell.m == m && e.cell.p == p && e.cell.q == q && std::fabs(e.cell.delta1 - d1) < 1e-12 &&
        std::fabs(e.cell.delta2 - d2) < 1e-12)
      return e;
  throw std::runtime_error("entry not found");
}

// Cells grouped by (p, q, m), rows in grid order.
std::map<std::tuple<double, double, std::size_t>, std::vector<TableCell>> blocks(const std::vector<TableCell>& cells) {
  std::map<std::tuple<double, double, std::size_t>, std::vector<TableCell>> out;
  for (const auto& c : cells) out[{c.p, c.q, c.m}].push_back(c);
  return out;
}

}  // namespace

TEST(Grid, CellCounts) {
  EXPECT_EQ(default_spec_31().cell_count(), 432u);
  EXPECT_EQ(table_31(default_spec_31()).size(), 432u);
  EXPECT_EQ(table_51(default_spec_51()).size(), 336u);
  auto spec = default_spec_31();
  spec.q_values = {0.5};
  EXPECT_EQ(table_31(spec).size(), 144u);
  EXPECT_EQ(published::kTable31.size(), 432u);
  EXPECT_EQ(published::kTable51.size(), 336u);
}

TEST(Grid, OrderingIsPThenQThenRowThenM) {
  const auto cells = table_31(default_spec_31());
  EXPECT_EQ(cells[0].p, -2.0);
  EXPECT_EQ(cells[0].q, 0.25);
  EXPECT_EQ(cells[0].m, 6u);
  EXPECT_EQ(cells[1].m, 8u);
  EXPECT_EQ(cells[4].delta1, 0.4);
  EXPECT_EQ(cells[36].q, 0.5);
  EXPECT_EQ(cells[108].p, -1.0);
  EXPECT_EQ(cells.back().p, 2.0);
  EXPECT_EQ(cells.back().m, 12u);
}

TEST(Grid, CellsAreConsistent) {
  for (const auto& c : table_31(default_spec_31())) {
    EXPECT_NEAR(c.delta, 0.5 * (c.delta1 + c.delta2), 1e-15);
    EXPECT_DOUBLE_EQ(c.w, shrink_weight(c.p, c.h));
    EXPECT_DOUBLE_EQ(c.pre, pre_shrink(c.h, c.p, c.q, c.delta));
    ASSERT_TRUE(c.arb.has_value());
    EXPECT_GE(*c.arb, 0.0);
    EXPECT_GE(c.pre, 0.0);
    ASSERT_TRUE(c.ranges.has_value());
    ASSERT_TRUE(c.best.has_value());
  }
  for (const auto& c : table_51(default_spec_51())) {
    EXPECT_FALSE(c.arb.has_value());
    EXPECT_DOUBLE_EQ(c.pre, pre_modified(c.h, c.p, c.q, c.delta1, c.delta2));
  }
}

TEST(Grid, PublishedWeightsOnlyReplaceHeaders) {
  auto spec = default_spec_31();
  spec.weights = WeightSource::Published;
  const auto cells = table_31(spec);
  EXPECT_EQ(find_cell(cells, 6, -2, 0.25, 0.1, 0.2).w, 0.175);
  spec.p_values = {1.5};
  const auto off_grid = table_31(spec);
  EXPECT_DOUBLE_EQ(off_grid[0].w, shrink_weight(1.5, off_grid[0].h));
}

TEST(Table31, Anchors) {
  // The m = 6, p = -2 header prints w = 0.175 against the closed form 0.17659,
  // so the anchor is reproduced under the printed weight.
  auto spec = default_spec_31();
  spec.weights = WeightSource::Published;
  const auto printed = table_31(spec);
  const auto& a = find_cell(printed, 6, -2, 0.25, 0.1, 0.2);
  EXPECT_NEAR(a.pre, 35.33, 0.01 * 35.33);
  EXPECT_NEAR(*a.arb, 0.7941, 5e-3);
  const auto& b = find_cell(printed, 12, 1, 0.5, 1.6, 2.4);
  EXPECT_NEAR(b.pre, 119.12, 0.01 * 119.12);
  EXPECT_NEAR(*b.arb, 0.0, 5e-3);

  const auto closed = table_31(default_spec_31());
  EXPECT_NEAR(find_cell(closed, 6, -2, 0.25, 0.1, 0.2).pre, 35.45798454199083, 1e-10);
  EXPECT_NEAR(find_cell(closed, 6, -1, 0.25, 0.4, 1.6).pre, 110.98, 0.01 * 110.98);
}

TEST(Table31, HalfBlocksAreSymmetric) {
  const auto cells = table_31(default_spec_31());
  for (const auto& c : cells) {
    if (c.q != 0.5 || c.delta > 2.0) continue;
    for (const auto& d : cells) {
      if (d.q != 0.5 || d.p != c.p || d.m != c.m || std::fabs(d.delta - (4.0 - c.delta)) > 1e-12) continue;
      EXPECT_NEAR(c.pre, d.pre, 1e-9 * c.pre) << c.delta << " vs " << d.delta;
      EXPECT_NEAR(*c.arb, *d.arb, 1e-12);
    }
  }
}

TEST(Table31, PeakAtRowNearestInverseQ) {
  for (const auto& [key, rows] : blocks(table_31(default_spec_31()))) {
    const double q = std::get<1>(key);
    std::size_t nearest = 0, best_pre = 0, best_arb = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (std::fabs(rows[i].delta - 1.0 / q) < std::fabs(rows[nearest].delta - 1.0 / q)) nearest = i;
      if (rows[i].pre > rows[best_pre].pre) best_pre = i;
      if (*rows[i].arb < *rows[best_arb].arb) best_arb = i;
    }
    EXPECT_EQ(best_pre, nearest);
    EXPECT_EQ(best_arb, nearest);
  }
}

TEST(Table51, UnimodalInRowIndex) {
  for (const auto& [key, rows] : blocks(table_51(default_spec_51()))) {
    std::size_t i = 1;
    while (i < rows.size() && rows[i].pre >= rows[i - 1].pre) ++i;
    while (i < rows.size() && rows[i].pre <= rows[i - 1].pre) ++i;
    EXPECT_EQ(i, rows.size()) << "p=" << std::get<0>(key) << " q=" << std::get<1>(key) << " m=" << std::get<2>(key);
  }
}

TEST(Table51, Anchors) {
  const auto rep = diff_table_51();
  const auto& e1 = find_entry(rep, 6, -1, 0.25, 0.8, 1.2);
  EXPECT_EQ(e1.status, DiffStatus::Ok);
  EXPECT_NEAR(e1.cell.pre, 548.60, 0.015 * 548.60);

  // Both Δ's below 1 with the target below β₂: β̃ ≤ β₂ < β, so MSE ≥ (1-Δ₂)²
  // and PRE cannot exceed 46.11; the printed 50.80 is unattainable.
  const auto& e2 = find_entry(rep, 6, -1, 0.25, 0.2, 0.3);
  EXPECT_EQ(e2.status, DiffStatus::Unattainable);
  ASSERT_TRUE(e2.pre_upper_bound.has_value());
  EXPECT_NEAR(*e2.pre_upper_bound, 100.0 * rmse_mmse(10.8519) / 0.49, 1e-9);
  EXPECT_LT(e2.cell.pre, *e2.pre_upper_bound);
  EXPECT_GT(e2.published_pre, *e2.pre_upper_bound);

  // The p = 2, m = 12 column prints w = 0.6816 (closed form 0.6045); under
  // the printed weight the cell is reproduced.
  const auto& e3 = find_entry(rep, 12, 2, 0.75, 1.0, 1.5);
  EXPECT_EQ(e3.status, DiffStatus::FlaggedWeight);
  EXPECT_GT(e3.pre_rel_err, 0.015);
  EXPECT_LE(*e3.pre_rel_err_published_w, 0.015);
}

TEST(Table51, UpperBoundOnlyWhenWholeIntervalBelowTruth) {
  EXPECT_FALSE(pre_modified_upper_bound(10.8519, 0.25, 0.8, 1.2).has_value());
  EXPECT_FALSE(pre_modified_upper_bound(10.8519, 4.0, 0.2, 0.3).has_value());
  ASSERT_TRUE(pre_modified_upper_bound(10.8519, 1.0, 0.2, 0.3).has_value());
  // The bound holds for every admissible p.
  for (double p : {-2.0, -1.0, 1.0, 2.0, 0.5})
    EXPECT_LT(pre_modified(10.8519, p, 1.0, 0.2, 0.3), *pre_modified_upper_bound(10.8519, 1.0, 0.2, 0.3));
}

TEST(Diff, Table31HasNoUnexplainedMismatch) {
  const auto rep = diff_table_31();
  EXPECT_EQ(rep.compared(), 432u);
  EXPECT_EQ(rep.count(DiffStatus::Mismatch), 0u);
  EXPECT_EQ(rep.count(DiffStatus::Unattainable), 0u);
  EXPECT_EQ(rep.count(DiffStatus::Ok) + rep.count(DiffStatus::FlaggedWeight), 432u);
  const std::vector<std::pair<int, int>> flagged{{-2, 6}, {1, 12}, {2, 10}, {2, 12}};
  EXPECT_EQ(rep.flagged_columns, flagged);
  for (const auto& e : rep.entries)
    if (e.status == DiffStatus::FlaggedWeight) {
      EXPECT_TRUE(e.weight_column_flagged);
    }
  EXPECT_NE(rep.summary().find("432 cells compared"), std::string::npos);
}

TEST(Diff, Table51Counts) {
  const auto rep = diff_table_51();
  EXPECT_EQ(rep.compared(), 336u);
  EXPECT_EQ(rep.count(DiffStatus::Ok) + rep.excluded() + rep.count(DiffStatus::Mismatch), 336u);
  EXPECT_GT(rep.count(DiffStatus::Unattainable), 0u);
  EXPECT_NEAR(rep.tol.pre_rel, 0.015, 0.0);
  std::ostringstream os;
  write_diff_text(os, rep);
  EXPECT_NE(os.str().find("excluded:unattainable (bound 46.11)"), std::string::npos);
  EXPECT_NE(os.str().find("# table 51: 336 cells compared"), std::string::npos);
}

TEST(Ranges, PublishedRangesReproduced) {
  const auto checks = check_ranges_31();
  EXPECT_EQ(checks.size(), 48u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.mse_ok) << "p=" << c.entry.p << " q=" << c.entry.q << " m=" << c.entry.m;
    if (c.arb_ok) {
      EXPECT_TRUE(*c.arb_ok) << "p=" << c.entry.p << " q=" << c.entry.q << " m=" << c.entry.m;
    }
    if (c.best_ok) {
      EXPECT_TRUE(*c.best_ok) << "p=" << c.entry.p << " q=" << c.entry.q << " m=" << c.entry.m;
    }
  }
}

TEST(Ranges, PrintedArbEntryViolatesScaling) {
  // At p = 1 the printed q = 0.25 ARB range repeats the p = -1 values, while
  // the closed form (and the printed q = 0.5 entry) scale as 1/q.
  const double h = 10.8519;
  const auto arb25 = arb_dominance_range(h, 1.0, 0.25);
  const auto arb50 = arb_dominance_range(h, 1.0, 0.5);
  EXPECT_NEAR(arb25.lower, 2.0 * arb50.lower, 1e-12);
  EXPECT_NEAR(arb25.lower, 1.10, 0.01);
  EXPECT_NEAR(arb25.upper, 6.90, 0.01);
  for (const auto& e : published::kRanges31) {
    if (e.p == 1 && e.q == 0.25) {
      EXPECT_FALSE(e.arb_verifiable);
      EXPECT_FALSE(e.best_verifiable);
    }
  }
}

TEST(Validation, ListsEveryOffendingEntry) {
  GridSpec spec{{{6, 3.5}, {8, 15.674}}, {0.0, -1.0}, {-0.5}, {{2.0, 1.0}}};
  try {
    table_31(spec);
    FAIL() << "expected ConfigurationError";
  } catch (const ConfigurationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("h=3.5"), std::string::npos) << msg;
    EXPECT_NE(msg.find("p=0 inadmissible"), std::string::npos) << msg;
    EXPECT_NE(msg.find("q=-0.5"), std::string::npos) << msg;
    EXPECT_NE(msg.find("row (2, 1)"), std::string::npos) << msg;
  }
  EXPECT_THROW(table_51(GridSpec{}), ConfigurationError);
  EXPECT_THROW(table_31(GridSpec{{{6, 10.8519}}, {-0.1}, {0.5}, {{1.0, 1.0}}}), ConfigurationError);
}

TEST(Writers, CsvFormat) {
  auto spec = default_spec_31();
  spec.p_values = {-2};
  spec.q_values = {0.25};
  spec.delta_rows = {{0.1, 0.2}};
  spec.h_values = {{6, 10.8519}};
  std::ostringstream os;
  write_csv(os, table_31(spec));
  const std::string s = os.str();
  EXPECT_EQ(s.rfind(std::string(kCsvHeader) + "\r\n", 0), 0u);
  const std::string row = s.substr(s.find("\r\n") + 2);
  EXPECT_EQ(row.rfind("6,10.8519,-2,0.25,0.1,0.2,0.15000000000000002,35.45798454199083,", 0), 0u) << row;
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 12);
  EXPECT_EQ(row.substr(row.size() - 2), "\r\n");

  std::ostringstream os51;
  spec.delta_rows = {{0.2, 0.3}};
  write_csv(os51, table_51(spec));
  EXPECT_NE(os51.str().find(",,,,,\r\n"), std::string::npos);
}

TEST(Writers, TextIsAligned) {
  auto spec = default_spec_51();
  spec.p_values = {-1};
  spec.q_values = {0.25};
  std::ostringstream os;
  write_text(os, table_51(spec));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  const auto width = line.size();
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(line.size(), width) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 28);
  EXPECT_NE(os.str().find("549.4283"), std::string::npos);
}
