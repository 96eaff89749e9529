// wshrink: estimate, risk, dominance, table and mc subcommands.
//
// Exit codes
//   0  success
//   1  invalid flags or other input errors; a failed mc verify check
//   2  data file could not be parsed or is not sorted
//   3  inadmissible p, degenerate w(p) = 1, or another value outside its domain
//   4  no h for the requested (n, m)
//   5  output path not writable

#include "CLI11.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wshrink/wshrink.hpp"

namespace {

using wshrink::json;
namespace fmt = wshrink::fmt;

enum class Format { Csv, Json, Text };

struct ExitError : std::runtime_error {
  int code;
  ExitError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

struct Globals {
  Format format = Format::Text;
  std::uint64_t seed = 1;
  std::string out;
  unsigned threads = 0;
};

// Key/value report rendered in any of the three formats.
class Report {
 public:
  void add(const std::string& key, double v) { items_.push_back({key, json(v)}); }
  void add(const std::string& key, const std::string& v) { items_.push_back({key, json(v)}); }
  void add(const std::string& key, bool v) { items_.push_back({key, json(v)}); }
  void add(const std::string& key, std::size_t v) { items_.push_back({key, json(v)}); }

  void write(std::ostream& os, Format f) const {
    switch (f) {
      case Format::Json: {
        json j = json::object();
        for (const auto& [k, v] : items_) j[k] = v;
        os << j.dump(2) << '\n';
        break;
      }
      case Format::Csv: {
        for (std::size_t i = 0; i < items_.size(); ++i) os << (i ? "," : "") << items_[i].first;
        os << "\r\n";
        for (std::size_t i = 0; i < items_.size(); ++i) os << (i ? "," : "") << csv_value(items_[i].second);
        os << "\r\n";
        break;
      }
      case Format::Text: {
        std::size_t w = 0;
        for (const auto& it : items_) w = std::max(w, it.first.size());
        for (const auto& [k, v] : items_) os << k << std::string(w - k.size() + 2, ' ') << text_value(v) << '\n';
        break;
      }
    }
  }

 private:
  static std::string csv_value(const json& v) {
    if (v.is_number_float()) return fmt::full(v.get<double>());
    if (v.is_string()) {
      std::string s = v.get<std::string>(), q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    }
    return v.dump();
  }
  static std::string text_value(const json& v) {
    if (v.is_number_float()) return fmt::fixed(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  std::vector<std::pair<std::string, json>> items_;
};

double resolve_h(std::optional<double> h, std::size_t n, std::size_t m) {
  if (h) return *h;
  if (auto b = wshrink::builtin_h(n, m)) return *b;
  throw ExitError(4, "no built-in h for (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                         "); pass --h or estimate it with `wshrink mc estimate-h --n " + std::to_string(n) +
                         " --m " + std::to_string(m) + "`");
}

void add_risk_rows(std::ostream& os, Format f, const std::vector<wshrink::RiskReport>& rows) {
  if (f == Format::Json) {
    os << json(rows).dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    os << "estimator_id,bias_over_beta,arb,rmse,pre_vs_mmse\r\n";
    for (const auto& r : rows)
      os << to_string(r.estimator_id) << ',' << fmt::full(r.bias_over_beta) << ',' << fmt::full(r.arb) << ','
         << fmt::full(r.rmse) << ',' << fmt::full(r.pre_vs_mmse) << "\r\n";
    return;
  }
  os << "estimator             bias/beta      ARB     RMSE        PRE\n";
  for (const auto& r : rows) {
    std::string id(to_string(r.estimator_id));
    os << id << std::string(20 - std::min<std::size_t>(20, id.size()), ' ');
    for (auto [v, w] : {std::pair{r.bias_over_beta, 11}, {r.arb, 9}, {r.rmse, 9}, {r.pre_vs_mmse, 11}}) {
      const auto s = fmt::fixed(v);
      os << std::string(static_cast<std::size_t>(w) > s.size() ? w - s.size() : 1, ' ') << s;
    }
    os << '\n';
  }
}

void write_ranges(std::ostream& os, Format f, const wshrink::DominanceRange& mse,
                  const wshrink::DominanceRange& arb, const wshrink::DominanceRange& best, int cse) {
  if (f == Format::Json) {
    os << json{{"mse", mse}, {"arb", arb}, {"best", best}, {"case", cse}}.dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    os << "kind,lower,upper,empty\r\n";
    for (const auto* r : {&mse, &arb, &best})
      os << to_string(r->kind) << ',' << fmt::full(r->lower) << ',' << fmt::full(r->upper) << ','
         << (r->empty ? "true" : "false") << "\r\n";
    return;
  }
  for (const auto* r : {&mse, &arb, &best}) {
    os << to_string(r->kind) << std::string(6 - to_string(r->kind).size(), ' ');
    if (r->empty) os << "empty\n";
    else os << '(' << fmt::fixed(r->lower) << ", " << fmt::fixed(r->upper) << ")\n";
  }
  os << "case  " << cse << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shrinkage estimation of the Weibull shape parameter from failure-censored samples"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads for Monte Carlo (0 = all cores)");

  // estimate
  auto* est = app.add_subcommand("estimate", "Point estimates from a failure-time file or a given t");
  std::string data_file;
  std::size_t est_n = 0;
  std::optional<double> est_h, est_t, est_K;
  double est_b1 = 0, est_b2 = 0, est_p = 0, est_q = 0;
  std::size_t k_reps = 200000;
  est->add_option("data", data_file, "File with one failure time per line ('#' comments)");
  est->add_option("--n", est_n, "Units on test");
  est->add_option("--h", est_h, "Degrees of freedom h (default: built-in table for n=20)");
  est->add_option("--t", est_t, "Use this pivotal statistic t instead of reading data");
  est->add_option("--K", est_K, "Bain constant K(m,n) (default: Monte Carlo estimate)");
  est->add_option("--k-reps", k_reps, "Replicates for the K(m,n) estimate");
  est->add_option("--beta1", est_b1, "Lower prior guess")->required();
  est->add_option("--beta2", est_b2, "Upper prior guess")->required();
  est->add_option("--p", est_p, "Shrinkage exponent p")->required();
  est->add_option("--q", est_q, "Shrinkage target multiplier q")->required();

  // risk
  auto* risk = app.add_subcommand("risk", "Analytic bias, ARB, RMSE and PRE at one parameter point");
  std::optional<double> rk_h, rk_delta, rk_d1, rk_d2;
  std::size_t rk_n = 20, rk_m = 0;
  double rk_p = 0, rk_q = 0;
  bool rk_modified = false;
  risk->add_option("--h", rk_h, "Degrees of freedom h");
  risk->add_option("--n", rk_n, "Units on test, for the built-in h lookup");
  risk->add_option("--m", rk_m, "Failures observed, for the built-in h lookup");
  risk->add_option("--p", rk_p, "Shrinkage exponent p")->required();
  risk->add_option("--q", rk_q, "Shrinkage target multiplier q")->required();
  risk->add_option("--delta", rk_delta, "Departure (beta1+beta2)/(2 beta)");
  risk->add_option("--delta1", rk_d1, "Departure beta1/beta");
  risk->add_option("--delta2", rk_d2, "Departure beta2/beta");
  risk->add_flag("--modified", rk_modified, "Risk of the truncated estimator (needs --delta1, --delta2)");

  // dominance
  auto* dom = app.add_subcommand("dominance", "MSE and ARB dominance ranges of Delta and their intersection");
  std::optional<double> dm_h;
  std::size_t dm_n = 20, dm_m = 0;
  double dm_p = 0, dm_q = 0;
  dom->add_option("--h", dm_h, "Degrees of freedom h");
  dom->add_option("--n", dm_n, "Units on test, for the built-in h lookup");
  dom->add_option("--m", dm_m, "Failures observed, for the built-in h lookup");
  dom->add_option("--p", dm_p, "Shrinkage exponent p")->required();
  dom->add_option("--q", dm_q, "Shrinkage target multiplier q")->required();

  // table
  auto* tab = app.add_subcommand("table", "PRE grids: 31 (shrinkage class) or 51 (truncated class)");
  std::string which;
  std::vector<double> tb_p, tb_q;
  std::vector<std::size_t> tb_m;
  std::string tb_spec, tb_weights = "closed_form";
  bool tb_diff = false;
  tab->add_option("which", which, "31 or 51")->required()->check(CLI::IsMember({"31", "51"}));
  tab->add_option("--p", tb_p, "Keep only these p values");
  tab->add_option("--q", tb_q, "Keep only these q values");
  tab->add_option("--m", tb_m, "Keep only these m columns");
  tab->add_option("--spec", tb_spec, "JSON GridSpec replacing the default grid");
  tab->add_option("--weights", tb_weights, "Source of w(p)")->check(CLI::IsMember({"closed_form", "published"}));
  tab->add_flag("--diff", tb_diff, "Append a comparison against the published values");

  // mc
  auto* mcc = app.add_subcommand("mc", "Monte Carlo oracles");
  mcc->require_subcommand(1);
  auto* ver = mcc->add_subcommand("verify", "Empirical vs analytic bias and MSE of all four estimators");
  std::optional<double> mv_h, mv_delta, mv_d1, mv_d2;
  std::size_t mv_n = 20, mv_m = 0, mv_reps = 1000000;
  double mv_p = 0, mv_q = 0, mv_beta = 1.0, mv_z = 3.0;
  ver->add_option("--h", mv_h, "Degrees of freedom h");
  ver->add_option("--n", mv_n, "Units on test, for the built-in h lookup");
  ver->add_option("--m", mv_m, "Failures observed, for the built-in h lookup");
  ver->add_option("--p", mv_p, "Shrinkage exponent p")->required();
  ver->add_option("--q", mv_q, "Shrinkage target multiplier q")->required();
  ver->add_option("--delta", mv_delta, "Departure (beta1+beta2)/(2 beta); point guess");
  ver->add_option("--delta1", mv_d1, "Departure beta1/beta");
  ver->add_option("--delta2", mv_d2, "Departure beta2/beta");
  ver->add_option("--beta", mv_beta, "True shape beta used for simulation");
  ver->add_option("--reps", mv_reps, "Replicates")->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 40));
  ver->add_option("--z", mv_z, "Pass band in standard errors");
  auto* ek = mcc->add_subcommand("estimate-k", "Bain constant K(m,n)");
  auto* eh = mcc->add_subcommand("estimate-h", "h = 2/Var(b_u/b), Bain b_u surrogate");
  std::size_t mk_n = 0, mk_m = 0, mk_reps = 100000;
  for (auto* sc : {ek, eh}) {
    sc->add_option("--n", mk_n, "Units on test")->required();
    sc->add_option("--m", mk_m, "Failures observed")->required();
    sc->add_option("--reps", mk_reps, "Replicates");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  g.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text;

  try {
    std::ofstream file;
    if (!g.out.empty()) {
      file.open(g.out, std::ios::binary | std::ios::trunc);
      if (!file) throw ExitError(5, "cannot write to '" + g.out + "'");
    }
    std::ostringstream os;
    int status = 0;

    if (*est) {
      std::optional<wshrink::PivotalContext> ctx;
      Report rep;
      if (est_t) {
        if (!est_h) throw ExitError(1, "--t requires --h");
        ctx = wshrink::PivotalContext::from_ht(*est_h, *est_t);
      } else {
        if (data_file.empty()) throw ExitError(1, "give a data file or --t with --h");
        if (est_n == 0) throw ExitError(1, "--n is required with a data file");
        std::ifstream in(data_file);
        if (!in) throw wshrink::ParseError(0, "cannot open '" + data_file + "'");
        const auto sample = wshrink::parse_failure_times(in, est_n);
        const double h = resolve_h(est_h, sample.n(), sample.m());
        double K = 0.0;
        if (est_K) {
          K = *est_K;
        } else {
          const auto k = wshrink::mc::estimate_K_mn(sample.m(), sample.n(), k_reps, g.seed, g.threads);
          K = k.value;
          rep.add("K_std_error", k.std_error);
        }
        const double bu = wshrink::bain_bu(sample, wshrink::BainConstants(sample.m(), sample.n(), K));
        rep.add("n", sample.n());
        rep.add("m", sample.m());
        rep.add("K", K);
        rep.add("b_u", bu);
        ctx = wshrink::PivotalContext(sample.n(), sample.m(), h, h * bu);
      }
      const wshrink::GuessInterval interval(est_b1, est_b2);
      const wshrink::ShrinkageConfig cfg(est_p, est_q);
      const auto adm = wshrink::admissible_p(ctx->h());
      rep.add("h", ctx->h());
      rep.add("t", ctx->t());
      rep.add("p_admissible", adm.accepts(est_p));
      rep.add("p_lower_bound", adm.lower_bound);
      rep.add("p_excluded_interval_lo", adm.weight_root);
      if (!adm.accepts(est_p)) {
        std::cerr << "inadmissible p=" << est_p << ": " << adm.description << '\n';
        wshrink::shrink_weight(est_p, ctx->h());  // throws with the violated bound
        throw ExitError(3, "inadmissible p");
      }
      rep.add("w", wshrink::shrink_weight(est_p, ctx->h()));
      rep.add("beta_unbiased", wshrink::beta_unbiased(*ctx));
      rep.add("beta_mmse", wshrink::beta_mmse(*ctx));
      rep.add("beta_shrink", wshrink::beta_shrink(*ctx, interval, cfg));
      rep.add("beta_shrink_modified", wshrink::beta_shrink_modified(*ctx, interval, cfg));
      rep.add("delta_hat", wshrink::delta_hat(*ctx, interval));
      rep.add("q_select", wshrink::q_select(*ctx, interval));
      rep.write(os, g.format);
    } else if (*risk) {
      const double h = resolve_h(rk_h, rk_n, rk_m);
      std::vector<wshrink::RiskReport> rows{wshrink::risk_report_mmse(h)};
      if (rk_modified) {
        if (!rk_d1 || !rk_d2) throw ExitError(1, "--modified needs --delta1 and --delta2");
        rows.push_back(wshrink::risk_report_modified(h, rk_p, rk_q, *rk_d1, *rk_d2));
      } else {
        double delta;
        if (rk_delta) delta = *rk_delta;
        else if (rk_d1 && rk_d2) delta = 0.5 * (*rk_d1 + *rk_d2);
        else throw ExitError(1, "give --delta or --delta1 and --delta2");
        rows.push_back(wshrink::risk_report_shrink(h, rk_p, rk_q, delta));
      }
      add_risk_rows(os, g.format, rows);
    } else if (*dom) {
      const double h = resolve_h(dm_h, dm_n, dm_m);
      const auto mse = wshrink::mse_dominance_range(h, dm_p, dm_q);
      const auto arb = wshrink::arb_dominance_range(h, dm_p, dm_q);
      write_ranges(os, g.format, mse, arb, wshrink::best_range(mse, arb), wshrink::dominance_case(mse, arb));
    } else if (*tab) {
      wshrink::GridSpec spec = which == "31" ? wshrink::default_spec_31() : wshrink::default_spec_51();
      if (!tb_spec.empty()) {
        std::ifstream in(tb_spec);
        if (!in) throw ExitError(1, "cannot open '" + tb_spec + "'");
        try {
          spec = json::parse(in).get<wshrink::GridSpec>();
        } catch (const json::exception& e) {
          throw ExitError(1, std::string("bad grid spec: ") + e.what());
        }
      }
      if (!tb_p.empty()) spec.p_values = tb_p;
      if (!tb_q.empty()) spec.q_values = tb_q;
      if (!tb_m.empty()) {
        std::vector<wshrink::HColumn> cols;
        for (auto m : tb_m) {
          const auto it = std::find_if(spec.h_values.begin(), spec.h_values.end(),
                                       [m](const wshrink::HColumn& c) { return c.m == m; });
          if (it == spec.h_values.end()) throw ExitError(4, "no h column for m=" + std::to_string(m));
          cols.push_back(*it);
        }
        spec.h_values = cols;
      }
      spec.weights = tb_weights == "published" ? wshrink::WeightSource::Published : wshrink::WeightSource::ClosedForm;
      const auto cells = which == "31" ? wshrink::table_31(spec) : wshrink::table_51(spec);
      std::optional<wshrink::DiffReport> diff;
      if (tb_diff) diff = which == "31" ? wshrink::diff_table_31() : wshrink::diff_table_51();
      if (g.format == Format::Json) {
        json j = {{"table", which}, {"spec", spec}, {"cells", cells}};
        if (diff) j["diff"] = *diff;
        os << j.dump(2) << '\n';
      } else {
        if (g.format == Format::Csv) wshrink::write_csv(os, cells);
        else wshrink::write_text(os, cells);
        if (diff) {
          os << '\n';
          wshrink::write_diff_text(os, *diff);
        }
      }
      if (diff) std::cerr << diff->summary() << '\n';
    } else if (*ver) {
      const double h = resolve_h(mv_h, mv_n, mv_m);
      double d1, d2;
      if (mv_d1 && mv_d2) d1 = *mv_d1, d2 = *mv_d2;
      else if (mv_delta) d1 = d2 = *mv_delta;
      else throw ExitError(1, "give --delta or --delta1 and --delta2");
      const wshrink::mc::VerifyPoint pt{h, mv_p, mv_q, mv_beta, d1 * mv_beta, d2 * mv_beta};
      const auto checks = wshrink::mc::verify_point(pt, mv_reps, g.seed, g.threads, mv_z);
      if (g.format == Format::Json) {
        os << json{{"h", h}, {"p", mv_p}, {"q", mv_q}, {"delta1", d1}, {"delta2", d2}, {"beta", mv_beta},
                   {"replicates", mv_reps}, {"seed", g.seed}, {"checks", checks}}
                  .dump(2)
           << '\n';
      } else if (g.format == Format::Csv) {
        os << "check,analytic,empirical,std_error,z,pass\r\n";
        for (const auto& c : checks)
          os << c.name << ',' << fmt::full(c.analytic) << ',' << fmt::full(c.empirical) << ','
             << fmt::full(c.std_error) << ',' << fmt::full(c.z) << ',' << (c.pass ? "PASS" : "FAIL") << "\r\n";
      } else {
        for (const auto& c : checks)
          os << (c.pass ? "PASS " : "FAIL ") << c.name << "  analytic " << fmt::fixed(c.analytic)
             << "  empirical " << fmt::fixed(c.empirical) << "  se " << fmt::fixed(c.std_error, 6) << "  z "
             << fmt::fixed(c.z, 2) << '\n';
      }
      for (const auto& c : checks)
        if (!c.pass) {
          std::cerr << "check failed: " << c.name << " (z = " << fmt::fixed(c.z, 2) << ")\n";
          status = 1;
        }
    } else if (*ek || *eh) {
      const bool is_k = static_cast<bool>(*ek);
      const auto e = is_k ? wshrink::mc::estimate_K_mn(mk_m, mk_n, mk_reps, g.seed, g.threads)
                          : wshrink::mc::estimate_h(mk_m, mk_n, mk_reps, g.seed, g.threads);
      Report rep;
      rep.add("quantity", std::string(is_k ? "K(m,n)" : "h (Bain-bu surrogate)"));
      rep.add("n", mk_n);
      rep.add("m", mk_m);
      rep.add("value", e.value);
      rep.add("std_error", e.std_error);
      rep.add("replicates", e.replicates);
      rep.add("seed", static_cast<std::size_t>(g.seed));
      if (!is_k) {
        if (auto b = wshrink::builtin_h(mk_n, mk_m)) {
          rep.add("builtin_h", *b);
          rep.add("deviation", e.value - *b);
        }
      }
      rep.write(os, g.format);
    }

    const std::string text = os.str();
    if (!g.out.empty()) {
      file << text;
      file.close();
      if (!file) throw ExitError(5, "failed writing '" + g.out + "'");
    } else {
      std::cout << text;
    }
    return status;
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const wshrink::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const wshrink::DegenerateWeightError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const wshrink::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
