#pragma once

// JSON interchange for every public type and the failure-time file format.
//
// JSON field names match the member names. Value types with validating
// constructors are read through adl_serializer specializations, so a
// malformed document fails with the same errors as direct construction.
// NaN (e.g. an empty range endpoint) is written as null.
//
// Data files hold one failure time per line; '#' starts a comment; blank
// lines are ignored. n is not in the file because censoring hides it.

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wshrink/error.hpp"
#include "wshrink/estimators.hpp"
#include "wshrink/model.hpp"
#include "wshrink/montecarlo.hpp"
#include "wshrink/risk.hpp"
#include "wshrink/specfun.hpp"
#include "wshrink/tables.hpp"

namespace wshrink {

using json = nlohmann::json;

namespace detail {

inline json num(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

inline double get_num(const json& j, const char* key) {
  const auto& v = j.at(key);
  return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

}  // namespace detail

// Plain aggregates -----------------------------------------------------------

inline void to_json(json& j, const RegIncGammaArgs& a) { j = {{"eta", a.eta}, {"omega", a.omega}}; }
inline void from_json(const json& j, RegIncGammaArgs& a) {
  a = {j.at("eta").get<double>(), j.at("omega").get<double>()};
  if (!(a.omega > 0.0) || !(a.eta >= 0.0)) throw DomainError("RegIncGammaArgs requires eta >= 0, omega > 0");
}

inline void to_json(json& j, EstimatorId id) { j = std::string(to_string(id)); }
inline void from_json(const json& j, EstimatorId& id) {
  const auto s = j.get<std::string>();
  const auto parsed = estimator_id_from_string(s);
  if (!parsed) throw ConfigurationError("unknown estimator_id '" + s + "'");
  id = *parsed;
}

inline void to_json(json& j, const RiskReport& r) {
  j = {{"estimator_id", r.estimator_id}, {"bias_over_beta", r.bias_over_beta}, {"arb", r.arb},
       {"rmse", r.rmse}, {"pre_vs_mmse", r.pre_vs_mmse}};
}
inline void from_json(const json& j, RiskReport& r) {
  r = {j.at("estimator_id").get<EstimatorId>(), j.at("bias_over_beta").get<double>(),
       j.at("arb").get<double>(), j.at("rmse").get<double>(), j.at("pre_vs_mmse").get<double>()};
}

inline void to_json(json& j, const Departures& d) {
  j = {{"delta", d.delta}, {"delta1", d.delta1}, {"delta2", d.delta2}};
}
inline void from_json(const json& j, Departures& d) {
  d = {j.at("delta").get<double>(), j.at("delta1").get<double>(), j.at("delta2").get<double>()};
}

inline void to_json(json& j, RangeKind k) { j = std::string(to_string(k)); }
inline void from_json(const json& j, RangeKind& k) {
  const auto s = j.get<std::string>();
  for (auto c : {RangeKind::Mse, RangeKind::Arb, RangeKind::Best})
    if (to_string(c) == s) {
      k = c;
      return;
    }
  throw ConfigurationError("unknown range kind '" + s + "'");
}

inline void to_json(json& j, const DominanceRange& r) {
  j = {{"lower", detail::num(r.lower)}, {"upper", detail::num(r.upper)}, {"kind", r.kind},
       {"empty", r.empty}};
}
inline void from_json(const json& j, DominanceRange& r) {
  r = {detail::get_num(j, "lower"), detail::get_num(j, "upper"), j.at("kind").get<RangeKind>(),
       j.value("empty", false)};
  if (!r.empty && !(r.lower < r.upper)) throw DomainError("nonempty range requires lower < upper");
}

inline void to_json(json& j, const AdmissibleP& a) {
  j = {{"h", a.h}, {"lower_bound", a.lower_bound}, {"weight_root", a.weight_root},
       {"description", a.description}};
}

inline void to_json(json& j, const HColumn& c) { j = {{"m", c.m}, {"h", c.h}}; }
inline void from_json(const json& j, HColumn& c) { c = {j.at("m").get<std::size_t>(), j.at("h").get<double>()}; }

inline void to_json(json& j, const DeltaRow& r) { j = {{"delta1", r.delta1}, {"delta2", r.delta2}}; }
inline void from_json(const json& j, DeltaRow& r) {
  r = {j.at("delta1").get<double>(), j.at("delta2").get<double>()};
}

inline void to_json(json& j, const GridSpec& g) {
  j = {{"h_values", g.h_values}, {"p_values", g.p_values}, {"q_values", g.q_values},
       {"delta_rows", g.delta_rows},
       {"weights", g.weights == WeightSource::Published ? "published" : "closed_form"}};
}
inline void from_json(const json& j, GridSpec& g) {
  g.h_values = j.at("h_values").get<std::vector<HColumn>>();
  g.p_values = j.at("p_values").get<std::vector<double>>();
  g.q_values = j.at("q_values").get<std::vector<double>>();
  g.delta_rows = j.at("delta_rows").get<std::vector<DeltaRow>>();
  const auto w = j.value("weights", std::string("closed_form"));
  if (w != "closed_form" && w != "published") throw ConfigurationError("unknown weights '" + w + "'");
  g.weights = w == "published" ? WeightSource::Published : WeightSource::ClosedForm;
  g.validate();
}

inline void to_json(json& j, const TableCell& c) {
  j = {{"m", c.m}, {"h", c.h}, {"p", c.p}, {"q", c.q}, {"delta1", c.delta1}, {"delta2", c.delta2},
       {"delta", c.delta}, {"w", c.w}, {"pre", c.pre},
       {"arb", c.arb ? json(*c.arb) : json(nullptr)},
       {"ranges", c.ranges ? json{{"mse", c.ranges->first}, {"arb", c.ranges->second}} : json(nullptr)},
       {"best", c.best ? json(*c.best) : json(nullptr)}};
}
inline void from_json(const json& j, TableCell& c) {
  c.m = j.at("m").get<std::size_t>();
  c.h = j.at("h").get<double>();
  c.p = j.at("p").get<double>();
  c.q = j.at("q").get<double>();
  c.delta1 = j.at("delta1").get<double>();
  c.delta2 = j.at("delta2").get<double>();
  c.delta = j.at("delta").get<double>();
  c.w = j.at("w").get<double>();
  c.pre = j.at("pre").get<double>();
  c.arb = j.at("arb").is_null() ? std::nullopt : std::optional(j.at("arb").get<double>());
  if (const auto& r = j.at("ranges"); !r.is_null())
    c.ranges = std::pair{r.at("mse").get<DominanceRange>(), r.at("arb").get<DominanceRange>()};
  else c.ranges.reset();
  if (const auto& b = j.at("best"); !b.is_null()) c.best = b.get<DominanceRange>();
  else c.best.reset();
}

inline void to_json(json& j, const DiffEntry& e) {
  j = {{"cell", e.cell}, {"published_pre", e.published_pre},
       {"published_arb", e.published_arb ? json(*e.published_arb) : json(nullptr)},
       {"pre_rel_err", e.pre_rel_err},
       {"arb_abs_err", e.arb_abs_err ? json(*e.arb_abs_err) : json(nullptr)},
       {"pre_rel_err_published_w", e.pre_rel_err_published_w ? json(*e.pre_rel_err_published_w) : json(nullptr)},
       {"pre_upper_bound", e.pre_upper_bound ? json(*e.pre_upper_bound) : json(nullptr)},
       {"weight_column_flagged", e.weight_column_flagged}, {"status", std::string(to_string(e.status))}};
}

inline void to_json(json& j, const DiffReport& r) {
  json cols = json::array();
  for (const auto& [p, m] : r.flagged_columns) cols.push_back({{"p", p}, {"m", m}});
  j = {{"table", r.table},
       {"compared", r.compared()},
       {"within_tolerance", r.count(DiffStatus::Ok)},
       {"excluded_w_header", r.count(DiffStatus::FlaggedWeight)},
       {"excluded_unattainable", r.count(DiffStatus::Unattainable)},
       {"mismatches", r.count(DiffStatus::Mismatch)},
       {"pass_rate", r.pass_rate()},
       {"flagged_columns", cols},
       {"summary", r.summary()},
       {"entries", r.entries}};
}

namespace mc {

inline void to_json(json& j, const EmpiricalRisk& r) {
  j = {{"mean", r.mean}, {"bias", r.bias}, {"mse", r.mse}, {"std_error_mean", r.std_error_mean},
       {"std_error_mse", r.std_error_mse}, {"replicates", r.replicates}};
}
inline void from_json(const json& j, EmpiricalRisk& r) {
  r = {j.at("mean").get<double>(), j.at("bias").get<double>(), j.at("mse").get<double>(),
       j.at("std_error_mean").get<double>(), j.at("std_error_mse").get<double>(),
       j.at("replicates").get<std::size_t>()};
}

inline void to_json(json& j, const MonteCarloEstimate& e) {
  j = {{"value", e.value}, {"std_error", e.std_error}, {"replicates", e.replicates}};
}

inline void to_json(json& j, const Check& c) {
  j = {{"name", c.name}, {"analytic", c.analytic}, {"empirical", c.empirical},
       {"std_error", c.std_error}, {"z", wshrink::detail::num(std::isinf(c.z) ? NAN : c.z)}, {"pass", c.pass}};
}

}  // namespace mc

}  // namespace wshrink

// Validating value types ----------------------------------------------------

namespace nlohmann {

template <>
struct adl_serializer<wshrink::WeibullParams> {
  static wshrink::WeibullParams from_json(const json& j) {
    return {j.at("alpha").get<double>(), j.at("beta").get<double>()};
  }
  static void to_json(json& j, const wshrink::WeibullParams& p) {
    j = {{"alpha", p.alpha()}, {"beta", p.beta()}};
  }
};

template <>
struct adl_serializer<wshrink::CensoredSample> {
  static wshrink::CensoredSample from_json(const json& j) {
    return {j.at("n").get<std::size_t>(), j.at("observations").get<std::vector<double>>()};
  }
  static void to_json(json& j, const wshrink::CensoredSample& s) {
    j = {{"n", s.n()},
         {"m", s.m()},
         {"observations", std::vector<double>(s.observations().begin(), s.observations().end())}};
  }
};

template <>
struct adl_serializer<wshrink::PivotalContext> {
  static wshrink::PivotalContext from_json(const json& j) {
    return {j.value("n", std::size_t{0}), j.value("m", std::size_t{0}), j.at("h").get<double>(),
            j.at("t").get<double>()};
  }
  static void to_json(json& j, const wshrink::PivotalContext& c) {
    j = {{"n", c.n()}, {"m", c.m()}, {"h", c.h()}, {"t", c.t()}};
  }
};

template <>
struct adl_serializer<wshrink::GuessInterval> {
  static wshrink::GuessInterval from_json(const json& j) {
    return {j.at("beta1").get<double>(), j.at("beta2").get<double>()};
  }
  static void to_json(json& j, const wshrink::GuessInterval& g) {
    j = {{"beta1", g.beta1()}, {"beta2", g.beta2()}};
  }
};

template <>
struct adl_serializer<wshrink::ShrinkageConfig> {
  static wshrink::ShrinkageConfig from_json(const json& j) {
    return {j.at("p").get<double>(), j.at("q").get<double>()};
  }
  static void to_json(json& j, const wshrink::ShrinkageConfig& c) { j = {{"p", c.p()}, {"q", c.q()}}; }
};

template <>
struct adl_serializer<wshrink::BainConstants> {
  static wshrink::BainConstants from_json(const json& j) {
    return {j.at("m").get<std::size_t>(), j.at("n").get<std::size_t>(), j.at("K").get<double>()};
  }
  static void to_json(json& j, const wshrink::BainConstants& b) {
    j = {{"m", b.m()}, {"n", b.n()}, {"K", b.K()}};
  }
};

template <>
struct adl_serializer<wshrink::mc::SimulationPlan> {
  static wshrink::mc::SimulationPlan from_json(const json& j) {
    wshrink::mc::SimulationPlan plan{j.at("replicates").get<std::size_t>(),
                                     j.at("seed").get<std::uint64_t>(),
                                     j.at("params").get<wshrink::WeibullParams>(),
                                     j.at("n").get<std::size_t>(),
                                     j.at("m").get<std::size_t>()};
    plan.validate();
    return plan;
  }
  static void to_json(json& j, const wshrink::mc::SimulationPlan& p) {
    j = {{"replicates", p.replicates}, {"seed", p.seed}, {"params", p.params}, {"n", p.n}, {"m", p.m}};
  }
};

}  // namespace nlohmann

namespace wshrink {

/// Malformed data file; line() is 1-based, 0 when the file as a whole is bad.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Read failure times, one per line, and build a sample of n units.
inline CensoredSample parse_failure_times(std::istream& in, std::size_t n) {
  std::vector<double> x;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    s = s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError(lineno, "not a decimal number: '" + std::string(s) + "'");
    if (!(v > 0.0) || !std::isfinite(v)) throw ParseError(lineno, "failure time must be positive");
    if (!x.empty() && v < x.back())
      throw ParseError(lineno, "failure times are not sorted ascending");
    x.push_back(v);
  }
  if (x.empty()) throw ParseError(0, "no failure times found");
  if (x.size() > n)
    throw ParseError(0, "file holds " + std::to_string(x.size()) + " failure times but n=" + std::to_string(n));
  return CensoredSample(n, std::move(x));
}

}  // namespace wshrink
