#include "phaseprob/report_io.hpp"

#include <sstream>

namespace phaseprob {

namespace {

nlohmann::ordered_json estimate_json(const Estimate& e)
{
  return {{"count", e.count}, {"frequency", e.frequency}, {"stderr", e.stderr_}};
}

} // namespace

nlohmann::ordered_json report_to_json(const EstimationReport& report, bool include_timing)
{
  const auto& cfg = report.config;
  const auto& t = report.tally;
  nlohmann::ordered_json j;
  j["schema"] = "phaseprob.estimate/1";
  j["degree"] = cfg.degree;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["partitions"] = cfg.partitions;
  j["oracle_fallback"] = cfg.oracle_fallback;

  auto labels = nlohmann::ordered_json::array();
  for (auto p : portraits_of_degree(cfg.degree)) {
    nlohmann::ordered_json row{{"label", to_string(p)}};
    row.update(estimate_json(report.label(p)));
    labels.push_back(std::move(row));
  }
  j["labels"] = std::move(labels);

  auto index = nlohmann::ordered_json::array();
  for (const auto& [k, _] : t.index) {
    nlohmann::ordered_json row{{"index", k}};
    row.update(estimate_json(report.index(k)));
    index.push_back(std::move(row));
  }
  j["index_marginal"] = std::move(index);

  auto lines = nlohmann::ordered_json::array();
  for (const auto& [k, _] : t.lines) {
    nlohmann::ordered_json row{{"lines", k}};
    row.update(estimate_json(report.lines(k)));
    lines.push_back(std::move(row));
  }
  j["line_marginal"] = std::move(lines);

  if (cfg.degree % 2 == 1) {
    j["attractor"] = estimate_json(report.attractor());
    j["repeller"] = estimate_json(report.repeller());
    j["stability_band_hits"] = t.stability_band_hits;
  } else {
    j["attractor"] = nullptr;
    j["repeller"] = nullptr;
    j["stability_band_hits"] = 0;
  }

  nlohmann::ordered_json reasons = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.degenerate_reasons) reasons[k] = v;
  j["degenerate"] = {{"count", t.degenerate},
                     {"fraction", report.degenerate_fraction()},
                     {"reasons", std::move(reasons)}};

  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [pair, v] : t.unrealized_pairs)
    pairs.push_back({{"index", pair.first}, {"lines", pair.second}, {"count", v}});
  j["unrealized"] = {{"count", t.unrealized},
                     {"fraction", report.unrealized_fraction()},
                     {"pairs", std::move(pairs)}};

  j["tiebreaks"] = t.tiebreaks;
  j["forced_index"] = t.forced_index;
  j["oracle_fallbacks"] = t.oracle_fallbacks;

  auto relations = nlohmann::ordered_json::array();
  for (const auto& r : check_relations(report))
    relations.push_back({{"name", r.name}, {"residual", r.residual}, {"z", r.z}});
  j["relations"] = std::move(relations);

  if (include_timing)
    j["wall_seconds"] = report.wall_seconds;
  return j;
}

std::string report_to_csv(const EstimationReport& report)
{
  std::ostringstream os;
  os << "label,count,frequency,stderr\n";
  // Shortest round-trip form, same as the JSON report.
  auto num = [](double x) { return nlohmann::json(x).dump(); };
  for (auto p : portraits_of_degree(report.config.degree)) {
    const auto e = report.label(p);
    os << to_string(p) << ',' << e.count << ',' << num(e.frequency) << ',' << num(e.stderr_) << '\n';
  }
  return os.str();
}

nlohmann::ordered_json outcome_to_json(const VectorField& f, const ClassificationOutcome& outcome)
{
  nlohmann::ordered_json j;
  j["degree"] = f.degree();
  j["coefficients"] = f.flat();
  std::visit(
    [&](const auto& o) {
      using T = std::decay_t<decltype(o)>;
      if constexpr (std::is_same_v<T, Classified>) {
        j["status"] = "classified";
        j["label"] = to_string(o.label);
        j["index"] = o.index;
        j["lines"] = o.lines;
        j["tiebreak_used"] = o.tiebreak_used;
        j["index_source"] = to_string(o.index_source);
        j["vertical_line"] = o.vertical_line;
      } else if constexpr (std::is_same_v<T, Degenerate>) {
        j["status"] = "degenerate";
        j["reasons"] = o.reasons;
      } else {
        j["status"] = "unrealized";
        j["index"] = o.index;
        j["lines"] = o.lines;
      }
    },
    outcome);
  return j;
}

} // namespace phaseprob
