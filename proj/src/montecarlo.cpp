#include "phaseprob/montecarlo.hpp"

#include "phaseprob/kostlan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace phaseprob {

VectorField sample_field(int degree, NormalStream& stream)
{
  const auto half = static_cast<std::size_t>(degree + 1);
  std::vector<double> p(half), q(half);
  for (auto& c : p) c = stream.next();
  for (auto& c : q) c = stream.next();
  return VectorField(degree, std::move(p), std::move(q));
}

void Tally::record(const VectorField& f, const ClassificationOutcome& outcome)
{
  if (const auto* d = std::get_if<Degenerate>(&outcome)) {
    ++degenerate;
    for (const auto& r : d->reasons) ++degenerate_reasons[r];
    return;
  }
  if (const auto* u = std::get_if<UnrealizedPair>(&outcome)) {
    ++unrealized;
    ++unrealized_pairs[{u->index, u->lines}];
    ++index[u->index];
    ++lines[u->lines];
    return;
  }
  const auto& c = std::get<Classified>(outcome);
  ++labels[static_cast<int>(c.label)];
  ++index[c.index];
  ++lines[c.lines];
  if (c.tiebreak_used) ++tiebreaks;
  if (c.index_source == IndexSource::forced_by_no_lines) ++forced_index;
  if (c.index_source == IndexSource::winding_oracle) ++oracle_fallbacks;
  if (f.degree() % 2 == 1) {
    try {
      switch (global_stability(f)) {
        case Stability::attractor: ++attractor; break;
        case Stability::repeller: ++repeller; break;
        case Stability::neither: break;
      }
    } catch (const std::runtime_error&) {
      ++stability_band_hits;
    }
  }
}

void Tally::merge(const Tally& other)
{
  for (int i = 0; i < kPortraitCount; ++i) labels[i] += other.labels[i];
  for (const auto& [k, v] : other.index) index[k] += v;
  for (const auto& [k, v] : other.lines) lines[k] += v;
  attractor += other.attractor;
  repeller += other.repeller;
  stability_band_hits += other.stability_band_hits;
  degenerate += other.degenerate;
  for (const auto& [k, v] : other.degenerate_reasons) degenerate_reasons[k] += v;
  unrealized += other.unrealized;
  for (const auto& [k, v] : other.unrealized_pairs) unrealized_pairs[k] += v;
  tiebreaks += other.tiebreaks;
  forced_index += other.forced_index;
  oracle_fallbacks += other.oracle_fallbacks;
}

Estimate EstimationReport::make(std::uint64_t count) const
{
  const double n = static_cast<double>(config.samples);
  const double p = static_cast<double>(count) / n;
  return {count, p, std::sqrt(p * (1.0 - p) / n)};
}

Estimate EstimationReport::label(Portrait p) const
{
  return make(tally.labels[static_cast<int>(p)]);
}

Estimate EstimationReport::index(int k) const
{
  const auto it = tally.index.find(k);
  return make(it == tally.index.end() ? 0 : it->second);
}

Estimate EstimationReport::lines(int k) const
{
  const auto it = tally.lines.find(k);
  return make(it == tally.lines.end() ? 0 : it->second);
}

Estimate EstimationReport::attractor() const { return make(tally.attractor); }
Estimate EstimationReport::repeller() const { return make(tally.repeller); }

double EstimationReport::degenerate_fraction() const
{
  return static_cast<double>(tally.degenerate) / static_cast<double>(config.samples);
}

double EstimationReport::unrealized_fraction() const
{
  return static_cast<double>(tally.unrealized) / static_cast<double>(config.samples);
}

EstimationReport estimate(const SamplerConfig& config)
{
  if (config.samples < 1)
    throw std::invalid_argument("samples must be >= 1");
  if (config.partitions < 1)
    throw std::invalid_argument("partitions must be >= 1");
  if (config.degree < 1 || config.degree > 3)
    throw std::invalid_argument("estimation is defined for degrees 1-3");

  const auto start = std::chrono::steady_clock::now();
  const auto parts = static_cast<std::uint64_t>(config.partitions);
  std::vector<Tally> tallies(parts);
  const ClassifyOptions options{.allow_vertical_line = false,
                                .oracle_fallback = config.oracle_fallback};

  auto work = [&](std::uint64_t part) {
    // Contiguous index ranges; the split point arithmetic avoids overflow.
    const std::uint64_t n = config.samples;
    const std::uint64_t begin = n / parts * part + std::min(part, n % parts);
    const std::uint64_t end = begin + n / parts + (part < n % parts ? 1 : 0);
    Tally& t = tallies[part];
    for (std::uint64_t i = begin; i < end; ++i) {
      NormalStream stream(config.seed, i);
      const auto f = sample_field(config.degree, stream);
      t.record(f, classify(f, options));
    }
  };

  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(parts);
    for (std::uint64_t p = 0; p < parts; ++p)
      threads.emplace_back(work, p);
  }

  EstimationReport report;
  report.config = config;
  for (const auto& t : tallies)
    report.tally.merge(t);
  report.wall_seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

// Linear statistic sum_k c_k p_k over disjoint events, compared with target.
// Variance of the plug-in estimate is (sum c_k^2 p_k - (sum c_k p_k)^2) / N.
Relation linear_relation(std::string name, const std::vector<std::pair<double, double>>& terms,
                         double target, double n)
{
  double mean = 0.0, second = 0.0;
  for (const auto& [c, p] : terms) {
    mean += c * p;
    second += c * c * p;
  }
  const double sd = std::sqrt(std::max(second - mean * mean, 0.0) / n);
  Relation r{std::move(name), mean - target, 0.0};
  if (r.residual != 0.0)
    r.z = sd > 0 ? r.residual / sd : std::copysign(std::numeric_limits<double>::infinity(), r.residual);
  return r;
}

} // namespace

std::vector<Relation> check_relations(const EstimationReport& report)
{
  // Label and index relations are conditional on samples with a decided (i, l) pair;
  // degenerate samples are measure zero and bounded separately.
  const double total = static_cast<double>(report.config.samples);
  const double n = total - static_cast<double>(report.tally.degenerate);
  if (!(n > 0)) throw std::invalid_argument("no classified samples");
  auto P = [&](Portrait p) { return report.tally.labels[static_cast<int>(p)] / n; };
  auto u = [&](int k) {
    auto it = report.tally.index.find(k);
    return it == report.tally.index.end() ? 0.0 : it->second / n;
  };
  // summed in integers so a complete table gives exactly 1
  auto classified = [&](int degree) {
    std::uint64_t count = 0;
    for (auto p : portraits_of_degree(degree)) count += report.tally.labels[static_cast<int>(p)];
    return static_cast<double>(count) / n;
  };
  const double a = report.attractor().frequency;
  const double r = report.repeller().frequency;
  using enum Portrait;

  std::vector<Relation> out;
  switch (report.config.degree) {
    case 1: {
      const double half_sqrt2 = std::numbers::sqrt2 / 2.0;
      out.push_back(linear_relation("P(L1)=1/2", {{1, P(L1)}}, 0.5, n));
      out.push_back(linear_relation("P(L2)=sqrt2/2-1/2", {{1, P(L2)}}, half_sqrt2 - 0.5, n));
      out.push_back(linear_relation("P(L3)=1-sqrt2/2", {{1, P(L3)}}, 1.0 - half_sqrt2, n));
      out.push_back(linear_relation("2P(L1)+2P(L2)=Lambda1", {{2, P(L1)}, {2, P(L2)}},
                                    std::numbers::sqrt2, n));
      out.push_back(linear_relation("a1=1/4", {{1, a}}, 0.25, total));
      out.push_back(linear_relation("a1=r1", {{1, a}, {-1, r}}, 0.0, total));
      break;
    }
    case 2: {
      const double lambda2 = expected_lines(2, 1e-10);
      out.push_back(linear_relation("sum P(Qj)=1", {{1, classified(2)}}, 1.0, n));
      out.push_back(linear_relation("P(Q1)+P(Q2)+P(Q3)=(Lambda2-1)/2",
                                    {{1, P(Q1)}, {1, P(Q2)}, {1, P(Q3)}}, (lambda2 - 1.0) / 2.0, n));
      out.push_back(linear_relation("P(Q1)=P(Q3)+P(Q5)", {{1, P(Q1)}, {-1, P(Q3)}, {-1, P(Q5)}}, 0.0, n));
      out.push_back(linear_relation("u2(2)=u2(-2)", {{1, u(2)}, {-1, u(-2)}}, 0.0, n));
      break;
    }
    case 3: {
      const double lambda3 = expected_lines(3, 1e-10);
      std::vector<std::pair<double, double>> weighted;
      for (auto p : {C1, C2, C3, C4, C5}) weighted.emplace_back(4.0, P(p));
      for (auto p : {C6, C7, C8}) weighted.emplace_back(2.0, P(p));
      out.push_back(linear_relation("sum P(Cj)=1", {{1, classified(3)}}, 1.0, n));
      out.push_back(linear_relation("4 sum_1^5 P(Cj)+2 sum_6^8 P(Cj)=Lambda3", weighted, lambda3, n));
      out.push_back(linear_relation("P(C1)=P(C5)+P(C8)", {{1, P(C1)}, {-1, P(C5)}, {-1, P(C8)}}, 0.0, n));
      out.push_back(linear_relation("P(C2)+P(C6)=P(C3)+P(C4)+P(C7)+P(C9)",
                                    {{1, P(C2)}, {1, P(C6)}, {-1, P(C3)}, {-1, P(C4)},
                                     {-1, P(C7)}, {-1, P(C9)}},
                                    0.0, n));
      out.push_back(linear_relation("u3(1)=u3(-1)", {{1, u(1)}, {-1, u(-1)}}, 0.0, n));
      out.push_back(linear_relation("u3(3)=u3(-3)", {{1, u(3)}, {-1, u(-3)}}, 0.0, n));
      out.push_back(linear_relation("a3=r3", {{1, a}, {-1, r}}, 0.0, total));
      break;
    }
    default:
      throw std::invalid_argument("relations are defined for degrees 1-3");
  }
  return out;
}

int default_partitions()
{
  if (const char* env = std::getenv("PHASEPROB_PARTITIONS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 4096)
      return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace phaseprob
