// phaseprob: classify, estimate, lambda, selfcheck and svg subcommands.
//
// Exit codes: 0 success, 2 usage or parse error, 3 degenerate input,
// 4 numerical failure or self-check mismatch.

#include "phaseprob/classifier.hpp"
#include "phaseprob/index.hpp"
#include "phaseprob/invlines.hpp"
#include "phaseprob/kostlan.hpp"
#include "phaseprob/montecarlo.hpp"
#include "phaseprob/quadrature.hpp"
#include "phaseprob/report_io.hpp"
#include "phaseprob/selfcheck.hpp"
#include "phaseprob/svg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace phaseprob;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitNumerical = 4;

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Accepts "1000000", "1e6", "2.5e5"; rejects fractions and values < 1.
std::uint64_t parse_count(const std::string& text)
{
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: " + text);
  }
  if (used != text.size() || !std::isfinite(v) || v < 1.0 || v != std::floor(v) || v > 1e15)
    throw UsageError("expected a positive integer count, got " + text);
  return static_cast<std::uint64_t>(v);
}

VectorField parse_field(const std::string& coeffs, std::optional<int> degree)
{
  std::vector<double> c;
  try {
    c = parse_coefficients(coeffs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.size() < 4 || c.size() % 2 != 0)
    throw UsageError("expected 2n+2 coefficients, got " + std::to_string(c.size()));
  const int n = static_cast<int>(c.size()) / 2 - 1;
  if (degree && *degree != n)
    throw UsageError("degree " + std::to_string(*degree) + " needs " + std::to_string(2 * *degree + 2) +
                     " coefficients, got " + std::to_string(c.size()));
  return VectorField::from_flat(n, c);
}

void write_output(const std::string& path, const std::string& text)
{
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path);
  out << text;
  if (!out)
    throw std::runtime_error("write failed: " + path);
}

std::string join(const std::vector<std::string>& parts)
{
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ", ";
    s += p;
  }
  return s;
}

std::vector<std::string> wellposed_violations(const VectorField& f)
{
  switch (f.degree()) {
    case 2: return quadratic_index_data(f).violations;
    case 3: return cubic_index_data(f).violations;
    default: return {};
  }
}

struct ClassifyArgs
{
  std::string coeffs;
  std::optional<int> degree;
  std::string format = "text";
  bool oracle_fallback = false;
};

int cmd_classify(const ClassifyArgs& args)
{
  const VectorField f = parse_field(args.coeffs, args.degree);
  const auto outcome =
    classify(f, {.allow_vertical_line = true, .oracle_fallback = args.oracle_fallback});

  std::optional<std::string> stability;
  if (f.degree() % 2 == 1 && std::holds_alternative<Classified>(outcome)) {
    try {
      stability = std::string(to_string(global_stability(f)));
    } catch (const BandHitError& e) {
      stability = std::string("undetermined (") + e.what() + ")";
    }
  }
  const auto violations = wellposed_violations(f);

  if (args.format == "json") {
    auto j = outcome_to_json(f, outcome);
    j["wellposed"] = violations.empty();
    j["wellposed_violations"] = violations;
    if (stability) j["stability"] = *stability;
    std::cout << j.dump(2) << '\n';
  } else if (const auto* c = std::get_if<Classified>(&outcome)) {
    std::cout << to_string(c->label) << " (i=" << c->index << ", l=" << c->lines << ")\n";
    std::cout << "index source: " << to_string(c->index_source) << '\n';
    if (f.degree() >= 2)
      std::cout << "well-posed: " << (violations.empty() ? "yes" : "no (" + join(violations) + ")") << '\n';
    if (c->vertical_line) std::cout << "x = 0 is an invariant line\n";
    if (c->tiebreak_used) std::cout << "(1,4) resolved by the infinity-sign tiebreak\n";
    if (stability) std::cout << "global stability: " << *stability << '\n';
  } else if (const auto* d = std::get_if<Degenerate>(&outcome)) {
    std::cout << "degenerate: " << join(d->reasons) << '\n';
  } else {
    const auto& u = std::get<UnrealizedPair>(outcome);
    std::cout << "unrealized pair (i=" << u.index << ", l=" << u.lines << ")\n";
  }

  if (std::holds_alternative<Degenerate>(outcome)) return kExitDegenerate;
  if (std::holds_alternative<UnrealizedPair>(outcome)) return kExitNumerical;
  return kExitOk;
}

struct EstimateArgs
{
  int degree = 2;
  std::string samples = "1e6";
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> partitions;
  std::string out;
  std::string format = "json";
  bool oracle_fallback = false;
  bool timing = false;
};

int cmd_estimate(const EstimateArgs& args)
{
  SamplerConfig cfg;
  cfg.degree = args.degree;
  cfg.samples = parse_count(args.samples);
  cfg.seed = args.seed;
  cfg.partitions = args.partitions.value_or(default_partitions());
  cfg.oracle_fallback = args.oracle_fallback;
  if (cfg.partitions < 1)
    throw UsageError("partitions must be >= 1");

  const auto report = estimate(cfg);
  const std::string text = args.format == "csv" ? report_to_csv(report)
                                                : report_to_json(report, args.timing).dump(2) + "\n";
  write_output(args.out, text);

  // Keep stdout clean when the report itself goes there.
  std::FILE* log = (args.out.empty() || args.out == "-") ? stderr : stdout;
  for (const auto& r : check_relations(report))
    std::fprintf(log, "%-34s residual %+.3e  z %+.2f\n", r.name.c_str(), r.residual, r.z);
  std::fprintf(log, "degenerate %.2e  unrealized %.2e  wall %.2fs\n", report.degenerate_fraction(),
               report.unrealized_fraction(), report.wall_seconds);
  return kExitOk;
}

int cmd_lambda(int n, double tol)
{
  if (tol <= 0.0)
    throw UsageError("tolerance must be positive");
  std::printf("%.10f\n", expected_lines(n, tol));
  return kExitOk;
}

int cmd_selfcheck(int degree, const std::string& samples, std::uint64_t seed)
{
  const auto r = run_selfcheck(degree, parse_count(samples), seed);
  std::printf("index: %llu checked, %llu mismatches, %llu skipped\n",
              static_cast<unsigned long long>(r.index_checked),
              static_cast<unsigned long long>(r.index_mismatches),
              static_cast<unsigned long long>(r.index_skipped));
  std::printf("roots: %llu checked, %llu mismatches, %llu skipped\n",
              static_cast<unsigned long long>(r.roots_checked),
              static_cast<unsigned long long>(r.roots_mismatches),
              static_cast<unsigned long long>(r.roots_skipped));
  std::printf("%s\n", r.passed() ? "PASS" : "FAIL");
  return r.passed() ? kExitOk : kExitNumerical;
}

int cmd_svg(const std::string& coeffs, std::optional<int> degree, const std::string& out, int grid, int pixels)
{
  const VectorField f = parse_field(coeffs, degree);
  write_output(out, direction_field_svg(f, grid, pixels));
  return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Phase portraits of random planar homogeneous polynomial vector fields"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one field");
  classify_cmd->add_option("--coeffs,-c", classify_args.coeffs, "p0,...,pn,q0,...,qn (descending x-power)")
    ->required();
  classify_cmd->add_option("--degree,-n", classify_args.degree, "Degree; inferred from the coefficient count")
    ->check(CLI::Range(1, 3));
  classify_cmd->add_option("--format,-f", classify_args.format)->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_flag("--oracle-fallback", classify_args.oracle_fallback,
                         "Use the winding number when the closed-form index is not well-posed");

  EstimateArgs est;
  auto* estimate_cmd = app.add_subcommand("estimate", "Monte Carlo portrait probabilities");
  estimate_cmd->add_option("--degree,-n", est.degree)->check(CLI::Range(1, 3));
  estimate_cmd->add_option("--samples,-N", est.samples, "Sample count, e.g. 1e6")->capture_default_str();
  estimate_cmd->add_option("--seed,-s", est.seed)->capture_default_str();
  estimate_cmd->add_option("--partitions,-p", est.partitions, "Worker threads (default: $PHASEPROB_PARTITIONS)");
  estimate_cmd->add_option("--out,-o", est.out, "Report path (default: stdout)");
  estimate_cmd->add_option("--format,-f", est.format)->check(CLI::IsMember({"json", "csv"}));
  estimate_cmd->add_flag("--oracle-fallback", est.oracle_fallback);
  estimate_cmd->add_flag("--timing", est.timing, "Include wall time in the JSON report");

  int lambda_n = 1;
  double lambda_tol = 1e-10;
  auto* lambda_cmd = app.add_subcommand("lambda", "Expected number of invariant lines");
  lambda_cmd->add_option("--degree,-n", lambda_n)->check(CLI::Range(1, 64));
  lambda_cmd->add_option("--tolerance,-t", lambda_tol)->capture_default_str();

  int check_degree = 2;
  std::string check_samples = "1e4";
  std::uint64_t check_seed = kDefaultSeed;
  auto* check_cmd = app.add_subcommand("selfcheck", "Closed forms vs numerical oracles");
  check_cmd->add_option("--degree,-n", check_degree)->check(CLI::Range(1, 3));
  check_cmd->add_option("--samples,-N", check_samples)->capture_default_str();
  check_cmd->add_option("--seed,-s", check_seed)->capture_default_str();

  std::string svg_coeffs, svg_out;
  std::optional<int> svg_degree;
  int svg_grid = 21, svg_pixels = 600;
  auto* svg_cmd = app.add_subcommand("svg", "Direction field picture");
  svg_cmd->add_option("--coeffs,-c", svg_coeffs)->required();
  svg_cmd->add_option("--degree,-n", svg_degree)->check(CLI::Range(1, 16));
  svg_cmd->add_option("--out,-o", svg_out, "SVG path (default: stdout)");
  svg_cmd->add_option("--grid", svg_grid)->check(CLI::Range(2, 200));
  svg_cmd->add_option("--pixels", svg_pixels)->check(CLI::Range(50, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_args);
    if (*estimate_cmd) return cmd_estimate(est);
    if (*lambda_cmd) return cmd_lambda(lambda_n, lambda_tol);
    if (*check_cmd) return cmd_selfcheck(check_degree, check_samples, check_seed);
    if (*svg_cmd) return cmd_svg(svg_coeffs, svg_degree, svg_out, svg_grid, svg_pixels);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateFieldError& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
