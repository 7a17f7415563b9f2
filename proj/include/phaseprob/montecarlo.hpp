#pragma once

#include "phaseprob/classifier.hpp"
#include "phaseprob/field.hpp"
#include "phaseprob/rng.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace phaseprob {

inline constexpr std::uint64_t kDefaultSeed = 42;

// 2n+2 i.i.d. N(0,1) coefficients, p first then q, from the given stream.
VectorField sample_field(int degree, NormalStream& stream);

struct SamplerConfig
{
  int degree = 2;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  int partitions = 1;
  bool oracle_fallback = false;
};

// Integer tallies of one partition; merging is associative and commutative.
struct Tally
{
  std::array<std::uint64_t, kPortraitCount> labels{};
  std::map<int, std::uint64_t> index;
  std::map<int, std::uint64_t> lines;
  std::uint64_t attractor = 0;
  std::uint64_t repeller = 0;
  std::uint64_t stability_band_hits = 0;
  std::uint64_t degenerate = 0;
  std::map<std::string, std::uint64_t> degenerate_reasons;
  std::uint64_t unrealized = 0;
  std::map<std::pair<int, int>, std::uint64_t> unrealized_pairs;
  std::uint64_t tiebreaks = 0;
  std::uint64_t forced_index = 0;
  std::uint64_t oracle_fallbacks = 0;

  void record(const VectorField& f, const ClassificationOutcome& outcome);
  void merge(const Tally& other);
};

struct Estimate
{
  std::uint64_t count = 0;
  double frequency = 0.0;
  double stderr_ = 0.0;
};

struct EstimationReport
{
  SamplerConfig config;
  Tally tally;
  double wall_seconds = 0.0;

  Estimate label(Portrait p) const;
  Estimate index(int k) const;
  Estimate lines(int k) const;
  Estimate attractor() const;
  Estimate repeller() const;
  double degenerate_fraction() const;
  double unrealized_fraction() const;

private:
  Estimate make(std::uint64_t count) const;
};

// Classifies config.samples random fields across config.partitions threads.
// Sample i always uses NormalStream(seed, i), so the report depends only on
// (degree, samples, seed, oracle_fallback).
EstimationReport estimate(const SamplerConfig& config);

struct Relation
{
  std::string name;
  double residual = 0.0;
  double z = 0.0;
};

// Residuals and z-scores of the identities between portrait probabilities
// (degree 2 and 3) or of the exact linear probabilities (degree 1).
std::vector<Relation> check_relations(const EstimationReport& report);

// Partition count from PHASEPROB_PARTITIONS, else the hardware concurrency.
int default_partitions();

} // namespace phaseprob
