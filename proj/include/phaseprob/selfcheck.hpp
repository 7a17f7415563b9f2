#pragma once

#include "phaseprob/field.hpp"

#include <cstdint>
#include <functional>

namespace phaseprob {

using IndexFunction = std::function<int(const VectorField&)>;

struct SelfCheckReport
{
  int degree = 0;
  std::uint64_t index_checked = 0;
  std::uint64_t index_mismatches = 0;
  std::uint64_t index_skipped = 0;      // not well-posed or winding failed
  std::uint64_t roots_checked = 0;
  std::uint64_t roots_mismatches = 0;
  std::uint64_t roots_skipped = 0;      // lemma gating quantity in band

  bool passed() const { return index_mismatches == 0 && roots_mismatches == 0; }
};

// Closed-form index vs winding number on `samples` random fields; fills the
// index_* counters.
SelfCheckReport check_index_oracle(int degree, std::uint64_t samples, std::uint64_t seed,
                                   const IndexFunction& index = {});

// Cubic and quartic root lemmas vs companion-matrix eigenvalues on `samples`
// random monicized polynomials of each kind; fills the roots_* counters.
SelfCheckReport check_root_oracle(std::uint64_t samples, std::uint64_t seed);

// Both of the above with the same sample count and seed.
SelfCheckReport run_selfcheck(int degree, std::uint64_t samples, std::uint64_t seed,
                              const IndexFunction& index = {});

} // namespace phaseprob
