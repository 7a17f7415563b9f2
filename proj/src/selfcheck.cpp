#include "phaseprob/selfcheck.hpp"

#include "phaseprob/index.hpp"
#include "phaseprob/montecarlo.hpp"
#include "phaseprob/realroots.hpp"
#include "phaseprob/rng.hpp"

namespace phaseprob {

namespace {

// Distinct from the sampling streams of the index check.
constexpr std::uint64_t kRootStreamOffset = std::uint64_t{1} << 62;

} // namespace

SelfCheckReport check_index_oracle(int degree, std::uint64_t samples, std::uint64_t seed,
                                   const IndexFunction& index)
{
  const IndexFunction symbolic = index ? index : IndexFunction(symbolic_index);
  SelfCheckReport out;
  out.degree = degree;

  for (std::uint64_t i = 0; i < samples; ++i) {
    NormalStream stream(seed, i);
    const auto f = sample_field(degree, stream);
    int expected = 0;
    try {
      expected = symbolic(f);
    } catch (const NotWellPosedError&) {
      ++out.index_skipped;
      continue;
    } catch (const DegenerateFieldError&) {
      ++out.index_skipped;
      continue;
    }
    try {
      if (winding_index(f) != expected) ++out.index_mismatches;
      ++out.index_checked;
    } catch (const WindingError&) {
      ++out.index_skipped;
    }
  }
  return out;
}

SelfCheckReport check_root_oracle(std::uint64_t samples, std::uint64_t seed)
{
  SelfCheckReport out;
  for (std::uint64_t i = 0; i < samples; ++i) {
    NormalStream stream(seed, kRootStreamOffset + i);
    const double lead3 = stream.next();
    const double a = stream.next() / lead3, b = stream.next() / lead3, c = stream.next() / lead3;
    try {
      const auto profile = cubic_signature(a, b, c);
      const auto roots = companion_roots(Poly({c, b, a, 1.0}));
      int neg = 0, pos = 0;
      for (auto z : roots) {
        if (!is_numerically_real(z)) continue;
        (z.real() < 0 ? neg : pos) += 1;
      }
      if (neg != profile.n_negative || pos != profile.n_positive) ++out.roots_mismatches;
      ++out.roots_checked;
    } catch (const DegenerateSignsError&) {
      ++out.roots_skipped;
    }

    const double lead4 = stream.next();
    double q[4];
    for (double& v : q) v = stream.next() / lead4;
    try {
      const int count = quartic_real_count(q[0], q[1], q[2], q[3]);
      const auto roots = companion_roots(Poly({q[3], q[2], q[1], q[0], 1.0}));
      if (count != count_real(roots)) ++out.roots_mismatches;
      ++out.roots_checked;
    } catch (const DegenerateSignsError&) {
      ++out.roots_skipped;
    }
  }
  return out;
}

SelfCheckReport run_selfcheck(int degree, std::uint64_t samples, std::uint64_t seed,
                              const IndexFunction& index)
{
  auto out = check_index_oracle(degree, samples, seed, index);
  const auto roots = check_root_oracle(samples, seed);
  out.roots_checked = roots.roots_checked;
  out.roots_mismatches = roots.roots_mismatches;
  out.roots_skipped = roots.roots_skipped;
  return out;
}

} // namespace phaseprob
