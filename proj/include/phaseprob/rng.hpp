#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace phaseprob {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11): a keyed
// bijection of a 128-bit counter, so any draw is addressable without state.
class Philox4x32
{
public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter ctr, Key key)
  {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
};

// Standard normal variates for one sample: block b of sample i is the
// Philox output at counter (i_lo, i_hi, b, 0) under key = seed, turned into
// two normals by Box-Muller.
class NormalStream
{
public:
  NormalStream(std::uint64_t seed, std::uint64_t sample_index)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      sample_(sample_index)
  {
  }

  double next()
  {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const auto out = Philox4x32::generate(
      {static_cast<std::uint32_t>(sample_), static_cast<std::uint32_t>(sample_ >> 32), block_++, 0},
      key_);
    const double u1 = to_open_unit((std::uint64_t{out[0]} << 32) | out[1]);
    const double u2 = to_open_unit((std::uint64_t{out[2]} << 32) | out[3]);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // 52 random bits mapped to the open interval (0, 1).
  static double to_open_unit(std::uint64_t bits)
  {
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
  }

private:
  Philox4x32::Key key_;
  std::uint64_t sample_;
  std::uint32_t block_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace phaseprob
