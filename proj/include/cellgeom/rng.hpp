#pragma once

#include <array>
#include <cstdint>

namespace cellgeom {

// Philox4x32-10 counter-based generator (Salmon et al., Random123). Each
// (key, counter) pair maps to 128 independent output bits, so disjoint
// streams are simply disjoint counters: no state to carry across threads,
// and parallel/serial runs are bit-identical by construction.
struct Philox4x32 {
  static std::array<std::uint32_t, 4> block(
      const std::array<std::uint32_t, 4>& counter,
      const std::array<std::uint32_t, 2>& key);
};

// Random stream for one Monte Carlo trial, keyed by (seed, stream index).
// Draws consume 64-bit words from successive Philox blocks.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double uniform();                   // [0, 1), 53-bit resolution
  double exponential(double rate);    // mean 1/rate
  bool bernoulli(double p);
  std::int64_t poisson(double mean);  // Knuth below 10, Hormann PTRS above

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint64_t, 2> buffer_{};
  int available_ = 0;

  void refill();
};

// Stable 64-bit mix used to derive per-cell seeds from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cellgeom
